"""Finite groups as dense multiplication tables.

Groups are built by closing a generator set under multiplication. Elements
are numbered in breadth-first discovery order with the identity first, so a
fixed generator list always yields the same table.

Products read left to right: ``G.mul(a, b)`` is "a then b". For permutations
this means ``(p * q)(i) == q(p(i))``; for matrices it is the ordinary product
``A @ B`` acting on row vectors, which is the same convention.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import (
    AbelianGroup,
    ClosureExceedsCap,
    EmptyGeneratorSet,
    IndexOutOfRange,
    SingularGenerator,
)

DEFAULT_CAP = 10_000


class Permutation:
    """A bijection of ``{0, ..., degree - 1}``."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Sequence[int]):
        mapping = tuple(int(i) for i in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a permutation: {mapping}")
        self.mapping = mapping

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, (0, 1, 2))``."""
        m = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                m[a] = b
        return cls(m)

    @property
    def degree(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        q = other.mapping
        return Permutation(q[i] for i in self.mapping)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen or self.mapping[start] == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.mapping[i]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable finite group given by its multiplication table.

    ``table[a, b]`` is the index of ``a * b``. Element 0 is the identity.
    ``elements`` keeps the concrete objects the group was closed from
    (permutations, matrices, pairs) when available.
    """

    table: np.ndarray
    inverse: np.ndarray
    labels: tuple[str, ...]
    elements: tuple | None = None
    identity: int = 0

    def __post_init__(self):
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)
        if self.elements is not None:
            object.__setattr__(
                self, "_index", {e: i for i, e in enumerate(self.elements)}
            )

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = int(self.table[acc, x])
        return acc

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inverse[x]), -k
        acc = self.identity
        for _ in range(k):
            acc = int(self.table[acc, x])
        return acc

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = int(self.table[y, x])
            k += 1
        return k

    def index_of(self, obj: Hashable) -> int:
        try:
            return self._index[obj]
        except (AttributeError, KeyError):
            raise KeyError(f"{obj!r} is not an element of this group") from None

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def check_axioms(self) -> bool:
        """Exhaustive check of identity, inverses and associativity (O(n^3))."""
        n, t = self.order, self.table
        idx = np.arange(n)
        if not (np.array_equal(t[self.identity], idx) and np.array_equal(t[:, self.identity], idx)):
            return False
        if not np.all(t[idx, self.inverse] == self.identity):
            return False
        # (a*b)*c == a*(b*c) for all triples, one row of a at a time.
        for a in range(n):
            if not np.array_equal(t[t[a]], t[a][t]):
                return False
        return True


def _close(
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    cap: int,
    label: Callable[[Hashable], str] = str,
) -> FiniteGroup:
    if not gens:
        raise EmptyGeneratorSet("at least one generator is required")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        e = queue.popleft()
        for g in gens:
            h = mul(e, g)
            if h not in index:
                if len(elements) >= cap:
                    raise ClosureExceedsCap(f"more than {cap} elements generated")
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[mul(a, b)]
    inverse = np.argmax(table == 0, axis=1).astype(np.int64)
    return FiniteGroup(table, inverse, tuple(label(e) for e in elements), tuple(elements))


def from_permutation_generators(
    gens: Sequence[Permutation], cap: int = DEFAULT_CAP
) -> FiniteGroup:
    """Close a list of permutations of a common degree into a group."""
    if not gens:
        raise EmptyGeneratorSet("at least one generator is required")
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise ValueError("all generators must share one degree")
    return _close(list(gens), Permutation.__mul__, Permutation.identity(degrees.pop()), cap)


def _matmul_mod(p: int):
    def mul(a, b):
        (a00, a01), (a10, a11) = a
        (b00, b01), (b10, b11) = b
        return (
            ((a00 * b00 + a01 * b10) % p, (a00 * b01 + a01 * b11) % p),
            ((a10 * b00 + a11 * b10) % p, (a10 * b01 + a11 * b11) % p),
        )

    return mul


def _matrix_label(m) -> str:
    return "[" + ";".join(" ".join(str(v) for v in row) for row in m) + "]"


def from_matrix_generators(
    p: int, gens: Iterable[Sequence[Sequence[int]]], cap: int = DEFAULT_CAP
) -> FiniteGroup:
    """Close invertible 2x2 matrices over Z_p into a group."""
    mats = []
    for g in gens:
        m = tuple(tuple(int(v) % p for v in row) for row in g)
        if len(m) != 2 or any(len(row) != 2 for row in m):
            raise ValueError("generators must be 2x2 matrices")
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p == 0:
            raise SingularGenerator(f"{_matrix_label(m)} is singular mod {p}")
        mats.append(m)
    return _close(mats, _matmul_mod(p), ((1, 0), (0, 1)), cap, _matrix_label)


def from_multiplication(
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    cap: int = DEFAULT_CAP,
    label: Callable[[Hashable], str] = str,
) -> FiniteGroup:
    """Close generators under an arbitrary associative multiplication."""
    return _close(list(gens), mul, identity, cap, label)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H on pairs; pair ``(g, h)`` gets index ``g * |H| + h``."""
    n, k = G.order, H.order
    tg = np.repeat(np.repeat(G.table, k, axis=0), k, axis=1)
    th = np.tile(H.table, (n, n))
    table = tg * k + th
    inverse = (np.repeat(G.inverse, k) * k + np.tile(H.inverse, n)).astype(np.int64)
    labels = tuple(f"({a},{b})" for a in G.labels for b in H.labels)
    elements = tuple((a, b) for a in range(n) for b in range(k))
    return FiniteGroup(table.astype(np.int64), inverse, labels, elements)


def cyclic(k: int) -> FiniteGroup:
    return from_multiplication([1 % k], lambda a, b: (a + b) % k, 0)


def metacyclic(m: int, k: int, r: int, t: int = 0) -> FiniteGroup:
    """<a, x | a^m = 1, x^k = a^t, x^-1 a x = a^r> on pairs ``(i, e) = a^i x^e``.

    Generators are ``(1, 0)`` (a) and ``(0, 1)`` (x), in that order.
    """
    r %= m
    if pow(r, k, m) != 1 % m or (t * r - t) % m:
        raise ValueError("inconsistent metacyclic data")
    s = pow(r, -1, m) if m > 1 else 0  # x a x^-1 = a^s

    def mul(u, v):
        (i, e), (j, f) = u, v
        i = (i + j * pow(s, e, m)) % m
        e += f
        if e >= k:
            e -= k
            i = (i + t) % m
        return (i, e)

    def label(u):
        i, e = u
        parts = ([f"a^{i}"] if i else []) + ([f"x^{e}"] if e else [])
        return "".join(parts) or "1"

    gens = [(1 % m, 0), (0, 1 % k)] if k > 1 else [(1 % m, 0)]
    return from_multiplication(gens, mul, (0, 0), label=label)


# -- centres, centralisers, commuting graphs --------------------------------


def _commute_matrix(G: FiniteGroup) -> np.ndarray:
    return G.table == G.table.T


def center(G: FiniteGroup) -> frozenset[int]:
    c = _commute_matrix(G).all(axis=1)
    return frozenset(int(i) for i in np.flatnonzero(c))


def centralizer(G: FiniteGroup, x: int) -> frozenset[int]:
    if not 0 <= x < G.order:
        raise IndexOutOfRange(f"element {x} outside group of order {G.order}")
    row = G.table[x] == G.table[:, x]
    return frozenset(int(i) for i in np.flatnonzero(row))


@dataclass(frozen=True)
class CentralizerCensus:
    """Distinct centralisers of non-central elements, counted by size."""

    entries: tuple[tuple[int, int], ...]  # (size, count), size descending

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __str__(self):
        return "{" + ", ".join(f"({s},{c})" for s, c in self.entries) + "}"


def _noncentral(G: FiniteGroup) -> list[int]:
    z = center(G)
    if len(z) == G.order:
        raise AbelianGroup("group is abelian: no non-central elements")
    return [x for x in range(G.order) if x not in z]


def distinct_centralizers(G: FiniteGroup) -> list[frozenset[int]]:
    seen: dict[frozenset[int], None] = {}
    for x in _noncentral(G):
        seen.setdefault(centralizer(G, x))
    return list(seen)


def centralizer_census(G: FiniteGroup) -> CentralizerCensus:
    counts = Counter(len(c) for c in distinct_centralizers(G))
    return CentralizerCensus(tuple(sorted(counts.items(), reverse=True)))


def _is_abelian_subset(G: FiniteGroup, s: frozenset[int]) -> bool:
    idx = np.fromiter(sorted(s), dtype=np.int64)
    sub = G.table[np.ix_(idx, idx)]
    return bool(np.array_equal(sub, sub.T))


def is_ac_group(G: FiniteGroup) -> bool:
    return all(_is_abelian_subset(G, c) for c in distinct_centralizers(G))


def commuting_graph(G: FiniteGroup):
    """Graph on the non-central elements, edges between commuting pairs.

    Vertex ``i`` of the result carries the group element index in
    ``graph.labels[i]``.
    """
    from .graphs import SimpleGraph

    verts = np.array(_noncentral(G), dtype=np.int64)
    adj = _commute_matrix(G)[np.ix_(verts, verts)].copy()
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj, labels=tuple(int(v) for v in verts))


def noncommuting_graph(G: FiniteGroup):
    return commuting_graph(G).complement()
