"""Simple graphs, the shape vocabulary, and shape recognition.

Shape expressions use a small grammar::

    union := join ('+' join)*          disjoint union (also '⊔')
    join  := factor ('v' factor)*      join (also '∨')
    factor:= INT '*'? factor | atom    k copies, e.g. 3*K2 or 3K2
    atom  := 'K' INT | 'F' INT | 'D' | '(' union ')'

``K<n>`` is the complete graph, ``F<m>`` the friendship graph K1 v mK2, and
``D`` the nine-vertex graph made of four triangles glued at three vertices.
"""

from __future__ import annotations

import functools
import math
import re
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedExpression


class SimpleGraph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``labels`` optionally maps each vertex back to an outside identifier
    (a group element, or a vertex of a parent graph).
    """

    __slots__ = ("adj", "labels", "_degrees")

    def __init__(self, adjacency, labels: Sequence | None = None):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.setflags(write=False)
        self.adj = adj
        self.labels = tuple(labels) if labels is not None else tuple(range(adj.shape[0]))
        if len(self.labels) != adj.shape[0]:
            raise ValueError("one label per vertex")
        self._degrees = adj.sum(axis=1).astype(np.int64)
        self._degrees.setflags(write=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @classmethod
    def empty(cls, n: int = 0) -> "SimpleGraph":
        return cls(np.zeros((n, n), dtype=bool))

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def m(self) -> int:
        return int(self._degrees.sum()) // 2

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def complement(self) -> "SimpleGraph":
        c = ~self.adj
        np.fill_diagonal(c, False)
        return SimpleGraph(c, self.labels)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        p = np.asarray(perm)
        inv = np.empty_like(p)
        inv[p] = np.arange(len(p))
        return SimpleGraph(self.adj[np.ix_(inv, inv)])

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        idx = np.asarray(vertices, dtype=np.int64)
        return SimpleGraph(self.adj[np.ix_(idx, idx)], [self.labels[i] for i in vertices])

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"


def complement(g: SimpleGraph) -> SimpleGraph:
    return g.complement()


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    n = sum(g.n for g in graphs)
    adj = np.zeros((n, n), dtype=bool)
    off = 0
    for g in graphs:
        adj[off:off + g.n, off:off + g.n] = g.adj
        off += g.n
    return SimpleGraph(adj)


def join(*graphs: SimpleGraph) -> SimpleGraph:
    n = sum(g.n for g in graphs)
    adj = np.ones((n, n), dtype=bool)
    off = 0
    for g in graphs:
        adj[off:off + g.n, off:off + g.n] = g.adj
        off += g.n
    return SimpleGraph(adj)


def complete_graph(k: int) -> SimpleGraph:
    adj = np.ones((k, k), dtype=bool)
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj)


def friendship_graph(m: int) -> SimpleGraph:
    """K1 v mK2: hub 0, triangle ``(0, 2i+1, 2i+2)`` for each i."""
    return join(complete_graph(1), disjoint_union(*[complete_graph(2)] * m))


# Four triangles ABC, CDE, EFG, DHI: a central triangle CDE with one
# triangle hanging off each of its corners.
_D_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4),
            (4, 5), (4, 6), (5, 6), (3, 7), (3, 8), (7, 8)]


def graph_d() -> SimpleGraph:
    return SimpleGraph.from_edges(9, _D_EDGES)


def components(g: SimpleGraph) -> list[SimpleGraph]:
    """Connected components ordered by smallest vertex.

    Each component's ``labels`` are the vertex indices in ``g``.
    """
    seen = np.zeros(g.n, dtype=bool)
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in np.flatnonzero(g.adj[v] & ~seen):
                seen[u] = True
                stack.append(int(u))
        comp.sort()
        sub = g.adj[np.ix_(comp, comp)]
        out.append(SimpleGraph(sub, comp))
    return out


# -- shape expressions -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(K|F|D)|(v|∨)|(\+|⊔)|(\*|·)|(\()|(\)))")


def _tokenize(expr: str) -> list[tuple[str, str]]:
    toks, pos = [], 0
    expr = expr.strip()
    while pos < len(expr):
        mt = _TOKEN.match(expr, pos)
        if not mt:
            raise MalformedExpression(f"unexpected character at {pos} in {expr!r}")
        kind = ("int", "atom", "join", "union", "times", "lpar", "rpar")[mt.lastindex - 1]
        toks.append((kind, mt.group(mt.lastindex)))
        pos = mt.end()
        while pos < len(expr) and expr[pos].isspace():
            pos += 1
    return toks


class _Parser:
    def __init__(self, expr: str):
        self.expr = expr
        self.toks = _tokenize(expr)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            raise MalformedExpression(f"expected {kind} in {self.expr!r}")
        tok = self.toks[self.i][1]
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise MalformedExpression("empty shape expression")
        node = self.union()
        if self.i != len(self.toks):
            raise MalformedExpression(f"trailing input in {self.expr!r}")
        return node

    def union(self):
        parts = [self.join()]
        while self.peek() == "union":
            self.take("union")
            parts.append(self.join())
        return parts[0] if len(parts) == 1 else ("+", parts)

    def join(self):
        parts = [self.factor()]
        while self.peek() == "join":
            self.take("join")
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else ("v", parts)

    def factor(self):
        if self.peek() == "int":
            k = int(self.take("int"))
            if self.peek() == "times":
                self.take("times")
            if k < 1:
                raise MalformedExpression("multiplier must be positive")
            return ("*", k, self.factor())
        return self.atom()

    def atom(self):
        if self.peek() == "lpar":
            self.take("lpar")
            node = self.union()
            self.take("rpar")
            return node
        name = self.take("atom")
        if name == "D":
            return ("D",)
        k = int(self.take("int"))
        if k < 1:
            raise MalformedExpression(f"{name}{k} needs a positive size")
        return (name, k)


def parse_shape(expr: str):
    return _Parser(expr).parse()


def _build(node) -> SimpleGraph:
    tag = node[0]
    if tag == "K":
        return complete_graph(node[1])
    if tag == "F":
        return friendship_graph(node[1])
    if tag == "D":
        return graph_d()
    if tag == "*":
        return disjoint_union(*[_build(node[2])] * node[1])
    if tag == "+":
        return disjoint_union(*map(_build, node[1]))
    return join(*map(_build, node[1]))


def build_shape(expr: str) -> SimpleGraph:
    """Graph for a shape expression, vertices numbered component by component."""
    return _build(parse_shape(expr))


# -- recognition ---------------------------------------------------------------

CANONICAL_LIMIT = 10  # exhaustive canonical forms only up to this many vertices
_SEARCH_LIMIT = 200_000


def _refined_cells(adj: np.ndarray) -> list[list[int]]:
    """Colour refinement; cells listed in an isomorphism-invariant order."""
    n = adj.shape[0]
    colour = [0] * n
    ncol = 1
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in np.flatnonzero(adj[v]))))
               for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(palette) == ncol:
            break
        colour, ncol = new, len(palette)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_certificate(g: SimpleGraph) -> str | None:
    """Canonical string for ``g`` or None when the search would be too large.

    Vertices are ordered cell by cell after colour refinement and permuted
    exhaustively inside cells; the lexicographically smallest upper-triangle
    bit string wins.
    """
    if g.n > CANONICAL_LIMIT:
        return None
    return _certificate(g.n, g.adj.tobytes())


@functools.lru_cache(maxsize=4096)
def _certificate(n: int, raw: bytes) -> str | None:
    adj = np.frombuffer(raw, dtype=bool).reshape(n, n)
    cells = _refined_cells(adj)
    if math.prod(math.factorial(len(c)) for c in cells) > _SEARCH_LIMIT:
        return None
    iu = np.triu_indices(n, 1)
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for part in choice for v in part]
        bits = adj[np.ix_(order, order)][iu].tobytes()
        if best is None or bits < best:
            best = bits
    body = "".join("1" if b else "0" for b in best)
    return f"n{n}:{int(body, 2) if body else 0:x}"


def _degree_certificate(g: SimpleGraph) -> str:
    return f"n{g.n}m{g.m}deg:" + ",".join(map(str, sorted(g.degrees.tolist(), reverse=True)))


_D_CERT = None


def _d_certificate() -> str:
    global _D_CERT
    if _D_CERT is None:
        _D_CERT = canonical_certificate(graph_d())
    return _D_CERT


def _friendship_size(c: SimpleGraph) -> int | None:
    n = c.n
    if n < 5 or n % 2 == 0:
        return None
    m = (n - 1) // 2
    deg = c.degrees
    hubs = np.flatnonzero(deg == 2 * m)
    if len(hubs) != 1 or np.count_nonzero(deg == 2) != 2 * m:
        return None
    hub = int(hubs[0])
    for v in range(n):
        if v == hub:
            continue
        others = [u for u in c.neighbors(v) if u != hub]
        if not c.adj[v, hub] or len(others) != 1:
            return None
    return m


def _describe(c: SimpleGraph) -> tuple:
    n = c.n
    if np.all(c.degrees == n - 1):
        return ("K", n)
    m = _friendship_size(c)
    if m is not None:
        return ("F", m)
    cert = canonical_certificate(c)
    if cert is not None and n == 9 and c.m == len(_D_EDGES) and cert == _d_certificate():
        return ("D",)
    return ("Other", cert if cert is not None else _degree_certificate(c))


def _component_key(d: tuple):
    rank = {"K": 0, "F": 1, "D": 2, "Other": 3}[d[0]]
    size = d[1] if len(d) > 1 and isinstance(d[1], int) else 0
    return (rank, -size, str(d[1:]))


def _component_str(d: tuple) -> str:
    if d[0] == "K":
        return f"K{d[1]}"
    if d[0] == "F":
        return f"F{d[1]}"
    if d[0] == "D":
        return "D"
    return f"Other[{d[1]}]"


@dataclass(frozen=True)
class ShapeDescriptor:
    """Multiset of component descriptors.

    Descriptors are ``("K", k)``, ``("F", m)``, ``("D",)`` or
    ``("Other", certificate)``.
    """

    components: tuple[tuple[tuple, int], ...]  # ((descriptor, count), ...) canonical order

    @classmethod
    def from_counter(cls, counts: Counter) -> "ShapeDescriptor":
        return cls(tuple(sorted(counts.items(), key=lambda kv: _component_key(kv[0]))))

    @classmethod
    def from_expression(cls, expr: str) -> "ShapeDescriptor":
        return recognize_shape(build_shape(expr))

    def counter(self) -> Counter:
        return Counter(dict(self.components))

    @property
    def n(self) -> int:
        return sum(_descriptor_order(d) * k for d, k in self.components)

    def is_fully_recognized(self) -> bool:
        return all(d[0] != "Other" for d, _ in self.components)

    def expression(self) -> str:
        """Shape expression in the grammar understood by :func:`build_shape`."""
        if not self.components:
            return ""
        parts = []
        for d, k in self.components:
            s = _component_str(d)
            parts.append(s if k == 1 else f"{k}*{s}")
        return " + ".join(parts)

    def __str__(self):
        return self.expression()


def _descriptor_order(d: tuple) -> int:
    if d[0] == "K":
        return d[1]
    if d[0] == "F":
        return 2 * d[1] + 1
    if d[0] == "D":
        return 9
    return int(re.match(r"n(\d+)", d[1]).group(1))


def recognize_shape(g: SimpleGraph) -> ShapeDescriptor:
    return ShapeDescriptor.from_counter(Counter(_describe(c) for c in components(g)))


# -- export --------------------------------------------------------------------

_PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    """Graphviz source, one fill colour per connected component."""
    safe = re.sub(r"\W", "_", name) or "G"
    colour = {}
    for i, c in enumerate(components(g)):
        for v in c.labels:
            colour[v] = _PALETTE[i % len(_PALETTE)]
    lines = [f"graph {safe} {{", "  node [style=filled];"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.labels[v]}", fillcolor="{colour[v]}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
