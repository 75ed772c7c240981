"""Graph matrices, exact spectra, energies and energy orderings.

Every reported number comes from the exact pipeline in :mod:`commgraph.poly`.
Rational eigenvalues are exact ``Fraction`` objects. Irrational ones are
pinned down by an integer factor, a root index and an isolating interval
that can be refined on demand. Energies are exact when they can be (this
includes conjugate roots that all sit on one side of the shift) and are
otherwise certified intervals.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import poly
from .errors import UncertifiedComparison, UnsupportedComponent
from .graphs import ShapeDescriptor, SimpleGraph, build_shape, recognize_shape

KINDS = ("A", "L", "Q", "CN")
WIDTH = Fraction(1, 10**12)
_TIE = Fraction(1, 10**9)
_REFINEMENTS = (WIDTH, Fraction(1, 10**30), Fraction(1, 10**60), Fraction(1, 10**120))


# -- matrices ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IntegerSymmetricMatrix:
    kind: str
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64).copy()
        if e.ndim != 2 or e.shape[0] != e.shape[1] or not np.array_equal(e, e.T):
            raise ValueError("matrix must be square and symmetric")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> int:
        return int(np.trace(self.entries))


def matrix_of(g: SimpleGraph, kind: str) -> IntegerSymmetricMatrix:
    A = g.adj.astype(np.int64)
    if kind == "A":
        M = A
    elif kind in ("L", "Q"):
        D = np.diag(A.sum(axis=1))
        M = D - A if kind == "L" else D + A
    elif kind == "CN":
        M = A @ A
        np.fill_diagonal(M, 0)
    else:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {KINDS}")
    return IntegerSymmetricMatrix(kind, M)


# -- eigenvalues ----------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _isolated(factor: poly.Poly) -> tuple[tuple[Fraction, Fraction], ...]:
    roots = tuple(poly.isolate_real_roots(factor))
    if len(roots) != len(factor) - 1:
        raise ArithmeticError(f"{poly.format_poly(factor)} has non-real roots")
    return roots


@functools.lru_cache(maxsize=65536)
def _refined(factor: poly.Poly, index: int, width: Fraction) -> tuple[Fraction, Fraction]:
    lo, hi = _isolated(factor)[index]
    return poly.refine_root(factor, lo, hi, width)


@dataclass(frozen=True)
class Eigenvalue:
    """A real eigenvalue: exact rational, or root ``index`` of ``factor``."""

    exact: Fraction | None
    factor: poly.Poly
    index: int
    lo: Fraction
    hi: Fraction

    @classmethod
    def rational(cls, q) -> "Eigenvalue":
        q = Fraction(q)
        return cls(q, poly.primitive((-q, 1)), 0, q, q)

    @classmethod
    def root(cls, factor: poly.Poly, index: int, width: Fraction = WIDTH) -> "Eigenvalue":
        lo, hi = _refined(factor, index, width)
        return cls(None, factor, index, lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def key(self):
        return ("q", self.exact) if self.is_exact else ("r", self.factor, self.index)

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.mid)

    def refine(self, width: Fraction) -> "Eigenvalue":
        if self.is_exact or self.hi - self.lo <= width:
            return self
        return Eigenvalue.root(self.factor, self.index, width)

    def side_of(self, c: Fraction) -> int:
        """Sign of (value - c), refining until certain. Never 0 for irrationals."""
        if self.is_exact:
            d = self.exact - c
            return (d > 0) - (d < 0)
        width = self.hi - self.lo
        ev = self
        while ev.lo <= c <= ev.hi:
            width /= 2**16
            ev = ev.refine(width)
        return 1 if ev.lo > c else -1

    def as_json(self):
        if self.is_exact:
            return str(self.exact)
        return {"interval": [float(self.lo), float(self.hi)],
                "factor": poly.to_descending(self.factor)}

    def __str__(self):
        if self.is_exact:
            return str(self.exact)
        return f"root{self.index + 1}({poly.format_poly(self.factor)})~{float(self.mid):.12g}"


def _irreducible_parts(g: poly.Poly) -> list[poly.Poly]:
    # A square-free factor with no rational root and degree <= 3 is irreducible.
    if len(g) - 1 <= 3:
        return [poly.primitive(g)]
    import sympy

    x = sympy.Symbol("x")
    _, facs = sympy.Poly(poly.to_descending(g), x).factor_list()
    return [poly.primitive(tuple(int(c) for c in reversed(f.all_coeffs()))) for f, _ in facs]


def eigenvalues_of_poly(f: poly.Poly, bound: int | None = None) -> list[tuple[Eigenvalue, int]]:
    """Roots of a monic integer polynomial with only real roots, with multiplicities."""
    roots, rest = poly.integer_roots(tuple(f), bound)
    out = [(Eigenvalue.rational(r), k) for r, k in roots.items()]
    if len(rest) > 1:
        for g, k in poly.squarefree_decomposition(rest):
            for h in _irreducible_parts(g):
                out.extend((Eigenvalue.root(h, i), k) for i in range(len(h) - 1))
    return out


# -- spectra ----------------------------------------------------------------------


def _merge(pairs: Iterable[tuple[Eigenvalue, int]]) -> tuple[tuple[Eigenvalue, int], ...]:
    acc: dict = {}
    first: dict = {}
    for ev, k in pairs:
        acc[ev.key] = acc.get(ev.key, 0) + k
        first.setdefault(ev.key, ev)
    items = [(first[key], k) for key, k in acc.items()]
    items.sort(key=lambda t: (t[0].mid, repr(t[0].key)), reverse=True)
    return tuple(items)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues with multiplicities, sorted in decreasing order."""

    entries: tuple[tuple[Eigenvalue, int], ...]
    charpoly: poly.CharPoly | None = field(default=None, compare=False)

    @classmethod
    def of(cls, pairs, charpoly=None) -> "SpectrumMultiset":
        return cls(_merge(pairs), charpoly)

    @property
    def n(self) -> int:
        return sum(k for _, k in self.entries)

    def is_rational(self) -> bool:
        return all(ev.is_exact for ev, _ in self.entries)

    def as_dict(self) -> dict:
        """Value -> multiplicity; keys are Fractions or (factor, index) pairs."""
        return {(ev.exact if ev.is_exact else (ev.factor, ev.index)): k for ev, k in self.entries}

    def multiplicity(self, value) -> int:
        if isinstance(value, Eigenvalue):
            key = value.key
        else:
            key = ("q", Fraction(value))
        return sum(k for ev, k in self.entries if ev.key == key)

    def power_sum(self, p: int = 1) -> Fraction:
        """Sum of lambda**p. Exact: irrational parts use Newton sums of their factors."""
        total = Fraction(0)
        seen = set()
        for ev, k in self.entries:
            if ev.is_exact:
                total += k * ev.exact**p
            elif ev.factor not in seen:
                seen.add(ev.factor)
                total += k * _newton_sum(ev.factor, p)
        return total

    def values(self) -> list[float]:
        out = []
        for ev, k in self.entries:
            out.extend([float(ev)] * k)
        return out

    def as_json(self) -> list:
        return [{"value": ev.as_json(), "mult": k} for ev, k in self.entries]

    def __str__(self):
        return "{" + ", ".join(f"({ev})^{k}" for ev, k in self.entries) + "}"


def _newton_sum(f: poly.Poly, p: int) -> Fraction:
    """Sum of p-th powers of all roots of ``f`` (Newton's identities)."""
    d = len(f) - 1
    a = [Fraction(f[d - i], f[d]) for i in range(d + 1)]  # x^d + a1 x^{d-1} + ...
    s = [Fraction(d)]
    for k in range(1, p + 1):
        v = -k * a[k] if k <= d else Fraction(0)
        for i in range(1, min(k, d + 1)):
            v -= a[i] * s[k - i]
        s.append(v)
    return s[p]


def spectrum(M: IntegerSymmetricMatrix) -> SpectrumMultiset:
    entries = M.entries
    if M.n == 0:
        return SpectrumMultiset((), poly.CharPoly((1,)))
    cp = poly.char_poly(entries)
    bound = int(np.abs(entries).sum(axis=1).max())
    return SpectrumMultiset.of(eigenvalues_of_poly(cp.coefficients, bound), cp)


def graph_spectrum(g: SimpleGraph, kind: str) -> SpectrumMultiset:
    return spectrum(matrix_of(g, kind))


def _clique(k: int, kind: str) -> list[tuple[Fraction, int]]:
    if k == 1:
        return [(0, 1)]
    return {
        "A": [(k - 1, 1), (-1, k - 1)],
        "L": [(0, 1), (k, k - 1)],
        "Q": [(2 * k - 2, 1), (k - 2, k - 1)],
        "CN": [((k - 1) * (k - 2), 1), (-(k - 2), k - 1)],
    }[kind]


def _friendship(m: int, kind: str) -> list[tuple[Eigenvalue, int]]:
    def q(pairs):
        return [(Eigenvalue.rational(v), k) for v, k in pairs if k]

    if kind == "A":  # x^2 - x - 2m on the hub/rim quotient
        return q([(1, m - 1), (-1, m)]) + eigenvalues_of_poly((-2 * m, -1, 1))
    if kind == "L":
        return q([(0, 1), (2 * m + 1, 1), (3, m), (1, m - 1)])
    if kind == "Q":  # x^2 - (2m+3)x + 4m on the hub/rim quotient
        return q([(3, m - 1), (1, m)]) + eigenvalues_of_poly((4 * m, -(2 * m + 3), 1))
    if kind == "CN":
        return q([(2 * m, 1), (-1, 2 * m)])
    raise ValueError(f"unknown matrix kind {kind!r}")


def closed_form_spectrum(shape: ShapeDescriptor | str, kind: str) -> SpectrumMultiset:
    """Spectrum of a union of cliques and friendship graphs from closed forms."""
    if isinstance(shape, str):
        shape = recognize_shape(build_shape(shape))
    if kind not in KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    pairs: list[tuple[Eigenvalue, int]] = []
    for d, copies in shape.components:
        if d[0] == "K":
            pairs += [(Eigenvalue.rational(v), k * copies) for v, k in _clique(d[1], kind)]
        elif d[0] == "F":
            pairs += [(ev, k * copies) for ev, k in _friendship(d[1], kind)]
        else:
            raise UnsupportedComponent(f"no closed form for component {d[0]}")
    return SpectrumMultiset.of(pairs)


# -- energies ---------------------------------------------------------------------


@dataclass(frozen=True)
class Energy:
    """A certified energy: exact when ``exact`` is set, else inside [lo, hi]."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None
    # (rational part, ((factor, shift, ((root index, sign * multiplicity), ...)), ...))
    witness: tuple | None = field(default=None, compare=False, repr=False)

    @classmethod
    def of(cls, q) -> "Energy":
        q = Fraction(q)
        return cls(q, q, q, (q, ()))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.mid)

    def decimal(self, places: int = 6) -> str:
        with localcontext() as ctx:
            ctx.prec = 60
            v = Decimal(self.mid.numerator) / Decimal(self.mid.denominator)
            return str(v.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))

    def as_json(self) -> dict:
        out = {"decimal": self.decimal()}
        if self.is_exact:
            out["exact"] = str(self.exact)
        return out

    def __str__(self):
        return str(self.exact) if self.is_exact else f"~{self.decimal()}"


def spectral_energy(multiset: SpectrumMultiset, shift: Fraction = Fraction(0),
                    width: Fraction = WIDTH) -> Energy:
    """Sum of |lambda - shift| over the spectrum.

    Roots of one factor that all lie on the same side of ``shift`` contribute
    an exact rational through the factor's root sum.
    """
    shift = Fraction(shift)
    exact = Fraction(0)
    lo = hi = Fraction(0)
    certain = True
    terms = []
    groups: dict[poly.Poly, list[tuple[Eigenvalue, int]]] = {}
    for ev, k in multiset.entries:
        if ev.is_exact:
            exact += k * abs(ev.exact - shift)
        else:
            groups.setdefault(ev.factor, []).append((ev, k))
    for factor, evs in groups.items():
        d = len(factor) - 1
        sides = {ev.side_of(shift) for ev, _ in evs}
        if len(sides) == 1 and len(evs) == d and len({k for _, k in evs}) == 1:
            root_sum = Fraction(-factor[d - 1], factor[d])
            exact += sides.pop() * evs[0][1] * (root_sum - d * shift)
            continue
        certain = False
        signed = []
        for ev, k in evs:
            ev = ev.refine(width)
            while ev.lo <= shift <= ev.hi:
                ev = ev.refine((ev.hi - ev.lo) / 2**16)
            if ev.lo > shift:
                a, b = ev.lo - shift, ev.hi - shift
                signed.append((ev.index, k))
            else:
                a, b = shift - ev.hi, shift - ev.lo
                signed.append((ev.index, -k))
            lo += k * a
            hi += k * b
        terms.append((factor, shift, tuple(signed)))
    if certain:
        return Energy.of(exact)
    return Energy(exact + lo, exact + hi, None, (exact, tuple(terms)))


def _witness_expr(w: tuple):
    import sympy

    x = sympy.Symbol("x")
    rational, terms = w
    expr = sympy.Rational(rational.numerator, rational.denominator)
    for factor, shift, signed in terms:
        P = sympy.Poly(poly.to_descending(factor), x)
        c = sympy.Rational(shift.numerator, shift.denominator)
        # all roots are real, so CRootOf indices run over them in ascending order
        expr += sum(k * (sympy.CRootOf(P, i) - c) for i, k in signed)
    return expr


def _witness_equal(a: Energy, b: Energy) -> bool:
    """Exact equality of two energies through their algebraic witnesses."""
    if a.witness is None or b.witness is None:
        return False
    if a.witness == b.witness:
        return True
    import sympy

    x = sympy.Symbol("x")
    diff = _witness_expr(a.witness) - _witness_expr(b.witness)
    return sympy.minimal_polynomial(diff, x) == x


def _certified_cmp(a: Callable[[Fraction], Energy], b: Callable[[Fraction], Energy]) -> int:
    """-1, 0 or 1 comparing two energies given as width -> Energy functions."""
    for w in _REFINEMENTS:
        x, y = a(w), b(w)
        if x.is_exact and y.is_exact:
            return (x.exact > y.exact) - (x.exact < y.exact)
        if x.hi < y.lo:
            return -1
        if x.lo > y.hi:
            return 1
        if max(x.hi - y.lo, y.hi - x.lo) < _TIE and _witness_equal(x, y):
            return 0
    raise UncertifiedComparison("energies could not be separated after refinement")


def _exceeds(e: Callable[[Fraction], Energy], bound: int) -> bool:
    return _certified_cmp(e, lambda w: Energy.of(bound)) > 0


def _below(e: Callable[[Fraction], Energy], bound: int) -> bool:
    return _certified_cmp(e, lambda w: Energy.of(bound)) < 0


_ORDER_NAMES = ("E", "LE", "LE+")


def _chain(fns: list[Callable[[Fraction], Energy]]) -> str:
    idx = sorted(range(3), key=functools.cmp_to_key(lambda i, j: _certified_cmp(fns[i], fns[j])))
    out = _ORDER_NAMES[idx[0]]
    for i, j in zip(idx, idx[1:]):
        out += ("=" if _certified_cmp(fns[i], fns[j]) == 0 else "<") + _ORDER_NAMES[j]
    return out


@dataclass(frozen=True)
class EnergyReport:
    n: int
    m: int
    E: Energy
    LE: Energy
    LEplus: Energy
    ECN: Energy
    hypoenergetic: bool
    hyperenergetic: bool
    L_hyper: bool
    Q_hyper: bool
    CN_hyper: bool
    ordering: str

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in
                ("hypoenergetic", "hyperenergetic", "L_hyper", "Q_hyper", "CN_hyper")}

    def as_json(self) -> dict:
        return {
            "E": self.E.as_json(), "LE": self.LE.as_json(),
            "LE+": self.LEplus.as_json(), "ECN": self.ECN.as_json(),
            "flags": self.flags(), "ordering": self.ordering,
        }


def all_spectra(g: SimpleGraph) -> dict[str, SpectrumMultiset]:
    return {kind: graph_spectrum(g, kind) for kind in KINDS}


def _energy_fns(g: SimpleGraph, spectra: dict[str, SpectrumMultiset]):
    mean = Fraction(2 * g.m, g.n)
    cached = functools.lru_cache(maxsize=None)
    return (
        cached(lambda w: spectral_energy(spectra["A"], 0, w)),
        cached(lambda w: spectral_energy(spectra["L"], mean, w)),
        cached(lambda w: spectral_energy(spectra["Q"], mean, w)),
        cached(lambda w: spectral_energy(spectra["CN"], 0, w)),
    )


def energies(g: SimpleGraph, spectra: dict[str, SpectrumMultiset] | None = None) -> EnergyReport:
    n, m = g.n, g.m
    if n <= 1:
        z = Energy.of(0)
        return EnergyReport(n, m, z, z, z, z, False, False, False, False, False, "E=LE=LE+")
    spectra = spectra or all_spectra(g)
    e, le, lq, ecn = _energy_fns(g, spectra)
    base = 2 * (n - 1)
    return EnergyReport(
        n, m, e(WIDTH), le(WIDTH), lq(WIDTH), ecn(WIDTH),
        hypoenergetic=_below(e, n),
        hyperenergetic=_exceeds(e, base),
        L_hyper=_exceeds(le, base),
        Q_hyper=_exceeds(lq, base),
        CN_hyper=_exceeds(ecn, base * (n - 2)),
        ordering=_chain([e, le, lq]),
    )


def ele_ordering(g: SimpleGraph, spectra: dict[str, SpectrumMultiset] | None = None) -> str:
    """Certified chain among E, LE and LE+, e.g. ``"E<LE+<LE"``."""
    if g.n <= 1:
        return "E=LE=LE+"
    spectra = spectra or {k: graph_spectrum(g, k) for k in ("A", "L", "Q")}
    e, le, lq, _ = _energy_fns(g, {**spectra, "CN": SpectrumMultiset(())})
    return _chain([e, le, lq])

