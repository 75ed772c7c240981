"""Zagreb indices, their complement transfer, the Hansen-Vukicevic
ratio test, and genus classification of shape graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyEdgeSet, InconsistentInputs
from .graphs import SimpleGraph, _describe, components


@dataclass(frozen=True)
class ZagrebReport:
    n: int
    m: int
    M1: int
    M2: int
    hv_lhs: Fraction | None = None  # M2 / m
    hv_rhs: Fraction | None = None  # M1 / n
    hv_holds: bool | None = None
    hv_equality: bool | None = None

    def as_json(self) -> dict:
        def q(x):
            return None if x is None else str(x)

        return {"n": self.n, "m": self.m, "M1": self.M1, "M2": self.M2,
                "hv_lhs": q(self.hv_lhs), "hv_rhs": q(self.hv_rhs),
                "hv_holds": self.hv_holds, "hv_equality": self.hv_equality}


def zagreb_indices(g: SimpleGraph) -> ZagrebReport:
    """M1 and M2, plus the HV verdict when the graph has edges.

    An edgeless graph gets a report without a verdict; use :func:`hv_check`
    to have that case raise.
    """
    deg = g.degrees.astype(object)
    M1 = int(sum(d * d for d in deg))
    M2 = int(sum(deg[u] * deg[v] for u, v in g.edges()))
    n, m = g.n, g.m
    if m == 0:
        return ZagrebReport(n, m, M1, M2)
    lhs, rhs = M2 * n, M1 * m
    return ZagrebReport(n, m, M1, M2, Fraction(M2, m), Fraction(M1, n), lhs >= rhs, lhs == rhs)


def hv_check(g: SimpleGraph) -> ZagrebReport:
    r = zagreb_indices(g)
    if r.m == 0:
        raise EmptyEdgeSet("HV ratios need at least one edge")
    return r


def complement_zagreb(n: int, m: int, M1: int, M2: int) -> tuple[int, Fraction]:
    """Zagreb indices of the complement from (n, m, M1, M2) alone.

    M2c is returned as an exact rational; for inputs coming from a real
    graph it is an integer, which is asserted.
    """
    if n < 0 or m < 0 or m > n * (n - 1) // 2 or M1 < 0 or M2 < 0:
        raise InconsistentInputs(f"no graph has n={n}, m={m}")
    M1c = n * (n - 1) ** 2 - 4 * m * (n - 1) + M1
    M2c = (Fraction(n * (n - 1) ** 3, 2) + 2 * m * m - 3 * m * (n - 1) ** 2
           + (n - Fraction(3, 2)) * M1 - M2)
    if M2c.denominator != 1:
        raise InconsistentInputs("inputs do not come from a graph (non-integral M2 of complement)")
    return M1c, M2c


# -- genus ------------------------------------------------------------------------

CLASS_NAMES = {0: "planar", 1: "toroidal", 2: "double-toroidal", 3: "triple-toroidal"}


@dataclass(frozen=True)
class GenusReport:
    exact_genus: int | None
    euler_lower_bound: int
    class_label: str

    def as_json(self) -> dict:
        return {"exact_genus": self.exact_genus, "euler_lower_bound": self.euler_lower_bound,
                "class": self.class_label}


def clique_genus(k: int) -> int:
    return 0 if k < 3 else math.ceil((k - 3) * (k - 4) / 12)


def euler_bound(n: int, m: int) -> int:
    if n < 3:
        return 0
    return max(0, -(-(m - 3 * n + 6) // 6))


def _label(genus: int | None) -> str:
    if genus is None:
        return "unknown-bounded-below"
    return CLASS_NAMES.get(genus, "genus≥4")


def genus_classify(g: SimpleGraph) -> GenusReport:
    bound = 0
    exact: int | None = 0
    for c in components(g):
        bound += euler_bound(c.n, c.m)
        d = _describe(c)
        if d[0] == "K":
            exact = None if exact is None else exact + clique_genus(d[1])
        elif d[0] in ("F", "D"):
            pass
        else:
            exact = None
    return GenusReport(exact, bound, _label(exact))


__all__ = ["ZagrebReport", "GenusReport", "zagreb_indices", "hv_check", "complement_zagreb",
           "genus_classify", "clique_genus", "euler_bound", "CLASS_NAMES"]
