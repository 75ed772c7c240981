from fractions import Fraction

import pytest

from commgraph.errors import EmptyEdgeSet, InconsistentInputs
from commgraph.graphs import build_shape, complement
from commgraph.zagreb import (clique_genus, complement_zagreb, euler_bound, genus_classify,
                              hv_check, zagreb_indices)

PUBLISHED = [
    ("K8 + 3*K4", (20, 46, 500, 1534)),
    ("K8 + 9*K1", (17, 28, 392, 1372)),
    ("K8 + 5*K2", (18, 33, 402, 1377)),
    ("K8 + 9*K3", (35, 55, 500, 1480)),
    ("K8 + 9*F3", (71, 109, 932, 2128)),
    ("3*K6 + 4*K4 + 6*K2", (46, 75, 606, 1347)),
    ("3*K6", (18, 45, 450, 1125)),
]


def direct(g):
    deg = [int(d) for d in g.degrees]
    return sum(d * d for d in deg), sum(deg[u] * deg[v] for u, v in g.edges())


@pytest.mark.parametrize("expr,values", PUBLISHED)
def test_published_zagreb(expr, values):
    z = zagreb_indices(build_shape(expr))
    assert (z.n, z.m, z.M1, z.M2) == values


@pytest.mark.parametrize("expr,values", PUBLISHED)
def test_complement_transfer(expr, values):
    n, m, M1, M2 = values
    M1c, M2c = complement_zagreb(n, m, M1, M2)
    assert (M1c, M2c) == direct(complement(build_shape(expr)))
    assert isinstance(M2c, Fraction) and M2c.denominator == 1


def test_hv_equality_3k6():
    for g in (build_shape("3*K6"), complement(build_shape("3*K6"))):
        z = hv_check(g)
        assert z.hv_holds and z.hv_equality
    assert hv_check(build_shape("3*K6")).hv_lhs == 25
    assert hv_check(complement(build_shape("3*K6"))).hv_lhs == 144


def test_hv_counterexample_star_plus_triangle():
    z = hv_check(build_shape("(K1 v 5*K1) + K3"))
    assert z.hv_lhs == Fraction(37, 8) and z.hv_rhs == Fraction(14, 3)
    assert not z.hv_holds


def test_hv_needs_edges():
    assert zagreb_indices(build_shape("4*K1")).hv_holds is None
    with pytest.raises(EmptyEdgeSet):
        hv_check(build_shape("4*K1"))


@pytest.mark.parametrize("args", [(3, 4, 0, 0), (-1, 0, 0, 0), (4, 2, 5, -1), (3, 1, 3, 0)])
def test_complement_rejects_impossible_inputs(args):
    with pytest.raises(InconsistentInputs):
        complement_zagreb(*args)


def test_clique_genus_table():
    assert [clique_genus(k) for k in range(1, 13)] == [0, 0, 0, 0, 1, 1, 1, 2, 3, 4, 5, 6]


def test_euler_bound():
    assert euler_bound(2, 1) == 0
    assert euler_bound(5, 10) == 1
    assert euler_bound(8, 28) == 2


@pytest.mark.parametrize("expr,genus,label", [
    ("K8 + 3*K4", 2, "double-toroidal"),
    ("3*K6 + 4*K4 + 6*K2", 3, "triple-toroidal"),
    ("K5", 1, "toroidal"),
    ("7*K2 + D", 0, "planar"),
    ("K8 + 9*F3", 2, "double-toroidal"),
    ("K12", 6, "genus≥4"),
])
def test_genus_classes(expr, genus, label):
    r = genus_classify(build_shape(expr))
    assert (r.exact_genus, r.class_label) == (genus, label)
    assert r.euler_lower_bound <= genus


def test_genus_unknown_component():
    r = genus_classify(build_shape("K1 v (K3 + K3) + K5"))
    assert r.exact_genus is None and r.class_label == "unknown-bounded-below"
    assert r.euler_lower_bound >= 1
