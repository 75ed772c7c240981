from fractions import Fraction

import numpy as np
import pytest

from commgraph.errors import UncertifiedComparison, UnsupportedComponent
from commgraph.graphs import build_shape, complement
from commgraph.spectra import (KINDS, Eigenvalue, Energy, IntegerSymmetricMatrix,
                               _certified_cmp, closed_form_spectrum, ele_ordering, energies,
                               graph_spectrum, matrix_of, spectral_energy, spectrum)


def float_oracle(g, kind):
    return np.sort(np.linalg.eigvalsh(matrix_of(g, kind).entries.astype(float)))


def flat(multiset):
    return np.sort([float(ev) for ev, k in multiset.entries for _ in range(k)])


def test_matrix_kinds_k3():
    g = build_shape("K3")
    A = matrix_of(g, "A").entries
    assert (matrix_of(g, "L").entries == np.diag([2, 2, 2]) - A).all()
    assert (matrix_of(g, "Q").entries == np.diag([2, 2, 2]) + A).all()
    assert (matrix_of(g, "CN").entries == A).all()  # each pair has one common neighbour
    assert matrix_of(g, "L").trace() == 2 * g.m


def test_matrix_is_read_only_and_symmetric():
    M = matrix_of(build_shape("K4"), "A")
    with pytest.raises(ValueError):
        M.entries[0, 0] = 3
    with pytest.raises(ValueError):
        IntegerSymmetricMatrix("A", np.array([[0, 1], [0, 0]]))


def test_k8_3k4_adjacency():
    s = graph_spectrum(build_shape("K8 + 3*K4"), "A")
    assert s.is_rational()
    assert s.as_dict() == {7: 1, 3: 3, -1: 16}


def test_surd_spectrum_nc_k8_9k1():
    g = complement(build_shape("K8 + 9*K1"))
    s = graph_spectrum(g, "A")
    irr = [(ev, k) for ev, k in s.entries if not ev.is_exact]
    assert len(irr) == 2 and all(ev.factor == (-72, -8, 1) for ev, _ in irr)
    top = max((ev for ev, _ in irr), key=float)
    assert abs(float(top) - (4 + 88 ** 0.5)) < 1e-12
    assert top.hi - top.lo <= Fraction(1, 10**12)


@pytest.mark.parametrize("expr", ["K5 + F2", "K8 + 9*F3", "D + K3", "3*K6 + 4*K4 + 6*K2"])
@pytest.mark.parametrize("kind", KINDS)
def test_float_oracle(expr, kind):
    for g in (build_shape(expr), complement(build_shape(expr))):
        assert np.allclose(flat(graph_spectrum(g, kind)), float_oracle(g, kind), atol=1e-6)


@pytest.mark.parametrize("expr", ["K8 + 9*F3", "K1 + K2 + F1 + F5", "4*K7"])
@pytest.mark.parametrize("kind", KINDS)
def test_closed_form_equals_exact(expr, kind):
    exact = graph_spectrum(build_shape(expr), kind)
    closed = closed_form_spectrum(expr, kind)
    assert [(e.key, k) for e, k in exact.entries] == [(e.key, k) for e, k in closed.entries]


def test_closed_form_rejects_d():
    with pytest.raises(UnsupportedComponent):
        closed_form_spectrum("D + K2", "A")


def test_power_sums():
    g = complement(build_shape("K8 + 9*F3"))
    s = graph_spectrum(g, "A")
    assert s.power_sum(1) == 0
    assert s.power_sum(2) == 2 * g.m
    assert s.power_sum(3) == 6 * int(np.trace(np.linalg.matrix_power(
        matrix_of(g, "A").entries.astype(object), 3))) // 6


def test_multiplicity_and_json():
    s = graph_spectrum(build_shape("K8 + 9*K1"), "L")
    assert s.multiplicity(8) == 7 and s.multiplicity(0) == 10 and s.multiplicity(5) == 0
    assert s.as_json() == [{"value": "8", "mult": 7}, {"value": "0", "mult": 10}]


def test_eigenvalue_identity_and_refine():
    a = Eigenvalue.root((-2, 0, 1), 1)
    b = a.refine(Fraction(1, 10**40))
    assert a.key == b.key and b.hi - b.lo <= Fraction(1, 10**40)
    assert a.side_of(Fraction(1)) == 1 and a.side_of(Fraction(2)) == -1
    assert Eigenvalue.rational(Fraction(3, 2)).as_json() == "3/2"


def test_energy_exact_via_root_sum():
    # roots of x^2 - 8x - 72 straddle 0, the two 15s and 9s do not
    g = complement(build_shape("K8 + 9*K1"))
    e = spectral_energy(graph_spectrum(g, "A"))
    assert not e.is_exact
    assert abs(float(e.mid) - (8 + 2 * 88 ** 0.5)) < 1e-11
    lq = spectral_energy(graph_spectrum(g, "L"), Fraction(2 * g.m, g.n))
    assert lq.exact == Fraction(1314, 17)


def test_energy_decimal_rounding():
    assert Energy.of(Fraction(238, 5)).decimal(3) == "47.600"
    assert Energy.of(Fraction(1, 8)).decimal(2) == "0.12"  # half to even


def test_certified_comparison_and_tie():
    one = lambda w: Energy.of(1)
    assert _certified_cmp(one, one) == 0
    fuzzy = lambda w: Energy(Fraction(1) - w, Fraction(1) + w)
    with pytest.raises(UncertifiedComparison):
        _certified_cmp(one, fuzzy)


def test_energies_small_graphs():
    r = energies(build_shape("K1"))
    assert r.ordering == "E=LE=LE+" and not any(r.flags().values())
    r = energies(build_shape("K2"))
    assert (r.E.exact, r.LE.exact, r.LEplus.exact, r.ECN.exact) == (2, 2, 2, 0)
    assert r.ordering == "E=LE=LE+"


def test_published_flags():
    d18 = energies(build_shape("K8 + 9*K1"))
    assert d18.hypoenergetic and not d18.hyperenergetic
    k9k3 = energies(build_shape("K8 + 9*K3"))
    assert k9k3.LE.exact == 68 and not k9k3.L_hyper and k9k3.Q_hyper
    assert k9k3.LEplus.exact == Fraction(540, 7)
    r = energies(complement(build_shape("K8 + 9*F3")))
    assert r.hyperenergetic and abs(float(r.E.mid) / 151.09 - 1) < 5e-3


def test_triple_equality_3k6():
    assert ele_ordering(build_shape("3*K6")) == "E=LE=LE+"
    assert ele_ordering(complement(build_shape("3*K6"))) == "E=LE=LE+"


def test_spectrum_of_empty_matrix():
    s = spectrum(IntegerSymmetricMatrix("A", np.zeros((0, 0), dtype=int)))
    assert s.n == 0


def test_irrational_tie_uses_exact_witness():
    # E = LE+ = 9 + sqrt(17), both carried as intervals
    r = energies(build_shape("K4 + F2"))
    assert not r.E.is_exact and not r.LEplus.is_exact
    assert r.ordering == "E=LE+<LE"
