from fractions import Fraction

import pytest

from commgraph import reference
from commgraph.reference import Rounded, _energy_check, _quadratic_key, pm, q, roots, surd
from commgraph.spectra import Eigenvalue, Energy


def test_table_shape():
    rows = reference.table()
    assert {r.criterion for r in rows} == set(range(1, 10))
    assert len({(r.case, r.key) for r in rows}) == len(rows)
    assert all(r.policy.startswith(("exact", "surd", "rel", "factor")) for r in rows)


def test_case_selection_accepts_spellings():
    def keys(case):
        return [(r.case, r.key) for r in reference.select(case)]

    a = keys("K8⊔9F3")
    assert a and keys("K8 + 9*F3") == a == keys("K8 ⊔ 9(K1 ∨ 3K2)")
    assert keys("gl(2,3)") == keys("GL(2,3)") != []
    assert reference.select("no such case") == []


def test_parallel_verify_matches_serial():
    assert reference.verify("3K6", jobs=4) == reference.verify("3K6")


def test_quadratic_key_matches_eigenvalue():
    # (9 + sqrt(33)) / 2 is the larger root of x^2 - 9x + 12
    assert _quadratic_key(9, 1, 33, 2) == Eigenvalue.root((12, -9, 1), 1).key
    assert _quadratic_key(9, -1, 33, 2) == Eigenvalue.root((12, -9, 1), 0).key
    assert _quadratic_key(3, 1, 16, 1) == ("q", Fraction(7))


def test_spec_entry_helpers():
    assert [k for e in q(3, 2) for k in e.keys()] == [(("q", Fraction(3)), 2)]
    assert len(pm(17, 1, 129)) == 2
    keys = [k for e in roots(1, 0, -3, 2) for k in e.keys()]  # x^3 - 3x + 2 = (x-1)^2 (x+2)
    assert dict(keys) == {("q", Fraction(1)): 2, ("q", Fraction(-2)): 1}


def test_surd_value():
    assert abs(float(surd(8, (2, 88)).value()) - (8 + 2 * 88 ** 0.5)) < 1e-12


@pytest.mark.parametrize("expected,energy,ok", [
    (Fraction(238, 5), Energy.of(Fraction(238, 5)), True),
    (Fraction(238, 5), Energy.of(Fraction(239, 5)), False),
    (68, Energy(Fraction(67), Fraction(69)), False),  # exact policy needs an exact value
    (Rounded("151.09"), Energy.of(Fraction(15110, 100)), True),
    (Rounded("2412.28/14"), Energy.of(Fraction(10372, 100)), False),
    (surd(8, (2, 88)), Energy(Fraction(26761663039, 10**9), Fraction(26761663040, 10**9)), True),
    (surd(12, (2, 96)), Energy(Fraction(27595917942, 10**9), Fraction(27595917943, 10**9)), False),
])
def test_energy_policies(expected, energy, ok):
    _, check = _energy_check(lambda: energy, expected, reference.DISPLAY_TOLERANCE)
    assert check()[0] is ok


def test_rounded_tolerance_is_configurable():
    policy, check = _energy_check(lambda: Energy.of(100), Rounded("101"), Fraction(1, 50))
    assert policy == "rel 0.02" and check()[0]
    assert not _energy_check(lambda: Energy.of(100), Rounded("101"), Fraction(1, 1000))[1]()[0]


def test_hv_counterexample_row_passes():
    (o,) = reference.verify("hv-counterexample")
    assert o.passed and o.criterion == 4 and "fails" in o.computed
