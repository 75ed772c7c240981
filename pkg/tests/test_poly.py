from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from commgraph import poly
from commgraph.poly import CharPoly, char_poly

x = sympy.symbols("x")


def sympy_charpoly(M) -> tuple[int, ...]:
    coeffs = sympy.Matrix(M).charpoly(x).all_coeffs()  # descending
    return tuple(int(c) for c in reversed(coeffs))


def from_roots(*rs) -> tuple[int, ...]:
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.prod([x - r for r in rs]), x).all_coeffs()))


def test_k3_adjacency():
    cp = char_poly(np.ones((3, 3), dtype=int) - np.eye(3, dtype=int))
    assert str(cp) == "x^3 - 3x - 2"
    assert cp.determinant() == 2
    assert cp.divisible_by((1, 1))  # x + 1


def test_empty_and_scalar():
    assert char_poly(np.zeros((0, 0), dtype=int)).coefficients == (1,)
    assert char_poly(np.array([[5]])).coefficients == (-5, 1)


@given(st.integers(1, 14).flatmap(lambda n: st.lists(
    st.integers(-6, 6), min_size=n * n, max_size=n * n).map(lambda v: (n, v))))
def test_charpoly_matches_sympy_on_symmetric(data):
    n, vals = data
    A = np.array(vals, dtype=np.int64).reshape(n, n)
    M = np.triu(A) + np.triu(A, 1).T
    assert char_poly(M).coefficients == sympy_charpoly(M)


def test_charpoly_large_entries_need_crt():
    rng = np.random.default_rng(0)
    A = rng.integers(-400, 400, size=(12, 12))
    M = np.triu(A) + np.triu(A, 1).T
    assert char_poly(M).coefficients == sympy_charpoly(M)


def test_primes_are_prime_and_distinct():
    ps = [poly._prime(i) for i in range(6)]
    assert len(set(ps)) == 6
    assert all(sympy.isprime(p) and p < 2**25 for p in ps)


def test_format_poly():
    assert poly.format_poly((-487296, 19848, -255, 1)) == "x^3 - 255x^2 + 19848x - 487296"
    assert poly.format_poly((0, 1)) == "x"
    assert poly.format_poly((7,)) == "7"


def test_squarefree_decomposition():
    f = from_roots(1, 1, 1, 2, 2, 3)
    parts = poly.squarefree_decomposition(f)
    assert {k: g for g, k in parts} == {1: (-3, 1), 2: (-2, 1), 3: (-1, 1)}
    rebuilt = sympy.prod([sympy.Poly(list(reversed(g)), x) ** k for g, k in parts])
    assert sympy.Poly(rebuilt, x) == sympy.Poly(list(reversed(f)), x)


def test_integer_roots_and_cofactor():
    f = tuple(int(c) for c in reversed(sympy.Poly(
        (x - 4) ** 2 * (x + 3) * x ** 2 * (x ** 2 - 2), x).all_coeffs()))
    roots, cof = poly.integer_roots(f, 10)
    assert roots == {4: 2, -3: 1, 0: 2}
    assert cof == (-2, 0, 1)


def test_gcd_and_division():
    f, g = from_roots(1, 2, 3), from_roots(2, 3, 5)
    assert poly.gcd_poly(f, g) == from_roots(2, 3)
    q, r = poly.divmod_poly(f, from_roots(1))
    assert tuple(q) == from_roots(2, 3) and not any(r)


def test_sturm_isolation_and_refinement():
    f = (-2, 0, 1)  # x^2 - 2
    iv = poly.isolate_real_roots(f)
    assert len(iv) == 2
    lo, hi = poly.refine_root(f, *iv[1], Fraction(1, 10**15))
    assert hi - lo <= Fraction(1, 10**15)
    assert lo <= Fraction(14142135623730950, 10**16) <= hi
    assert poly.sign_at(f, lo) * poly.sign_at(f, hi) <= 0


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True))
def test_sturm_counts_distinct_real_roots(rs):
    # distinct roots r/2
    f = tuple(int(c) for c in reversed(sympy.Poly(sympy.prod([2 * x - r for r in rs]), x).all_coeffs()))
    assert len(poly.isolate_real_roots(f)) == len(rs)


def test_charpoly_dataclass():
    cp = CharPoly((6, -5, 1))
    assert cp.degree == 2 and cp.determinant() == 6
    assert not cp.divisible_by((1, 1))
