"""Exact integer polynomials: characteristic polynomials, square-free
decomposition, integer roots and real-root isolation.

Polynomials are tuples of Python ints in ascending order, ``f[i]`` being the
coefficient of ``x**i``. Characteristic polynomials are computed modulo a
run of word-sized primes (Hessenberg reduction, vectorised with numpy) and
recombined by the Chinese remainder theorem past a proven coefficient bound,
so every coefficient is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

Poly = tuple[int, ...]

_PRIME_CEILING = 1 << 25  # p**2 * n stays inside int64 for n < 2**13


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """The i-th prime below the ceiling, counting down."""
    start = _PRIME_CEILING - 1 if i == 0 else _prime(i - 1) - 2
    p = start if start % 2 else start - 1
    while not _is_prime(p):
        p -= 2
    return p


def trim(f: Sequence[int]) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def degree(f: Poly) -> int:
    return len(f) - 1


def to_descending(f: Poly) -> list[int]:
    return list(reversed(f))


def format_poly(f: Poly, var: str = "x") -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = str(a) if (a != 1 or i == 0) else ""
        terms.append((sign, body + mono))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {t}" for s, t in terms[1:])


# -- characteristic polynomial ---------------------------------------------------


def _hessenberg_charpoly_mod(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[0]
    H = np.mod(M, p).astype(np.int64)
    for j in range(n - 2):
        nz = np.flatnonzero(H[j + 1:, j])
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            H[[i, j + 1], :] = H[[j + 1, i], :]
            H[:, [i, j + 1]] = H[:, [j + 1, i]]
        inv = pow(int(H[j + 1, j]), p - 2, p)
        u = H[j + 2:, j] * inv % p
        if not u.any():
            continue
        H[j + 2:, :] = (H[j + 2:, :] - np.outer(u, H[j + 1, :])) % p
        H[:, j + 1] = (H[:, j + 1] + H[:, j + 2:] @ u) % p

    # p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonal h) p_{i-1}
    polys = [np.ones(1, dtype=np.int64)]
    for k in range(1, n + 1):
        prev = polys[-1]
        cur = np.zeros(k + 1, dtype=np.int64)
        cur[1:] = prev
        cur[:k] = (cur[:k] - int(H[k - 1, k - 1]) * prev) % p
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * int(H[i, i - 1]) % p
            if t == 0:
                break
            c = int(H[i - 1, k - 1]) * t % p
            if c:
                q = polys[i - 1]
                cur[: len(q)] = (cur[: len(q)] - c * q) % p
        polys.append(cur % p)
    return polys[-1]


def _coefficient_bound(M: np.ndarray) -> int:
    """Bound on |coefficients| of det(xI - M): max_k C(n, k) R^k, R = max row sum."""
    n = M.shape[0]
    R = int(np.abs(M).sum(axis=1).max()) if n else 0
    return max(math.comb(n, k) * R**k for k in range(n + 1))


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial with exact integer coefficients (ascending)."""

    coefficients: Poly

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def determinant(self) -> int:
        return (-1) ** self.degree * self.coefficients[0]

    def divisible_by(self, g: Sequence[int]) -> bool:
        _, r = divmod_poly(self.coefficients, tuple(g))
        return not any(r)

    def __str__(self):
        return format_poly(self.coefficients)


def char_poly(M) -> CharPoly:
    """det(xI - M) for a square integer matrix."""
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if A.size and not np.issubdtype(A.dtype, np.integer):
        if not np.all(A == np.round(A)):
            raise ValueError("matrix must have integer entries")
    A = A.astype(object) if A.size and np.abs(A).max() > 2**40 else A.astype(np.int64)
    n = A.shape[0]
    if n == 0:
        return CharPoly((1,))
    need = 2 * _coefficient_bound(A) + 1
    residues = [0] * (n + 1)
    modulus = 1
    i = 0
    while modulus < need:
        p = _prime(i)
        i += 1
        Ap = np.array([[int(v) % p for v in row] for row in A], dtype=np.int64) \
            if A.dtype == object else A
        r = _hessenberg_charpoly_mod(Ap, p)
        inv = pow(modulus % p, -1, p)
        for k in range(n + 1):
            delta = (int(r[k]) - residues[k]) * inv % p
            residues[k] += modulus * delta
        modulus *= p
    half = modulus // 2
    coeffs = tuple(c - modulus if c > half else c for c in residues)
    return CharPoly(coeffs)


# -- arithmetic over Z and Q ----------------------------------------------------


def derivative(f: Sequence) -> tuple:
    return tuple(i * c for i, c in enumerate(f))[1:]


def divmod_poly(f: Sequence, g: Sequence) -> tuple[tuple, tuple]:
    """Quotient and remainder over Q (Fractions where needed)."""
    f, g = list(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg, lg = len(g) - 1, g[-1]
    q = [0] * max(len(f) - dg, 1)
    while len(f) - 1 >= dg and any(f):
        c = Fraction(f[-1], lg) if not isinstance(f[-1], Fraction) else f[-1] / lg
        if c.denominator == 1:
            c = c.numerator
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] -= c * gi
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return trim(q), trim(f)


def exact_quotient(f: Poly, g: Poly) -> Poly:
    q, r = divmod_poly(f, g)
    if r:
        raise ArithmeticError("division is not exact")
    if any(isinstance(c, Fraction) for c in q):
        raise ArithmeticError("quotient is not integral")
    return tuple(int(c) for c in q)


def primitive(f: Sequence) -> Poly:
    """Integer multiple of ``f`` with content 1 and positive leading coefficient."""
    f = trim(f)
    if not f:
        return ()
    den = math.lcm(*(Fraction(c).denominator for c in f))
    ints = [int(Fraction(c) * den) for c in f]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def gcd_poly(f: Sequence, g: Sequence) -> Poly:
    a, b = primitive(f), primitive(g)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, primitive(r)
    return a if a else (1,)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``[(g_k, k)]`` with f = c * prod g_k**k, g_k square-free."""
    f = primitive(f)
    if len(f) <= 1:
        return []
    out = []
    df = derivative(f)
    a = gcd_poly(f, df)
    b = exact_rational_quotient(f, a)
    c = exact_rational_quotient(df, a)
    d = _sub(c, derivative(b))
    k = 1
    while len(primitive(b)) > 1:
        a = gcd_poly(b, d)
        if len(a) > 1:
            out.append((a, k))
        b = exact_rational_quotient(b, a)
        c = exact_rational_quotient(d, a)
        d = _sub(c, derivative(b))
        k += 1
    return out


def exact_rational_quotient(f: Sequence, g: Sequence) -> tuple:
    q, r = divmod_poly(f, g)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def _sub(f: Sequence, g: Sequence) -> tuple:
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim(a - b for a, b in zip(f, g))


# -- rational roots -------------------------------------------------------------


def eval_int(f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _synthetic_div(f: Poly, r: int) -> Poly:
    """Divide by (x - r), assuming r is a root."""
    out = []
    acc = 0
    for c in reversed(f):
        acc = acc * r + c
        out.append(acc)
    assert out[-1] == 0
    return tuple(reversed(out[:-1]))


def root_bound(f: Poly) -> Fraction:
    """Cauchy bound: every root has modulus below ``1 + max |f_i / f_d|``."""
    lead = abs(f[-1])
    return 1 + max((Fraction(abs(c), lead) for c in f[:-1]), default=Fraction(0))


def integer_roots(f: Poly, bound: int | None = None) -> tuple[dict[int, int], Poly]:
    """Integer roots of a monic integer polynomial with multiplicities.

    Returns the root -> multiplicity map and the cofactor without those roots.
    Candidates are divisors of the constant term no larger than ``bound``.
    """
    if f[-1] != 1:
        raise ValueError("expects a monic polynomial")
    roots: dict[int, int] = {}
    k = 0
    while k < len(f) - 1 and f[k] == 0:
        k += 1
    if k:
        roots[0] = k
        f = f[k:]
    if len(f) == 1:
        return roots, f
    limit = int(root_bound(f)) + 1 if bound is None else bound
    const = f[0]
    for c in range(1, limit + 1):
        if const % c:
            continue
        for r in (c, -c):
            while len(f) > 1 and eval_int(f, r) == 0:
                f = _synthetic_div(f, r)
                roots[r] = roots.get(r, 0) + 1
                const = f[0]
            if len(f) == 1:
                return roots, f
    return roots, f


# -- real-root isolation ----------------------------------------------------------


def sign_at(f: Sequence[int], x: Fraction) -> int:
    """Sign of f(x) for an integer polynomial and rational x (exact)."""
    a, b = x.numerator, x.denominator
    if not f:
        return 0
    acc, bp = f[-1], 1
    for c in reversed(f[:-1]):
        bp *= b
        acc = acc * a + c * bp
    return (acc > 0) - (acc < 0)


def sturm_sequence(f: Poly) -> list[Poly]:
    seq = [primitive(f), primitive(derivative(f))]
    while len(seq[-1]) > 1:
        _, r = divmod_poly(seq[-2], seq[-1])
        if not r:
            break
        r = primitive(r)
        # primitive() forces a positive leading coefficient; restore -rem's sign.
        neg = tuple(-c for c in divmod_poly(seq[-2], seq[-1])[1])
        seq.append(r if _lead_sign(neg) > 0 else tuple(-c for c in r))
    return seq


def _lead_sign(f: Sequence) -> int:
    f = trim(f)
    return 0 if not f else (1 if f[-1] > 0 else -1)


def _variations(seq: list[Poly], x: Fraction) -> int:
    signs = [s for s in (sign_at(p, x) for p in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def isolate_real_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], one per real root, ascending.

    ``f`` must be square-free with no rational roots, so no bisection point
    is ever a root.
    """
    f = primitive(f)
    seq = sturm_sequence(f)
    B = Fraction(math.ceil(root_bound(f)))
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B, _variations(seq, -B), _variations(seq, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(seq, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    return out


def refine_root(f: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a root of ``f`` down to ``width``."""
    s_hi = sign_at(f, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(f, mid)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi
