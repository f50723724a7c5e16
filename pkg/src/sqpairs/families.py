"""Polynomial families j_i(k) that make k(k+1)(k+j)(k+j+1) a perfect square.

For i = 2l the triple (A, B, C) satisfies  k*A^2 + 1 = (k+1)*B^2 = C,
for i = 2l+1 it satisfies  k(k+1)*A^2 + 1 = B^2 = C.
In both cases j_i(k) = C(k) - k - 1 and sqrt(Pi(k, j_i(k))) = k(k+1) A B.

Coefficients are computed from their closed binomial / double-factorial
formulas in exact rationals and only then checked to be positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List

from .arith import DomainError, InvariantError, is_perfect_square, triangular
from .intervals import CaseParams, verify_solution
from .pell import square_triangular
from .polynomial import K, IntPolynomial

ONE = IntPolynomial([1])
K_PLUS_1 = IntPolynomial([1, 1])


def double_factorial(n: int) -> int:
    """Product of the odd numbers 1..n, for odd n >= -1 ((-1)!! = 1)."""
    if n < -1 or n % 2 == 0:
        raise DomainError(f"double factorial only defined here for odd n >= -1, got {n}")
    out = 1
    for x in range(3, n + 1, 2):
        out *= x
    return out


def _as_positive_int(x: Fraction, what: str) -> int:
    if x.denominator != 1 or x <= 0:
        raise InvariantError(f"{what} = {x} is not a positive integer")
    return x.numerator


@dataclass(frozen=True)
class FamilyTriple:
    parity: str  # "even" or "odd"
    ell: int
    A: IntPolynomial
    B: IntPolynomial
    C: IntPolynomial

    @property
    def index(self) -> int:
        return 2 * self.ell + (self.parity == "odd")

    def lhs(self) -> IntPolynomial:
        if self.parity == "even":
            return K * self.A ** 2 + ONE
        return K * K_PLUS_1 * self.A ** 2 + ONE

    def rhs(self) -> IntPolynomial:
        if self.parity == "even":
            return K_PLUS_1 * self.B ** 2
        return self.B ** 2


def _even_coefficients(ell: int):
    L = ell
    a = [Fraction(4 ** t * factorial(L + t) * (2 * L + 1), factorial(2 * t + 1) * factorial(L - t))
         for t in range(L + 1)]
    b = [Fraction(4 ** t * comb(L + t, 2 * t)) for t in range(L + 1)]
    c = []
    for t in range(2 * L + 2):
        if t == 0:
            v = Fraction(1)  # the general formula would give 1/2 here
        elif t <= L and t % 2 == 0:
            h = t // 2
            v = (Fraction(2 ** (3 * t - 1), factorial(2 * t))
                 * Fraction(factorial(L + h), factorial(L - h))
                 * Fraction(double_factorial(2 * L + t - 1), double_factorial(2 * L - t + 1))
                 * (2 * L + 1))
        elif t <= L:
            h = (t - 1) // 2
            v = (Fraction(2 ** (3 * t - 2), factorial(2 * t))
                 * Fraction(factorial(L + h), factorial(L - h))
                 * Fraction(double_factorial(2 * L + t), double_factorial(2 * L - t))
                 * (2 * L + 1))
        else:
            v = Fraction(2 ** (2 * t - 1) * factorial(2 * L + t),
                         factorial(2 * t) * factorial(2 * L + 1 - t)) * (2 * L + 1)
        c.append(v)
    return a, b, c


def _odd_coefficients(ell: int):
    L = ell
    a = [Fraction(2 ** (2 * t + 1) * comb(L + t + 1, 2 * t + 1)) for t in range(L + 1)]
    b = [Fraction(1)] + [Fraction(2 ** (2 * t - 1) * comb(L + t, 2 * t - 1) * (L + 1), t)
                         for t in range(1, L + 2)]
    c = []
    for t in range(2 * L + 3):
        if t == 0:
            v = Fraction(1)
        elif t <= L and t % 2 == 0:
            h = t // 2
            v = (Fraction(2 ** (3 * t - 1), factorial(2 * t))
                 * Fraction(factorial(L + h), factorial(L - h + 1))
                 * Fraction(double_factorial(2 * L + t + 1), double_factorial(2 * L - t + 1))
                 * (L + 1))
        elif t <= L:
            v = (Fraction(2 ** (3 * t), factorial(2 * t))
                 * Fraction(factorial(L + (t + 1) // 2), factorial(L - (t - 1) // 2))
                 * Fraction(double_factorial(2 * L + t), double_factorial(2 * L - t + 2))
                 * (L + 1))
        else:
            v = Fraction(2 ** (2 * t) * factorial(2 * L + t + 1),
                         factorial(2 * t) * factorial(2 * L + 2 - t)) * (L + 1)
        c.append(v)
    return a, b, c


def _build(parity: str, ell: int, a, b, c) -> FamilyTriple:
    tag = f"{parity} l={ell}"
    A = IntPolynomial(_as_positive_int(x, f"a_{t} ({tag})") for t, x in enumerate(a))
    B = IntPolynomial(_as_positive_int(x, f"b_{t} ({tag})") for t, x in enumerate(b))
    C = IntPolynomial(_as_positive_int(x, f"c_{t} ({tag})") for t, x in enumerate(c))
    return FamilyTriple(parity, ell, A, B, C)


@lru_cache(maxsize=None)
def even_family(ell: int) -> FamilyTriple:
    """Family for i = 2*ell.  ell = 0 gives A = B = 1, i.e. j_0 = 0."""
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    return _build("even", ell, *_even_coefficients(ell))


@lru_cache(maxsize=None)
def odd_family(ell: int) -> FamilyTriple:
    """Family for i = 2*ell + 1."""
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    return _build("odd", ell, *_odd_coefficients(ell))


def family(i: int) -> FamilyTriple:
    if i < 0:
        raise DomainError(f"family index must be >= 0, got {i}")
    return even_family(i // 2) if i % 2 == 0 else odd_family(i // 2)


def verify_family(f: FamilyTriple) -> bool:
    """Exact polynomial check of lhs == rhs == C."""
    lhs, rhs = f.lhs(), f.rhs()
    return lhs == rhs == f.C


@lru_cache(maxsize=None)
def j_poly(i: int) -> IntPolynomial:
    return family(i).C - K - 1


def j_value(i: int, k: int) -> int:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return j_poly(i)(k)


@lru_cache(maxsize=None)
def pi_sqrt(i: int) -> IntPolynomial:
    """S_i = k(k+1) A_i B_i, so that S_i(k)^2 = Pi(k, j_i(k))."""
    f = family(i)
    return K * K_PLUS_1 * f.A * f.B


def quadratic_number(k: int, j: int) -> int:
    return k * (k + 1) * (k + j) * (k + j + 1)


@dataclass(frozen=True)
class FamilyRoots:
    j: int
    sqrt_pi: int
    n_plus: int
    n_minus: int


def family_roots(i: int, k: int) -> FamilyRoots:
    """Both integer solutions n = k(k+j) +- sqrt(Pi) with j = j_i(k), m = 0."""
    j = j_value(i, k)
    s = pi_sqrt(i)(k)
    base = k * (k + j)
    r = FamilyRoots(j, s, base + s, base - s)
    p = CaseParams(j, 0, k)
    if not (verify_solution(p, r.n_plus) and verify_solution(p, r.n_minus)):
        raise InvariantError(f"family roots fail for i={i}, k={k}")
    return r


@dataclass(frozen=True)
class BiPythPair:
    k: int
    j: int
    sqrt_pi: int


def bi_pyth_pair(p: int, q: int) -> BiPythPair:
    """Pair k = t_p, k + j = t_q built from two square triangular numbers."""
    if not 0 <= p < q:
        raise DomainError(f"need 0 <= p < q, got p={p}, q={q}")
    sp, sq = square_triangular(p), square_triangular(q)
    if sp.t == 0:
        raise DomainError("t_0 = 0 gives k = 0, which is not allowed")
    k, j = sp.t, sq.t - sp.t
    root = is_perfect_square(quadratic_number(k, j))
    if root is None or root != 2 * sp.d * sq.d:
        raise InvariantError(f"Pi({k}, {j}) should be (2 d_p d_q)^2")
    return BiPythPair(k, j, root)


def table2(kmax: int, imax: int) -> List[List[int]]:
    """Rows k = 1..kmax of [j_0(k), j_1(k), ..., j_imax(k)]."""
    if kmax < 1 or imax < 1:
        raise DomainError("kmax and imax must be >= 1")
    rows = []
    for k in range(1, kmax + 1):
        row = [j_value(i, k) for i in range(imax + 1)]
        for j in row:
            if is_perfect_square(quadratic_number(k, j)) is None:
                raise InvariantError(f"Pi({k}, {j}) is not a perfect square")
        rows.append(row)
    return rows


def family_index(k: int, j: int) -> int | None:
    """Least i >= 1 with j_i(k) == j, or None.  j_i(k) is increasing in i."""
    i = 1
    while True:
        v = j_value(i, k)
        if v == j:
            return i
        if v > j:
            return None
        i += 1


def is_bi_pythagorean(k: int, j: int) -> bool:
    return (is_perfect_square(triangular(k)) is not None
            and is_perfect_square(triangular(k + j)) is not None)
