"""Equal sums of squares over two integer intervals.

Canonical shape: for j >= 0, m >= 0, k > 0 and integer n,

    (n-m)^2 + ... + (n+k)^2  ==  (n+k+j+1)^2 + ... + (n+2k+j)^2

i.e. a left block of k+m+1 integers and a right block of k integers at
distance j+1.  Treated as an equation in n it is quadratic, with leading
coefficient m+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .arith import (
    DomainError,
    InvariantError,
    exact_div,
    is_perfect_square,
    sum_sq_interval,
)

Interval = Tuple[int, int]


@dataclass(frozen=True, order=True)
class CaseParams:
    j: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.j < 0 or self.m < 0 or self.k < 1:
            raise DomainError(f"need j >= 0, m >= 0, k > 0; got {self}")

    def left(self, n: int) -> Interval:
        return (n - self.m, n + self.k)

    def right(self, n: int) -> Interval:
        return (n + self.k + self.j + 1, n + 2 * self.k + self.j)


@dataclass(frozen=True)
class QuadraticForm:
    """a*n^2 + b*n + c with integer coefficients."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, n: Union[int, Fraction]) -> Union[int, Fraction]:
        return (self.a * n + self.b) * n + self.c


# Root outcomes.

@dataclass(frozen=True)
class NegativeD:
    D: int


@dataclass(frozen=True)
class IrrationalD:
    D: int


@dataclass(frozen=True)
class RationalRoots:
    roots: Tuple[Fraction, Fraction]  # ascending; equal when double_root
    sqrtD: int
    double_root: bool

    def integer_roots(self) -> Tuple[int, ...]:
        return tuple(sorted({int(r) for r in self.roots if r.denominator == 1}))


RootStatus = Union[NegativeD, IrrationalD, RationalRoots]


# Normalization outcomes.

@dataclass(frozen=True)
class Canonical:
    params: CaseParams
    n: int
    negated: bool = False

    def intervals(self) -> Tuple[Interval, Interval]:
        return self.params.left(self.n), self.params.right(self.n)


@dataclass(frozen=True)
class Symmetric:
    """Two disjoint blocks of equal length (the m = -1 case)."""

    left: Interval
    right: Interval

    def holds(self) -> bool:
        return self.left == (-self.right[1], -self.right[0])


@dataclass(frozen=True)
class Degenerate:
    """Identical or nested intervals: one side is empty after cancellation."""

    reason: str


NormalizedCase = Union[Canonical, Symmetric, Degenerate]


def _check_interval(iv: Interval) -> None:
    if iv[0] > iv[1]:
        raise DomainError(f"malformed interval [{iv[0]}, {iv[1]}]")


def normalize(left: Interval, right: Interval) -> NormalizedCase:
    """Reduce ``sum(left) == sum(right)`` (sums of squares) to canonical form.

    Steps: cancel the overlap from both sides; if a side becomes empty or
    splits in two, the case is degenerate.  Otherwise put the longer block
    below the shorter one, negating every number if needed, and read off
    (j, m, k, n).  Blocks of equal length give :class:`Symmetric`.
    """
    _check_interval(left)
    _check_interval(right)
    if left == right:
        return Degenerate("identical intervals")

    lo = max(left[0], right[0])
    hi = min(left[1], right[1])
    p, q = left, right
    if lo <= hi:
        pieces_p = [iv for iv in ((p[0], lo - 1), (hi + 1, p[1])) if iv[0] <= iv[1]]
        pieces_q = [iv for iv in ((q[0], lo - 1), (hi + 1, q[1])) if iv[0] <= iv[1]]
        if len(pieces_p) != 1 or len(pieces_q) != 1:
            return Degenerate("nested intervals do not reduce to two blocks")
        p, q = pieces_p[0], pieces_q[0]

    len_p = p[1] - p[0] + 1
    len_q = q[1] - q[0] + 1
    if len_p == len_q:
        return Symmetric(p, q)
    longer, shorter = (p, q) if len_p > len_q else (q, p)
    negated = longer[0] > shorter[1]
    if negated:
        longer = (-longer[1], -longer[0])
        shorter = (-shorter[1], -shorter[0])

    k = shorter[1] - shorter[0] + 1
    m = (longer[1] - longer[0] + 1) - k - 1
    n = longer[1] - k
    j = shorter[0] - longer[1] - 1
    return Canonical(CaseParams(j, m, k), n, negated)


def quadratic_of(p: CaseParams) -> QuadraticForm:
    j, m, k = p.j, p.m, p.k
    a = m + 1
    b = -(2 * k * (j + k) + m * (m + 1))
    c = -(k * (j + k) * (j + 2 * k + 1) - exact_div(m * (m + 1) * (2 * m + 1), 6))
    return QuadraticForm(a, b, c)


def discriminant(p: CaseParams) -> int:
    """Closed-form discriminant of :func:`quadratic_of`."""
    j, m, k = p.j, p.m, p.k
    head = 4 * k * (j * (k + m + 1) * (j + 2 * k + m + 1) + k * (k + m + 1) ** 2)
    return head - exact_div(m * (m + 1) ** 2 * (m + 2), 3)


def roots(p: CaseParams) -> RootStatus:
    D = discriminant(p)
    if D < 0:
        return NegativeD(D)
    r = is_perfect_square(D)
    if r is None:
        return IrrationalD(D)
    q = quadratic_of(p)
    lo = Fraction(-q.b - r, 2 * q.a)
    hi = Fraction(-q.b + r, 2 * q.a)
    return RationalRoots((lo, hi), r, r == 0)


def side_sums(p: CaseParams, n: int) -> Tuple[int, int]:
    """Both sides of the rearranged equation.

    L = (n-m)^2 + ... + n^2 and
    R = sum_{i=1..k} [(n+k+j+i)^2 - (n+i)^2] = k(j+k)(j+2k+2n+1).
    """
    j, m, k = p.j, p.m, p.k
    if m > n:
        d = m - n
        L = exact_div(n * (n + 1) * (2 * n + 1) + d * (d + 1) * (2 * d + 1), 6)
    else:
        d = n - m
        L = exact_div(n * (n + 1) * (2 * n + 1) - (d - 1) * d * (2 * d - 1), 6)
    R = k * (j + k) * (j + 2 * k + 2 * n + 1)
    return L, R


@dataclass(frozen=True)
class Verification:
    holds: bool
    left_sum: int
    right_sum: int

    @property
    def common(self) -> Optional[int]:
        return self.left_sum if self.holds else None

    def __bool__(self) -> bool:
        return self.holds


def verify_solution(p: CaseParams, n: int) -> Verification:
    """Check the identity for (p, n) by summing both blocks directly."""
    ls = sum_sq_interval(*p.left(n))
    rs = sum_sq_interval(*p.right(n))
    return Verification(ls == rs, ls, rs)


@dataclass(frozen=True)
class DostorIdentity:
    k: int
    n_plus: int
    n_minus: int
    common_sum: int
    closed_form: int
    minus_sum: int


def dostor(k: int) -> DostorIdentity:
    """The j = m = 0 identity with roots k(2k+1) and -k."""
    if k < 1:
        raise DomainError(f"dostor needs k >= 1, got {k}")
    p = CaseParams(0, 0, k)
    n_plus, n_minus = k * (2 * k + 1), -k
    upper = verify_solution(p, n_plus)
    lower = verify_solution(p, n_minus)
    if not (upper and lower):
        raise InvariantError(f"Dostor identity fails at k={k}")
    closed = exact_div(k * (k + 1) * (2 * k + 1) * (12 * k * k + 12 * k + 1), 6)
    if closed != upper.left_sum:
        raise InvariantError(f"Dostor closed form disagrees at k={k}")
    return DostorIdentity(k, n_plus, n_minus, upper.left_sum, closed, lower.left_sum)
