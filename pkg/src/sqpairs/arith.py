"""Exact integer and rational primitives.

Everything here works on Python ints and :class:`fractions.Fraction`, so no
value ever loses precision.  :class:`QuadExt` adds the ring Q(sqrt 2), which
is where the closed forms built from powers of ``1 + sqrt 2`` and
``3 + 2 sqrt 2`` get evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

__all__ = [
    "DomainError",
    "InvariantError",
    "exact_div",
    "isqrt",
    "is_perfect_square",
    "triangular",
    "sum_sq_prefix",
    "sum_sq_interval",
    "QuadExt",
    "qext_pow",
    "SQRT2",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InvariantError(ArithmeticError):
    """An identity that must hold exactly did not; indicates a bug."""


def exact_div(num: int, den: int) -> int:
    """Divide, raising :class:`InvariantError` unless the remainder is zero."""
    q, r = divmod(num, den)
    if r:
        raise InvariantError(f"{num} is not divisible by {den}")
    return q


def isqrt(n: int) -> int:
    """Return floor(sqrt(n)) for a nonnegative integer of any size."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


# Squares occupy 12 of the 64 residues mod 64.
_SQUARE_RESIDUES_64 = frozenset((r * r) % 64 for r in range(64))


def is_perfect_square(n: int) -> Optional[int]:
    """Return the nonnegative root r with r*r == n, or None."""
    if n < 0:
        return None
    if (n & 63) not in _SQUARE_RESIDUES_64:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def triangular(t: int) -> int:
    if t < 0:
        raise DomainError(f"triangular({t}): t must be nonnegative")
    return exact_div(t * (t + 1), 2)


def _prefix(t: int) -> int:
    # Polynomial t(t+1)(2t+1)/6; valid (and integral) for every integer t.
    return exact_div(t * (t + 1) * (2 * t + 1), 6)


def sum_sq_prefix(t: int) -> int:
    """1^2 + 2^2 + ... + t^2."""
    if t < 0:
        raise DomainError(f"sum_sq_prefix({t}): t must be nonnegative")
    return _prefix(t)


def sum_sq_interval(a: int, b: int) -> int:
    """Sum of x^2 for a <= x <= b; endpoints may be negative."""
    if a > b:
        raise DomainError(f"empty interval [{a}, {b}]")
    if a >= 0:
        return _prefix(b) - _prefix(a - 1)
    if b <= 0:
        return _prefix(-a) - _prefix(-b - 1)
    return _prefix(-a) + _prefix(b)


Number = Union[int, Fraction]


@dataclass(frozen=True)
class QuadExt:
    """The number ``a + b*sqrt(2)`` with rational a and b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def _coerce(cls, other: object) -> Optional["QuadExt"]:
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def __add__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    def norm(self) -> Fraction:
        """x * conjugate(x), which is always rational."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        c = self.conjugate()
        return QuadExt(c.a / n, c.b / n)

    def __truediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "QuadExt":
        return qext_pow(self, e)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_int(self) -> int:
        """Return the value as an int, raising InvariantError if it is not one."""
        if self.b != 0 or self.a.denominator != 1:
            raise InvariantError(f"{self} is not an integer")
        return self.a.numerator

    def __str__(self) -> str:
        return f"{self.a}+{self.b}*sqrt2"


SQRT2 = QuadExt(0, 1)


def qext_pow(x: QuadExt, e: int) -> QuadExt:
    """Exact x**e by binary exponentiation; x**0 is 1."""
    if e < 0:
        raise DomainError(f"negative exponent {e}")
    result = QuadExt(1, 0)
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result
