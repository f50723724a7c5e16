"""Square triangular numbers, the Pell recursion and near-isosceles triples.

The companion sequence x = 0, 1, 2, 5, 12, 29, ... (x[i+2] = 2 x[i+1] + x[i])
drives everything: the i-th square triangular number is t_i = 2 x_i^2 for
even i and (x_{i-1} + x_i)^2 for odd i, and the i-th triple (n, n+1, c)
with n^2 + (n+1)^2 = c^2 has c = x_i^2 + x_{i+1}^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List

from .arith import (
    SQRT2,
    DomainError,
    InvariantError,
    QuadExt,
    is_perfect_square,
    qext_pow,
    triangular,
)
from .intervals import CaseParams, RootStatus, roots

_SILVER = QuadExt(1, 1)           # 1 + sqrt 2
_SILVER_BAR = QuadExt(1, -1)      # 1 - sqrt 2
_EULER = QuadExt(3, 2)            # 3 + 2 sqrt 2 = (1 + sqrt 2)^2
_EULER_BAR = QuadExt(3, -2)


@lru_cache(maxsize=None)
def _x_table(upto: int) -> tuple:
    xs = [0, 1]
    while len(xs) <= upto:
        xs.append(2 * xs[-1] + xs[-2])
    return tuple(xs[: upto + 1])


def x_sequence(upto: int) -> List[int]:
    """x_0 .. x_upto inclusive."""
    if upto < 0:
        raise DomainError("upto must be nonnegative")
    return list(_x_table(max(upto, 1))[: upto + 1])


def x_at(i: int) -> int:
    if i < 0:
        raise DomainError(f"x_at({i})")
    a, b = 0, 1
    for _ in range(i):
        a, b = b, 2 * b + a
    return a


def x_explicit(i: int) -> int:
    """x_i from the Binet-style form sqrt2/4 * ((1+sqrt2)^i - (1-sqrt2)^i)."""
    if i < 0:
        raise DomainError(f"x_explicit({i})")
    val = SQRT2 * (qext_pow(_SILVER, i) - qext_pow(_SILVER_BAR, i)) / 4
    return val.to_int()


@dataclass(frozen=True)
class PellState:
    """A solution of t(t+1) = 2 d^2."""

    t: int
    d: int

    def is_valid(self) -> bool:
        return self.t >= 0 and self.d >= 0 and self.t * (self.t + 1) == 2 * self.d * self.d

    def classic_form(self) -> int:
        """(2t+1)^2 - 2(2d)^2; equals 1 for every valid state."""
        return (2 * self.t + 1) ** 2 - 2 * (2 * self.d) ** 2


def square_triangular(i: int) -> PellState:
    """The i-th square triangular number t_i(t_i+1)/2 = d_i^2 (i = 0, 1, ...)."""
    if i < 0:
        raise DomainError(f"square_triangular({i})")
    if i % 2 == 0:
        t = 2 * x_at(i) ** 2
    else:
        t = (x_at(i - 1) + x_at(i)) ** 2
    d = is_perfect_square(triangular(t))
    if d is None:
        raise InvariantError(f"t_{i} = {t} is not square triangular")
    closed = (qext_pow(_SILVER, 2 * i) - qext_pow(_SILVER_BAR, 2 * i)) / (4 * SQRT2)
    if closed.to_int() != d:
        raise InvariantError(f"closed form for d_{i} disagrees")
    return PellState(t, d)


def euler_td(n: int) -> PellState:
    """Euler's explicit solution of t(t+1) = 2 d^2, evaluated exactly."""
    if n < 0:
        raise DomainError(f"euler_td({n})")
    up, down = qext_pow(_EULER, n), qext_pow(_EULER_BAR, n)
    t = (up + down) / 4 - QuadExt(1, 0) / 2
    d = (up - down) / (4 * SQRT2)
    state = PellState(t.to_int(), d.to_int())
    if not state.is_valid():
        raise InvariantError(f"Euler's formula gave {state}")
    return state


def pell_step(s: PellState) -> PellState:
    """(t, d) -> (3t + 4d + 1, 2t + 3d + 1)."""
    if not s.is_valid():
        raise DomainError(f"{s} does not satisfy t(t+1) = 2d^2")
    return PellState(3 * s.t + 4 * s.d + 1, 2 * s.t + 3 * s.d + 1)


def pell_states(count: int) -> List[PellState]:
    """The first ``count`` solutions starting from (0, 0)."""
    out = []
    s = PellState(0, 0)
    for _ in range(count):
        out.append(s)
        s = pell_step(s)
    return out


def square_triangular_index(t: int) -> int | None:
    """Return i with t == t_i, or None when t is not square triangular."""
    if t < 0 or is_perfect_square(triangular(t)) is None:
        return None
    s, i = PellState(0, 0), 0
    while s.t < t:
        s, i = pell_step(s), i + 1
    return i if s.t == t else None


@dataclass(frozen=True)
class IsoscelesTriple:
    """(n, n+1, n+j+2)."""

    n: int
    j: int

    @property
    def legs(self) -> tuple:
        return (self.n, self.n + 1)

    @property
    def hypotenuse(self) -> int:
        return self.n + self.j + 2

    def as_tuple(self) -> tuple:
        return (self.n, self.n + 1, self.hypotenuse)

    def holds(self) -> bool:
        return self.n ** 2 + (self.n + 1) ** 2 == self.hypotenuse ** 2


def near_isosceles(i: int) -> IsoscelesTriple:
    """The i-th near-isosceles Pythagorean triple, 1-based: (3, 4, 5) is i = 1."""
    if i < 1:
        raise DomainError(f"near_isosceles index must be >= 1, got {i}")
    xi, xn = x_at(i), x_at(i + 1)
    n = xn * xn - xi * xi if i % 2 else 2 * xi * xn
    hyp = xi * xi + xn * xn
    tri = IsoscelesTriple(n, hyp - n - 2)
    if not tri.holds():
        raise InvariantError(f"triple {tri.as_tuple()} is not Pythagorean")
    return tri


def companion_triple(i: int) -> IsoscelesTriple:
    """Triple from the smaller root of the k = 1 quadratic for the i-th j.

    It is (-(n'+1), -n', c') where (n', n'+1, c') is triple i-1, and
    (-1, 0, 1) when i = 1.
    """
    if i < 1:
        raise DomainError(f"companion_triple index must be >= 1, got {i}")
    j = near_isosceles(i).j
    if i == 1:
        n = -1
    else:
        n = -(near_isosceles(i - 1).n + 1)
    tri = IsoscelesTriple(n, j)
    if not tri.holds():
        raise InvariantError(f"companion triple {tri.as_tuple()} is not Pythagorean")
    return tri


def k1_roots(j: int) -> RootStatus:
    """Roots of n^2 = 2(j+1) n + (j+1)(j+3), i.e. the m = 0, k = 1 case."""
    return roots(CaseParams(j, 0, 1))


def pythagorean_from_params(y: int, z: int) -> tuple:
    """(y^2 - z^2, 2yz, y^2 + z^2); validation helper for triples."""
    return (y * y - z * z, 2 * y * z, y * y + z * z)
