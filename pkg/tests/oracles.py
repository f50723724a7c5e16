"""Independent brute-force oracles.

Nothing here imports the package: each helper recomputes a quantity the slow,
obvious way so that tests compare two unrelated code paths.
"""

from fractions import Fraction
from math import isqrt


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def sum_squares(a, b):
    return sum(x * x for x in range(a, b + 1))


def quad_number(k, j):
    return k * (k + 1) * (k + j) * (k + j + 1)


def quadratic_coeffs(j, m, k):
    """(a, b, c) of the equation in n, found by sampling sum differences.

    f(n) = sum_{n-m}^{n+k} x^2 - sum_{n+k+j+1}^{n+2k+j} x^2 is quadratic in n;
    three samples determine it.
    """
    def f(n):
        return sum_squares(n - m, n + k) - sum_squares(n + k + j + 1, n + 2 * k + j)

    f0, f1, f2 = f(0), f(1), f(2)
    a2 = f2 - 2 * f1 + f0          # 2a
    a = a2 // 2
    b = f1 - f0 - a
    return a, b, f0


def rational_roots(j, m, k):
    """Sorted distinct rational roots of the interval equation, or None."""
    a, b, c = quadratic_coeffs(j, m, k)
    d = b * b - 4 * a * c
    if d < 0 or not is_square(d):
        return None
    r = isqrt(d)
    return sorted({Fraction(-b - r, 2 * a), Fraction(-b + r, 2 * a)}), r


def square_pairs(kmax, smax):
    """Every (k, j, root) with 1 <= k <= kmax, k + j <= smax and Pi square."""
    out = []
    for k in range(1, kmax + 1):
        kk = k * (k + 1)
        for s in range(k, smax + 1):
            v = kk * s * (s + 1)
            r = isqrt(v)
            if r * r == v:
                out.append((k, s - k, r))
    return out


def type2_pairs(amax, bmax):
    out = []
    for a in range(1, amax + 1):
        for b in range(a, bmax + 1):
            v = 2 * a * (a + 1) * b * (b + 1)
            r = isqrt(v)
            if r * r == v:
                out.append((a, b, r))
    return out


def pell_x(n):
    xs = [0, 1]
    while len(xs) < n:
        xs.append(2 * xs[-1] + xs[-2])
    return xs[:n]


def square_triangulars(limit):
    """All t <= limit with t(t+1)/2 a perfect square, by direct search."""
    return [t for t in range(limit + 1) if is_square(t * (t + 1) // 2)]
