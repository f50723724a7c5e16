"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

import json
from typing import Iterable, Sequence, Tuple, Union

Scalar = int


class IntPolynomial:
    """coeffs[t] is the coefficient of k**t; trailing zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for t in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[t]
            if c == 0:
                continue
            mag = abs(c)
            if t == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("k" if t == 1 else f"k^{t}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _lift(x: Union["IntPolynomial", int]) -> "IntPolynomial":
        return x if isinstance(x, IntPolynomial) else IntPolynomial([x])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def to_json(self) -> str:
        return json.dumps({"coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        data = json.loads(text)
        return cls(int(c) for c in data["coeffs"])


K = IntPolynomial([0, 1])


def poly(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(coeffs)
