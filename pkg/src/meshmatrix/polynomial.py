"""Dense univariate polynomials with exact (int or Fraction) coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Polynomial:
    """Polynomial stored as ascending-degree coefficients.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.  Fraction coefficients with unit denominator are stored
    as ints, which keeps equality between integer and rational results exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Number, ...] = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Sequence[Number]) -> "Polynomial":
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> Number:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def shift(self, c: Number) -> "Polynomial":
        """Return the polynomial ``p(X + c)``."""
        out = [0] * len(self.coeffs)
        for n, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k in range(n + 1):
                out[k] += a * comb(n, k) * c ** (n - k)
        return Polynomial(out)

    def to_json(self) -> list:
        return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "X" if k == 1 else f"X^{k}"
                body = var if mag == 1 else f"{mag}{var}" if isinstance(mag, int) else f"({mag}){var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


X = Polynomial([0, 1])


def interpolate(values: Sequence[Number]) -> Polynomial:
    """Polynomial of degree < len(values) taking ``values[i]`` at ``x = i``.

    Newton forward differences over the integer nodes 0..n, exact in
    Fraction arithmetic.
    """
    n = len(values)
    diffs = [Fraction(v) for v in values]
    newton = []
    for k in range(n):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    # p(x) = sum_k Δ^k f(0) * C(x, k); expand the falling factorials.
    result = Polynomial()
    falling = Polynomial([1])
    fact = 1
    for k, d in enumerate(newton):
        if k:
            falling = falling * Polynomial([-(k - 1), 1])
            fact *= k
        if d:
            result = result + falling * (d / fact)
    return result
