"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending power order.  The zero polynomial is
the empty coefficient tuple; otherwise the trailing (highest) coefficient
is nonzero.  All arithmetic is exact; nothing in this module touches
floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import Rational, rational_from_string, rational_to_string


class RatPoly:
    """Immutable dense polynomial with Rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int) -> Rational:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "RatPoly":
        return self.scale(-1)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return RatPoly(out)

    def scale(self, k) -> "RatPoly":
        k = Fraction(k)
        return RatPoly(c * k for c in self.coeffs)

    def shift(self, n: int = 1) -> "RatPoly":
        """Multiply by t**n."""
        if self.is_zero:
            return self
        return RatPoly((Fraction(0),) * n + self.coeffs)

    def __call__(self, x) -> Rational:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient_strings(self) -> list[str]:
        return [rational_to_string(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "RatPoly":
        return cls(rational_from_string(s) for s in strings)

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"


class IntPoly:
    """Primitive integer polynomial: content 1, positive leading coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ValueError("IntPoly must be nonzero")
        if cs[-1] < 0:
            raise ValueError("leading coefficient must be positive")
        if math.gcd(*(abs(c) for c in cs)) != 1:
            raise ValueError("coefficients must have content 1")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x) -> Rational:
        return self.as_ratpoly()(x)

    def as_ratpoly(self) -> RatPoly:
        return RatPoly(self.coeffs)

    def coefficient_strings(self) -> list[str]:
        """Decimal strings, ascending power order (JSON wire format).

        Strings, not native numbers: coefficients outgrow 64-bit range
        quickly as the degree climbs.
        """
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "IntPoly":
        return cls(int(s) for s in strings)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


def poly_eval(p: RatPoly, x) -> Rational:
    """Exact Horner evaluation."""
    return p(x)


def primitive_integer_form(p: RatPoly) -> tuple[IntPoly, Rational]:
    """Unique primitive integer multiple of p, plus the scale applied.

    Returns (q, s) with q = s * p, q having content 1 and positive leading
    coefficient.
    """
    if p.is_zero:
        raise ValueError("cannot normalize zero polynomial")
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    g = math.gcd(*(abs(c) for c in ints))
    sign = 1 if ints[-1] > 0 else -1
    scale = Fraction(sign * den, g)
    return IntPoly(sign * c // g for c in ints), scale
