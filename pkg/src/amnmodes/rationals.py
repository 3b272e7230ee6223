"""Exact rational scalars and their string forms.

Every coefficient in the exact pipeline is a ``fractions.Fraction``:
arbitrary precision, always gcd-reduced, denominator always positive.
The helpers here pin the "num/den" wire format used in JSON exports.
"""

from fractions import Fraction

Rational = Fraction


def rational_from_string(s: str) -> Rational:
    """Parse "num/den" (or a bare integer) into a Rational."""
    return Fraction(s.strip())


def rational_to_string(q: Rational) -> str:
    """Format as "num/den", or just "num" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
