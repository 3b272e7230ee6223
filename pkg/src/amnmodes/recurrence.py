"""The coefficient recurrence behind the zero-mode ansatz.

The ansatz coefficients a_j, b_j of the order-m spinor field split by
parity in b0: a_j = p_j(b0**2) and b_j = b0 * q_j(b0**2).  Working in the
variable t = b0**2 halves every degree and makes the order-m closing
polynomial P_m(t) = t*q_m(t) - p_m(t) appear directly.

Two independent routes build the chain of (p_j, q_j) pairs: stepwise
forward substitution (`advance_pair`) and a 2x2 polynomial-matrix product
(`matrix_chain_pair`); tests check they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import IntPoly, RatPoly, poly_eval, primitive_integer_form
from .rationals import Rational, rational_to_string


@dataclass(frozen=True)
class CoeffPair:
    """The pair (p_j, q_j) encoding a_j and b_j at one recurrence index."""

    j: int
    p: RatPoly
    q: RatPoly


@dataclass(frozen=True)
class AnsatzSolution:
    """Numeric coefficient lists of an order-m ansatz at a chosen b0."""

    m: int
    b0: Rational
    a: tuple
    b: tuple


def seed_pair(m: int) -> CoeffPair:
    """The j=1 pair: p1 = ((2m+3) - 3t)/2, q1 = ((10m+9) - 9t)/10."""
    if m < 1:
        raise ValueError("seed defined for m >= 1")
    p1 = RatPoly([Fraction(2 * m + 3, 2), Fraction(-3, 2)])
    q1 = RatPoly([Fraction(10 * m + 9, 10), Fraction(-9, 10)])
    return CoeffPair(1, p1, q1)


def advance_pair(m: int, j: int, prev: CoeffPair) -> CoeffPair:
    """One recurrence step: pair j-1 -> pair j, for 2 <= j <= m."""
    if not 2 <= j <= m:
        raise ValueError("advance defined for 2 <= j <= m")
    if prev.j != j - 1:
        raise ValueError("pair index must be j-1")
    w = 2 * m + 5 - 2 * j
    p = (prev.p.scale(w) - prev.q.shift().scale(3)).scale(Fraction(1, 2 * j))
    q = (
        prev.p.scale(3 * w)
        + prev.q.scale(2 * j * (2 * m + 2 - 2 * j))
        - prev.q.shift().scale(9)
    ).scale(Fraction(1, 2 * j * (2 * j + 3)))
    return CoeffPair(j, p, q)


def coefficient_polynomials(m: int) -> list[CoeffPair]:
    """Full chain of pairs j = 0..m; pair 0 encodes a_0 = 1, b_0 = b0."""
    one = RatPoly([1])
    if m == 0:
        return [CoeffPair(0, one, one)]
    pairs = [CoeffPair(0, one, one), seed_pair(m)]
    for j in range(2, m + 1):
        pairs.append(advance_pair(m, j, pairs[-1]))
    return pairs


def recurrence_matrix(m: int, p: int) -> tuple[RatPoly, RatPoly, RatPoly, RatPoly]:
    """Entries of the step matrix acting on (p, q) pairs, row-major.

    The original matrix acts on (a, b) with entries in b0; rewriting on
    the parity pair absorbs one factor b0 and turns b0**2 into t.
    """
    if not 2 <= p <= m:
        raise ValueError("step matrix defined for 2 <= p <= m")
    w = 2 * m + 5 - 2 * p
    d1 = Fraction(1, 2 * p)
    d2 = Fraction(1, 2 * p * (2 * p + 3))
    return (
        RatPoly([w]).scale(d1),
        RatPoly([0, -3]).scale(d1),
        RatPoly([3 * w]).scale(d2),
        RatPoly([2 * p * (2 * m + 2 - 2 * p), -9]).scale(d2),
    )


def matrix_chain_pair(m: int, j: int) -> CoeffPair:
    """Pair j via the explicit matrix product K_j K_{j-1} ... K_2 on the seed.

    Deliberately a different computational path from `advance_pair`: the
    matrices are multiplied out first, then applied once.
    """
    if j == 1:
        return seed_pair(m)
    if not 2 <= j <= m:
        raise ValueError("matrix chain defined for 1 <= j <= m")
    acc = recurrence_matrix(m, 2)
    for p in range(3, j + 1):
        k = recurrence_matrix(m, p)
        acc = (
            k[0] * acc[0] + k[1] * acc[2],
            k[0] * acc[1] + k[1] * acc[3],
            k[2] * acc[0] + k[3] * acc[2],
            k[2] * acc[1] + k[3] * acc[3],
        )
    s = seed_pair(m)
    return CoeffPair(j, acc[0] * s.p + acc[1] * s.q, acc[2] * s.p + acc[3] * s.q)


@dataclass(frozen=True)
class AmnPolynomial:
    """P_m in rational form t*q_m - p_m and in primitive integer form."""

    m: int
    rational: RatPoly
    integer: IntPoly
    scale: Rational


def build_amn_polynomial(m: int, pairs: list[CoeffPair] | None = None) -> AmnPolynomial:
    if m < 1:
        raise ValueError("P_m defined for m >= 1")
    if pairs is None:
        pairs = coefficient_polynomials(m)
    last = pairs[m]
    rational = last.q.shift() - last.p
    integer, scale = primitive_integer_form(rational)
    return AmnPolynomial(m, rational, integer, scale)


def closed_form_extremes(m: int) -> tuple[Rational, Rational]:
    """(c_m, d_m) by direct product, independent of the recurrence.

    c_m = 5*7*9*...*(2m+3) / (2**m * m!) is the constant coefficient of
    p_m; d_m = (-1)**m * 3**(2m) / (5*7*...*(2m+3) * 2**m * m!) is the
    leading coefficient of q_m.  They are also minus the constant and the
    leading coefficient of the rational P_m.
    """
    if m < 1:
        raise ValueError("closed forms defined for m >= 1")
    odd = 1
    fact = 1
    for k in range(1, m + 1):
        odd *= 2 * k + 3
        fact *= k
    c = Fraction(odd, 2**m * fact)
    d = Fraction((-1) ** m * 3 ** (2 * m), odd * 2**m * fact)
    return c, d


def instantiate_solution(
    m: int, b0, pairs: list[CoeffPair] | None = None
) -> AnsatzSolution:
    """Evaluate the pair chain at t = b0**2 to get numeric coefficients.

    b0 need not be a root of P_m; `verify_system` reports the defect.
    m = 0 is the distinguished base case with the single pair (1, 1).
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    b0 = Fraction(b0)
    t = b0 * b0
    if pairs is None:
        pairs = coefficient_polynomials(m)
    a = tuple(poly_eval(pair.p, t) for pair in pairs)
    b = tuple(b0 * poly_eval(pair.q, t) for pair in pairs)
    return AnsatzSolution(m, b0, a, b)


def verify_system(s: AnsatzSolution) -> list[Rational]:
    """Exact residuals of the 2m+1 coefficient equations.

    Ordering: the odd-labelled a-equations for j = 1..m, then the
    even-labelled b-equations for k = 1..m, then the closing equation
    a_m = b0*b_m, whose residual equals -P_m(b0**2).
    """
    m, b0, a, b = s.m, s.b0, s.a, s.b
    res = []
    for j in range(1, m + 1):
        res.append(2 * j * a[j] - (2 * m + 5 - 2 * j) * a[j - 1] + 3 * b0 * b[j - 1])
    for k in range(1, m + 1):
        res.append((2 * k + 3) * b[k] - (2 * m + 2 - 2 * k) * b[k - 1] - 3 * b0 * a[k])
    res.append(a[m] - b0 * b[m])
    return res


def lift_solution(s: AnsatzSolution) -> AnsatzSolution:
    """Order m -> m+1 via multiplication by (1 + |x|**2).

    The lifted coefficients are the adjacent-pair sums; the lift of an
    exact solution solves the order-(m+1) system with the same b0.
    """
    if any(r != 0 for r in verify_system(s)):
        raise ValueError("lift requires an exact (L_m) solution")
    a = (s.a[0],) + tuple(s.a[n - 1] + s.a[n] for n in range(1, s.m + 1)) + (s.a[s.m],)
    b = (s.b[0],) + tuple(s.b[n - 1] + s.b[n] for n in range(1, s.m + 1)) + (s.b[s.m],)
    return AnsatzSolution(s.m + 1, s.b0, a, b)


def polynomial_report(m: int) -> dict:
    """JSON-ready description of P_m with the closed-form extremes."""
    amn = build_amn_polynomial(m)
    c, d = closed_form_extremes(m)
    return {
        "m": m,
        "rational_coefficients": amn.rational.coefficient_strings(),
        "integer_coefficients": amn.integer.coefficient_strings(),
        "scale": rational_to_string(amn.scale),
        "c_m": rational_to_string(c),
        "d_m": rational_to_string(d),
    }


def solution_report(s: AnsatzSolution) -> dict:
    """JSON-ready description of an instantiated solution."""
    return {
        "m": s.m,
        "b0": rational_to_string(s.b0),
        "a": [rational_to_string(x) for x in s.a],
        "b": [rational_to_string(x) for x in s.b],
        "residuals": [rational_to_string(r) for r in verify_system(s)],
    }
