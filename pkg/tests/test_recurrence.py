"""The coefficient recurrence, closed forms, instantiation, and the lift."""

from fractions import Fraction

import pytest

from amnmodes.polynomials import RatPoly, poly_eval
from amnmodes.recurrence import (
    advance_pair,
    build_amn_polynomial,
    closed_form_extremes,
    coefficient_polynomials,
    instantiate_solution,
    lift_solution,
    matrix_chain_pair,
    polynomial_report,
    seed_pair,
    verify_system,
)

F = Fraction


class TestSeed:
    def test_m1(self):
        s = seed_pair(1)
        assert s.p == RatPoly([F(5, 2), F(-3, 2)])
        assert s.q == RatPoly([F(19, 10), F(-9, 10)])

    def test_m3(self):
        s = seed_pair(3)
        assert s.p == RatPoly([F(9, 2), F(-3, 2)])
        assert s.q == RatPoly([F(39, 10), F(-9, 10)])

    def test_m1_eval_at_root(self):
        # the order-1 solution has a_1 = -5/3 at t = 25/9
        assert poly_eval(seed_pair(1).p, F(25, 9)) == F(-5, 3)

    def test_m0_rejected(self):
        with pytest.raises(ValueError, match="seed defined for m >= 1"):
            seed_pair(0)


class TestAdvance:
    def test_m2_values_at_root(self):
        # forward substitution in the order-2 system with b0 = 7/3 gives
        # a = (1, -14/3, 7/3), b = (7/3, -14/3, 1)
        pair2 = advance_pair(2, 2, seed_pair(2))
        t = F(49, 9)
        assert poly_eval(pair2.p, t) == F(7, 3)
        assert poly_eval(pair2.q, t) == F(3, 7)  # b2 = b0*q2(t) = 1

    def test_degrees(self):
        pairs = coefficient_polynomials(5)
        assert pairs[4].p.degree == 4
        assert pairs[4].q.degree == 4

    def test_index_mismatch(self):
        with pytest.raises(ValueError, match="pair index must be j-1"):
            advance_pair(3, 3, seed_pair(3))


class TestChain:
    def test_m1(self):
        pairs = coefficient_polynomials(1)
        assert len(pairs) == 2
        assert pairs[0].p == RatPoly([1]) and pairs[0].q == RatPoly([1])
        assert pairs[1].p == seed_pair(1).p

    def test_matrix_route_agrees(self):
        for m in (2, 3, 5, 8):
            pairs = coefficient_polynomials(m)
            for j in range(1, m + 1):
                mp = matrix_chain_pair(m, j)
                assert mp.p == pairs[j].p
                assert mp.q == pairs[j].q

    def test_m6_reproduces_printed_polynomial(self):
        amn = build_amn_polynomial(6)
        assert amn.integer.coeffs == (
            -5636255625,
            10271620375,
            -6018285581,
            1578233251,
            -209304603,
            14480613,
            -494991,
            6561,
        )


class TestAmnPolynomial:
    def test_m1(self):
        assert build_amn_polynomial(1).integer.coeffs == (25, -34, 9)

    def test_m2(self):
        assert build_amn_polynomial(2).integer.coeffs == (-1225, 1891, -747, 81)

    def test_m4(self):
        assert build_amn_polynomial(4).integer.coeffs == (
            -1334025,
            2306749,
            -1206490,
            256122,
            -23085,
            729,
        )

    def test_degree(self):
        for m in (1, 2, 7, 12):
            assert build_amn_polynomial(m).rational.degree == m + 1

    def test_extremes_match_closed_forms_up_to_30(self):
        for m in range(1, 31):
            rational = build_amn_polynomial(m).rational
            c, d = closed_form_extremes(m)
            assert rational.coeffs[-1] == d
            assert rational.coeffs[0] == -c


class TestClosedForms:
    @pytest.mark.parametrize(
        "m,c,d",
        [
            (1, F(5, 2), F(-9, 10)),
            (2, F(35, 8), F(81, 280)),
            (3, F(105, 16), F(-27, 560)),
        ],
    )
    def test_small_m(self, m, c, d):
        assert closed_form_extremes(m) == (c, d)

    def test_m3_constant_cross_check(self):
        # printed order-3 polynomial: constant 11025 with scale 1680
        amn = build_amn_polynomial(3)
        c, _ = closed_form_extremes(3)
        assert amn.scale * (-c) == 11025
        assert amn.integer[0] == 11025


class TestInstantiate:
    def test_order1_remark_coefficients(self):
        s = instantiate_solution(1, F(5, 3))
        assert s.a == (1, F(-5, 3))
        assert s.b == (F(5, 3), -1)

    def test_order2(self):
        s = instantiate_solution(2, F(7, 3))
        assert s.a == (1, F(-14, 3), F(7, 3))
        assert s.b == (F(7, 3), F(-14, 3), 1)

    def test_b0_zero(self):
        s = instantiate_solution(1, 0)
        assert s.a == (1, F(5, 2))
        assert s.b == (0, 0)


class TestVerifySystem:
    def test_solution_has_zero_residuals(self):
        assert verify_system(instantiate_solution(1, F(5, 3))) == [0, 0, 0]
        assert verify_system(instantiate_solution(2, F(7, 3))) == [0, 0, 0, 0, 0]

    def test_non_root_last_residual_is_minus_p_of_t(self):
        s = instantiate_solution(1, 2)
        res = verify_system(s)
        rational = build_amn_polynomial(1).rational
        assert res[-1] == -poly_eval(rational, 4)
        assert res[-1] != 0

    def test_last_residual_identity_generic(self):
        for m in (2, 3, 5):
            rational = build_amn_polynomial(m).rational
            for b0 in (F(1, 2), 2, F(-7, 5)):
                res = verify_system(instantiate_solution(m, b0))
                assert res[-1] == -poly_eval(rational, b0 * b0)


class TestLift:
    def test_order1_example(self):
        s = instantiate_solution(1, F(5, 3))
        up = lift_solution(s)
        assert up.m == 2
        assert up.a == (1, F(-2, 3), F(-5, 3))
        assert up.b == (F(5, 3), F(2, 3), -1)

    def test_lift_solves_next_system(self):
        for m in (1, 2, 4):
            for j in (1, m + 1):
                s = instantiate_solution(m, F(2 * j + 1, 3))
                assert all(r == 0 for r in verify_system(lift_solution(s)))

    def test_lift_at_unit_root_lands_in_next_root_set(self):
        up = lift_solution(instantiate_solution(1, 1))
        assert all(r == 0 for r in verify_system(up))
        assert poly_eval(build_amn_polynomial(2).rational, 1) == 0

    def test_lift_rejects_non_solution(self):
        with pytest.raises(ValueError, match="lift requires an exact"):
            lift_solution(instantiate_solution(1, 2))

    def test_lift_base_mode(self):
        up = lift_solution(instantiate_solution(0, 1))
        assert up.m == 1
        assert all(r == 0 for r in verify_system(up))


def test_polynomial_report_schema():
    report = polynomial_report(1)
    assert report["integer_coefficients"] == ["25", "-34", "9"]
    assert report["rational_coefficients"] == ["-5/2", "17/5", "-9/10"]
    assert report["c_m"] == "5/2"
    assert report["d_m"] == "-9/10"
    assert report["m"] == 1
