"""Exact construction and verification of the Adam-Muratori-Nash
polynomial sequence and the associated Weyl-Dirac zero modes."""

from .polynomials import IntPoly, RatPoly, poly_eval, primitive_integer_form
from .rationals import Rational, rational_from_string, rational_to_string
from .recurrence import (
    AmnPolynomial,
    AnsatzSolution,
    CoeffPair,
    advance_pair,
    build_amn_polynomial,
    closed_form_extremes,
    coefficient_polynomials,
    instantiate_solution,
    lift_solution,
    matrix_chain_pair,
    seed_pair,
    verify_system,
)
from .roots import (
    RootSet,
    monotonicity_check,
    predicted_roots,
    rational_root_oracle,
    verify_factorization,
)
from .fields import (
    ZeroModeField,
    enumerate_family,
    evaluate_h,
    evaluate_vector_potential,
    evaluate_zero_mode,
    l2_norm_squared,
    loss_yau_residual,
    spin_density,
    weyl_dirac_residual,
)

__version__ = "0.1.0"

__all__ = [
    "AmnPolynomial",
    "AnsatzSolution",
    "CoeffPair",
    "IntPoly",
    "RatPoly",
    "Rational",
    "RootSet",
    "ZeroModeField",
    "advance_pair",
    "build_amn_polynomial",
    "closed_form_extremes",
    "coefficient_polynomials",
    "enumerate_family",
    "evaluate_h",
    "evaluate_vector_potential",
    "evaluate_zero_mode",
    "instantiate_solution",
    "l2_norm_squared",
    "lift_solution",
    "loss_yau_residual",
    "matrix_chain_pair",
    "monotonicity_check",
    "poly_eval",
    "predicted_roots",
    "primitive_integer_form",
    "rational_from_string",
    "rational_root_oracle",
    "rational_to_string",
    "seed_pair",
    "spin_density",
    "verify_factorization",
    "verify_system",
]
