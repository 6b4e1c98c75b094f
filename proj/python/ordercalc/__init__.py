"""Exact operator-ordering calculus for the boson algebra [a, ad] = eps.

Everything is exact rational arithmetic: polynomial identities are decided by
structural equality of canonical forms, never by numeric tolerance.
"""

from ordercalc._core import (
    DEFAULT_WORD_CAP,
    Error,
    FactorialBasisExpansion,
    IdentityReport,
    MPoly,
    N,
    NormalForm,
    OperatorExpr,
    SOrderCoeffs,
    SymmetricForm,
    alpha,
    antinormal_power,
    balanced_to_npoly,
    brute_force_weyl,
    eps,
    eval_on_number_state,
    factorial_monomial_convert,
    falling_factorial,
    forward_difference,
    newton_expand,
    normal_power,
    normalize,
    parse_npoly,
    parse_operator,
    reorder_closed_form,
    rising_factorial,
    s_transform,
    sorder_from_normal,
    stirling_first,
    stirling_row,
    t,
    verify_alpha_odd,
    verify_delta_identity,
    verify_derivative_identity,
    verify_general_relation,
    verify_noncom,
    verify_stirling_relation,
    weyl_antinormal_expansion,
    weyl_from_antinormal,
    weyl_from_normal,
    weyl_symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_WORD_CAP",
    "Error",
    "FactorialBasisExpansion",
    "IdentityReport",
    "MPoly",
    "N",
    "NormalForm",
    "OperatorExpr",
    "SOrderCoeffs",
    "SymmetricForm",
    "alpha",
    "antinormal_power",
    "balanced_to_npoly",
    "brute_force_weyl",
    "eps",
    "eval_on_number_state",
    "factorial_monomial_convert",
    "falling_factorial",
    "forward_difference",
    "newton_expand",
    "normal_power",
    "normalize",
    "parse_npoly",
    "parse_operator",
    "reorder_closed_form",
    "rising_factorial",
    "s_transform",
    "sorder_from_normal",
    "stirling_first",
    "stirling_row",
    "t",
    "verify_alpha_odd",
    "verify_delta_identity",
    "verify_derivative_identity",
    "verify_general_relation",
    "verify_noncom",
    "verify_stirling_relation",
    "weyl_antinormal_expansion",
    "weyl_from_antinormal",
    "weyl_from_normal",
    "weyl_symmetric",
]
