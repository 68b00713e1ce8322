"""Identity checks assembled from the polynomial, K-theory and intersection engines."""

from app.services.verify.geometry import (
    arr_range_report,
    arr_report,
    gr_identity_report,
    pushforward_range_report,
    pushforward_report,
    summand_report,
    symbolic_arr_report,
)
from app.services.verify.schemas import (
    CoeffEntry,
    CoeffTable,
    SweepSummary,
    VerificationReport,
)
from app.services.verify.service import (
    CLOSED_FORM_SAMPLE_PRIMES,
    closed_form_moments,
    closed_form_sums,
    coeff_exponent,
    coeff_moments_report,
    coeff_oracle_report,
    coeff_table,
    cube_identity_report,
    cube_identity_sides,
    deligne_sides,
    expansion_oracle,
    lambda_recursion_sides,
    main_degree_sides,
    main_graded_lines,
    moment_sums,
    mumford_binding,
    mumford_exponent,
    mumford_exponents_by_induction,
    top_lambda_exponents,
    triviality_triples,
    verify_cube_identity,
    verify_deligne,
    verify_deligne_all,
    verify_lambda_induction,
    verify_lambda_recursion,
    verify_main_degree,
    verify_main_grading,
    verify_mumford,
    verify_omega_pairing,
    verify_power_triviality,
    verify_remark_lambda,
    verify_top_lambda,
    verify_virtual_pairing,
)

__all__ = [
    "CLOSED_FORM_SAMPLE_PRIMES",
    "CoeffEntry",
    "CoeffTable",
    "SweepSummary",
    "VerificationReport",
    "arr_range_report",
    "arr_report",
    "closed_form_moments",
    "closed_form_sums",
    "coeff_exponent",
    "coeff_moments_report",
    "coeff_oracle_report",
    "coeff_table",
    "cube_identity_report",
    "cube_identity_sides",
    "deligne_sides",
    "expansion_oracle",
    "gr_identity_report",
    "lambda_recursion_sides",
    "main_degree_sides",
    "main_graded_lines",
    "moment_sums",
    "mumford_binding",
    "mumford_exponent",
    "mumford_exponents_by_induction",
    "pushforward_range_report",
    "pushforward_report",
    "summand_report",
    "symbolic_arr_report",
    "top_lambda_exponents",
    "triviality_triples",
    "verify_cube_identity",
    "verify_deligne",
    "verify_deligne_all",
    "verify_lambda_induction",
    "verify_lambda_recursion",
    "verify_main_degree",
    "verify_main_grading",
    "verify_mumford",
    "verify_omega_pairing",
    "verify_power_triviality",
    "verify_remark_lambda",
    "verify_top_lambda",
    "verify_virtual_pairing",
]
