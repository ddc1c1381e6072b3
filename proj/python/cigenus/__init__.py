"""Exact genus bounds for curves on complete intersection surfaces.

Everything is exact: integers come back as Python ints, rationals as
fractions.Fraction. See the functions in cigenus._core for the full surface.
"""

from cigenus._core import (
    BudgetError,
    InfeasibleError,
    binom_trunc,
    bms_castelnuovo_bound,
    bms_small_degree_bound,
    calclem_check,
    ci_curve_genus,
    closed_form_bound,
    gamma_envelope,
    gamma_initial,
    genus_bound,
    ideal_slice_dim,
    instance_info,
    leading_terms,
    quotient_hf,
    quotient_hf_monomial_count,
    quotient_hf_series,
    relaxed_profile,
    specialization_n4,
    specialization_n5,
    stir_check,
    tail_mass,
    threshold_check,
    tight_profile,
    vanish_index,
)

__all__ = [
    "BudgetError",
    "InfeasibleError",
    "binom_trunc",
    "bms_castelnuovo_bound",
    "bms_small_degree_bound",
    "calclem_check",
    "ci_curve_genus",
    "closed_form_bound",
    "gamma_envelope",
    "gamma_initial",
    "genus_bound",
    "ideal_slice_dim",
    "instance_info",
    "leading_terms",
    "quotient_hf",
    "quotient_hf_monomial_count",
    "quotient_hf_series",
    "relaxed_profile",
    "specialization_n4",
    "specialization_n5",
    "stir_check",
    "tail_mass",
    "threshold_check",
    "tight_profile",
    "vanish_index",
]

__version__ = "0.1.0"
