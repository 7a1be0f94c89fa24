"""Exact coefficients and growth estimates for two families of
generalized partition products indexed by admissible triples (i, j, k).
"""

from .divisors import (
    AdmissibleTriple,
    DivisorTable,
    chi,
    cycle_weight,
    cycle_weight_weighted,
    divisors_of,
    psi,
    tau_k,
)
from .series import (
    CoeffSequence,
    egf_coeffs,
    egf_coeffs_weighted,
    ogf_coeffs_euler,
    to_bfile,
    to_json,
)
from .oracle import CycleType, cycle_type_sum, cycle_types, product_expand
from .asympt import (
    CONSTANTS,
    AsymptoticModel,
    CoeffEstimate,
    MathConstants,
    NoClosedFormError,
    NotTabulatedError,
    PoleAbsentError,
    ResiduePolynomial,
    asymptotic_model,
    coeff_asymptotic,
    kotesovec_ratio,
    lambert_w,
    lambert_w_log,
    log_coeff_asymptotic,
    residue_leading,
    residue_polynomial,
    weak_saddle_alpha,
)
from .cli import BFileRecord, ComparisonReport, compare_sequence, parse_bfile

__version__ = "0.1.0"

__all__ = [
    "AdmissibleTriple",
    "AsymptoticModel",
    "BFileRecord",
    "CoeffEstimate",
    "CoeffSequence",
    "ComparisonReport",
    "CONSTANTS",
    "CycleType",
    "DivisorTable",
    "MathConstants",
    "NoClosedFormError",
    "NotTabulatedError",
    "PoleAbsentError",
    "ResiduePolynomial",
    "asymptotic_model",
    "chi",
    "coeff_asymptotic",
    "compare_sequence",
    "cycle_type_sum",
    "cycle_types",
    "cycle_weight",
    "cycle_weight_weighted",
    "divisors_of",
    "egf_coeffs",
    "egf_coeffs_weighted",
    "kotesovec_ratio",
    "lambert_w",
    "lambert_w_log",
    "log_coeff_asymptotic",
    "ogf_coeffs_euler",
    "parse_bfile",
    "product_expand",
    "psi",
    "residue_leading",
    "residue_polynomial",
    "tau_k",
    "to_bfile",
    "to_json",
    "weak_saddle_alpha",
]
