"""Exact invariants and cosmetic-surgery obstructions for two-bridge knots."""

from .alexander import (
    LaurentPolynomial,
    SeifertMatrix,
    alexander_poly,
    conway_even_form,
    genus3_closed_form,
    is_tau_zero,
    knot_determinant,
    kx_alexander_closed,
    second_derivative_at_one,
    seifert_from_conway,
    signature,
)
from .casson import (
    LambdaValue,
    SurgerySlope,
    cosmetic_difference,
    lambda_difference,
    lambda_surgery,
    root_of_unity_check,
    slope_distance,
    total_seminorm,
)
from .errors import (
    DomainError,
    EvaluationError,
    InternalError,
    MeridianError,
    NormalizationError,
    SingularError,
    TwoBridgeError,
)
from .obstruction import (
    NiWuPair,
    ObstructionReport,
    Verdict,
    census,
    classify,
    knot_name,
    niwu_candidate_slopes,
    obstruct,
)
from .rational import (
    ContinuedFraction,
    ConwayForm,
    Equivalence,
    Rational,
    SchubertForm,
    canonicalize,
    cf_eval,
    crossing_number,
    equivalent,
    kx_family,
    kx_simple_cf,
    preferred_form,
    simple_cf,
)
from .slopes import (
    BoundarySlopeRecord,
    SlopeSystem,
    apply_substitutions,
    enumerate_bscf,
    mmr_substitution_enumerate,
    pattern_counts,
    slope_of,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "BoundarySlopeRecord",
    "ContinuedFraction",
    "ConwayForm",
    "DomainError",
    "Equivalence",
    "EvaluationError",
    "InternalError",
    "LambdaValue",
    "LaurentPolynomial",
    "MeridianError",
    "NiWuPair",
    "NormalizationError",
    "ObstructionReport",
    "Rational",
    "SchubertForm",
    "SeifertMatrix",
    "SingularError",
    "SlopeSystem",
    "SurgerySlope",
    "TwoBridgeError",
    "Verdict",
    "alexander_poly",
    "apply_substitutions",
    "canonicalize",
    "census",
    "cf_eval",
    "classify",
    "conway_even_form",
    "cosmetic_difference",
    "crossing_number",
    "enumerate_bscf",
    "equivalent",
    "genus3_closed_form",
    "is_tau_zero",
    "knot_determinant",
    "knot_name",
    "kx_alexander_closed",
    "kx_family",
    "kx_simple_cf",
    "lambda_difference",
    "lambda_surgery",
    "mmr_substitution_enumerate",
    "niwu_candidate_slopes",
    "obstruct",
    "pattern_counts",
    "preferred_form",
    "root_of_unity_check",
    "second_derivative_at_one",
    "seifert_from_conway",
    "signature",
    "simple_cf",
    "slope_distance",
    "slope_of",
    "total_seminorm",
    "weight",
]
