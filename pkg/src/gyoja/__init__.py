"""Exact growth series of affine Weyl groups and distinction of degree-1
discrete series of the associated Hecke algebras.

The package enumerates affine Weyl groups as exact integer affine maps,
forms class-graded generating series over arbitrary-precision rationals,
transcribes the classical closed product formulas (single-variable over the
exponents, and the two/three-variable displays for the non-simply-laced
affine types), cross-checks the two against each other, and evaluates the
numerical distinction criterion for sign characters of the Hecke algebra.
"""

__version__ = "0.1.0"

from .cartan import (
    AffineCoxeterSystem,
    CartanType,
    ClassPartition,
    SignCharacter,
    borel_discrete_series_list,
    build_affine_system,
    conjugacy_partition,
    exponents,
    parse_cartan_type,
    steinberg_character,
    tables_document,
)
from .closed_forms import (
    CalibrationError,
    ClosedForm,
    Factor,
    PoleError,
    bott_closed_form,
    calibrate_indexing,
    expand,
    evaluate,
    evaluate_witnessed,
    growth_closed_form,
    macdonald_closed_form,
)
from .distinction import (
    BindingDependentVerdictError,
    DistinctionVerdict,
    EvaluationPoint,
    NotDiscreteSeriesError,
    classify,
    coefficient_value_on_cell,
    distinction_value,
    distinction_value_witnessed,
    expected_distinguished,
    robustness_check,
)
from .hecke import (
    COUNTING,
    MatrixRep,
    char_value_e_w,
    counting_series,
    eval_rep_on_element,
    gyoja_series,
    parse_sign_vector,
    partial_sums_at_point,
    validate_rep,
)
from .series import TruncatedSeries
from .weyl import (
    Ball,
    GroupElement,
    NotReducedWordError,
    ResourceLimitExceeded,
    enumerate_ball,
    evaluate_word,
    is_reduced,
    multilength_of_word,
)

__all__ = [
    "__version__",
    "AffineCoxeterSystem",
    "Ball",
    "BindingDependentVerdictError",
    "COUNTING",
    "CalibrationError",
    "CartanType",
    "ClassPartition",
    "ClosedForm",
    "DistinctionVerdict",
    "EvaluationPoint",
    "Factor",
    "GroupElement",
    "MatrixRep",
    "NotDiscreteSeriesError",
    "NotReducedWordError",
    "PoleError",
    "ResourceLimitExceeded",
    "SignCharacter",
    "TruncatedSeries",
    "borel_discrete_series_list",
    "bott_closed_form",
    "build_affine_system",
    "calibrate_indexing",
    "char_value_e_w",
    "classify",
    "coefficient_value_on_cell",
    "conjugacy_partition",
    "counting_series",
    "distinction_value",
    "distinction_value_witnessed",
    "enumerate_ball",
    "eval_rep_on_element",
    "evaluate",
    "evaluate_witnessed",
    "evaluate_word",
    "expand",
    "expected_distinguished",
    "exponents",
    "growth_closed_form",
    "gyoja_series",
    "is_reduced",
    "macdonald_closed_form",
    "multilength_of_word",
    "parse_cartan_type",
    "parse_sign_vector",
    "partial_sums_at_point",
    "robustness_check",
    "steinberg_character",
    "tables_document",
    "validate_rep",
]
