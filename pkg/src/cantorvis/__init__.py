"""Exact-arithmetic level sets, quotient covers, and visibility certificates
for the middle Cantor set family."""

__version__ = "0.1.0"

from .intervals import (
    Interval,
    IntervalSet,
    as_scalar,
    clip,
    contains_point,
    gaps,
    is_subset,
    normalize,
    ratio_image,
    scale,
    square_image,
    union,
)
from .cantor import (
    SOFT_RANK_CEILING,
    CantorParams,
    GapRecord,
    LevelSet,
    Variant,
    gap_list,
    largest_squared_gap,
    level_set,
    max_squared_gap_length,
    prime_level_set,
    squared_level_set,
)
from .quotient import (
    Certificate,
    CertificateKind,
    CoverDomain,
    CoverageGapError,
    GapWitness,
    MergeHypothesisError,
    PairWitness,
    QuotientCover,
    ScaleDecomposition,
    ScaleWitness,
    SearchExhausted,
    classify_slope,
    merged_base_interval,
    overlap_margin,
    overlap_threshold,
    pairwise_ratio_cover,
    quotient_outer_cover,
    scales_cover_window,
)
from .rootfind import refine_sign_change
from .verify import (
    ConditionRow,
    MergeCheckInput,
    VerificationReport,
    merge_subintervals,
    sweep_merge,
    threshold_tests,
    verify_closed_interval_conditions,
    verify_merge,
    verify_non_self_similarity,
)
from .svg import emit_svg

__all__ = [
    "__version__",
    "Interval",
    "IntervalSet",
    "as_scalar",
    "clip",
    "contains_point",
    "gaps",
    "is_subset",
    "normalize",
    "ratio_image",
    "scale",
    "square_image",
    "union",
    "SOFT_RANK_CEILING",
    "CantorParams",
    "GapRecord",
    "LevelSet",
    "Variant",
    "gap_list",
    "largest_squared_gap",
    "level_set",
    "max_squared_gap_length",
    "prime_level_set",
    "squared_level_set",
    "Certificate",
    "CertificateKind",
    "CoverDomain",
    "CoverageGapError",
    "GapWitness",
    "MergeHypothesisError",
    "PairWitness",
    "QuotientCover",
    "ScaleDecomposition",
    "ScaleWitness",
    "SearchExhausted",
    "classify_slope",
    "merged_base_interval",
    "overlap_margin",
    "overlap_threshold",
    "pairwise_ratio_cover",
    "quotient_outer_cover",
    "scales_cover_window",
    "refine_sign_change",
    "ConditionRow",
    "MergeCheckInput",
    "VerificationReport",
    "merge_subintervals",
    "sweep_merge",
    "threshold_tests",
    "verify_closed_interval_conditions",
    "verify_merge",
    "verify_non_self_similarity",
    "emit_svg",
]
