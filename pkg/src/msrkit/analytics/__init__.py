"""Statistics and geometry for music stretching resistance data."""

from .geometry import (
    CONTAINMENT_TOL,
    DANGEROUS,
    DANGEROUS_PARTS,
    SAFE,
    SAFE_PARTS,
    TRANSITION,
    TRANSITION_PARTS,
    MsrRect,
    RectRelation,
    RegionPart,
    classify_point,
    jaccard_similarity,
    msr_rectangle,
    part_label,
    rect_relation,
    similarity_matrix,
)
from .special import betainc_regularized, f_upper_tail
from .stats import (
    AnovaResult,
    GenreStats,
    RegressionLine,
    anova_one_way,
    genre_stats,
    regress_tempo_to_alpha,
)

__all__ = [
    "CONTAINMENT_TOL",
    "DANGEROUS",
    "DANGEROUS_PARTS",
    "SAFE",
    "SAFE_PARTS",
    "TRANSITION",
    "TRANSITION_PARTS",
    "AnovaResult",
    "GenreStats",
    "MsrRect",
    "RectRelation",
    "RegionPart",
    "RegressionLine",
    "anova_one_way",
    "betainc_regularized",
    "classify_point",
    "f_upper_tail",
    "genre_stats",
    "jaccard_similarity",
    "msr_rectangle",
    "part_label",
    "rect_relation",
    "regress_tempo_to_alpha",
    "similarity_matrix",
]
