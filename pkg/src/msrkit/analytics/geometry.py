"""Rectangle geometry over the alpha_min/alpha_max plane.

A genre's typical stretching range is summarized as a closed rectangle
(mean +/- std on each axis). The rectangle's boundary lines carve the open
first quadrant into nine parts; pairs of rectangles relate by inclusion,
exclusion, or plain intersection; and overlap is scored by Jaccard
similarity (intersection area over union area).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError

# Absolute slack for closed-set containment. Corner coordinates are sums and
# differences of reported means and deviations, so shared edges may disagree
# by a few ulps; anything inside this band counts as touching.
CONTAINMENT_TOL = 1e-9

DANGEROUS_PARTS = frozenset({1, 2, 3, 4, 7})
TRANSITION_PARTS = frozenset({5, 6, 8})
SAFE_PARTS = frozenset({9})

DANGEROUS = "dangerous"
TRANSITION = "transition"
SAFE = "safe"


class RectRelation(enum.Enum):
    INCLUSION = "inclusion"
    EXCLUSION = "exclusion"
    INTERSECTION = "intersection"


@dataclass(frozen=True)
class MsrRect:
    """Closed axis-aligned rectangle; x spans alpha_min, y spans alpha_max."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self):
        if not (self.x_lo <= self.x_hi and self.y_lo <= self.y_hi):
            raise DomainError("rectangle bounds must satisfy lo <= hi on both axes")

    @property
    def width(self) -> float:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> float:
        return self.y_hi - self.y_lo

    @property
    def area(self) -> float:
        return self.width * self.height

    def contains(self, other: "MsrRect", tol: float = CONTAINMENT_TOL) -> bool:
        """Closed-set containment of `other`, shared edges included."""
        return (
            other.x_lo >= self.x_lo - tol
            and other.x_hi <= self.x_hi + tol
            and other.y_lo >= self.y_lo - tol
            and other.y_hi <= self.y_hi + tol
        )


@dataclass(frozen=True)
class RegionPart:
    """One of the nine parts, with its stretching-risk label."""

    part: int
    label: str

    def __post_init__(self):
        if self.part not in range(1, 10):
            raise DomainError("part must be in 1..9")


def part_label(part: int) -> str:
    if part in DANGEROUS_PARTS:
        return DANGEROUS
    if part in TRANSITION_PARTS:
        return TRANSITION
    if part in SAFE_PARTS:
        return SAFE
    raise DomainError("part must be in 1..9")


def msr_rectangle(stats) -> MsrRect:
    """Rectangle (mean_min +/- std_min) x (mean_max +/- std_max).

    `stats` needs mean_min/std_min/mean_max/std_max attributes.
    """
    return MsrRect(
        x_lo=stats.mean_min - stats.std_min,
        x_hi=stats.mean_min + stats.std_min,
        y_lo=stats.mean_max - stats.std_max,
        y_hi=stats.mean_max + stats.std_max,
    )


def classify_point(rect: MsrRect, point) -> RegionPart:
    """Locate a (alpha_min, alpha_max) candidate in the 3x3 partition.

    Parts are numbered row-major: 1-3 across the top band (y above the
    rectangle), 4-6 across the middle, 7-9 across the bottom; columns run
    left to right. Coordinates exactly on a boundary line belong to the
    middle band because the rectangle is closed.
    """
    x, y = float(point[0]), float(point[1])
    if x <= 0.0 or y <= 0.0:
        raise DomainError("point must lie in the open first quadrant")
    col = 0 if x < rect.x_lo else (1 if x <= rect.x_hi else 2)
    row = 0 if y > rect.y_hi else (1 if y >= rect.y_lo else 2)
    part = 3 * row + col + 1
    return RegionPart(part=part, label=part_label(part))


def _intersection_area(a: MsrRect, b: MsrRect) -> float:
    w = min(a.x_hi, b.x_hi) - max(a.x_lo, b.x_lo)
    h = min(a.y_hi, b.y_hi) - max(a.y_lo, b.y_lo)
    if w <= 0.0 or h <= 0.0:
        return 0.0
    return w * h


def rect_relation(a: MsrRect, b: MsrRect, tol: float = CONTAINMENT_TOL) -> RectRelation:
    """Inclusion if either contains the other, else Exclusion iff the
    overlap area is zero, else Intersection."""
    if a.contains(b, tol) or b.contains(a, tol):
        return RectRelation.INCLUSION
    if _intersection_area(a, b) == 0.0:
        return RectRelation.EXCLUSION
    return RectRelation.INTERSECTION


def jaccard_similarity(a: MsrRect, b: MsrRect) -> float:
    """Intersection area over union area of two closed rectangles.

    Degenerate cases follow the limit of the ratio: equal point-rectangles
    score 1, a zero-area rectangle against anything else scores 0.
    """
    if a.area <= 0.0 or b.area <= 0.0:
        return 1.0 if a == b else 0.0
    inter = _intersection_area(a, b)
    union = a.area + b.area - inter
    return inter / union


def similarity_matrix(stats_by_genre) -> tuple[list, np.ndarray]:
    """Symmetric unit-diagonal Jaccard matrix over the genres' rectangles.

    Returns the genre order (input order) alongside the matrix.
    """
    genres = list(stats_by_genre)
    if len(genres) < 2:
        raise DomainError("similarity matrix needs at least two genres")
    rects = [msr_rectangle(stats_by_genre[g]) for g in genres]
    n = len(rects)
    matrix = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            s = jaccard_similarity(rects[i], rects[j])
            matrix[i, j] = s
            matrix[j, i] = s
    return genres, matrix
