"""Per-genre MSR statistics, one-way ANOVA, and tempo-to-alpha regressions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError, RecordValidationError, UndefinedSlopeError
from .special import f_upper_tail


@dataclass(frozen=True)
class GenreStats:
    """Population moments of a genre's alpha_min and alpha_max values."""

    genre: str
    count: int
    mean_min: float
    std_min: float
    mean_max: float
    std_max: float

    def __post_init__(self):
        if self.count < 1:
            raise DomainError("count must be at least 1")
        if self.std_min < 0.0 or self.std_max < 0.0:
            raise DomainError("standard deviations must be non-negative")
        if not self.mean_min < self.mean_max:
            raise DomainError("mean_min must be below mean_max")


@dataclass(frozen=True)
class AnovaResult:
    f_value: float
    df_between: int
    df_within: int
    p_value: float


@dataclass(frozen=True)
class RegressionLine:
    slope: float
    intercept: float

    def predict(self, tempo_bpm: float) -> float:
        return self.slope * tempo_bpm + self.intercept


def _check_alpha_order(record) -> None:
    if not 0.0 < record.alpha_min < 1.0 < record.alpha_max < 2.0:
        raise RecordValidationError(
            "alpha_order",
            f"record {record.song_id!r}: alpha bounds must satisfy "
            "0 < alpha_min < 1 < alpha_max < 2",
        )


def genre_stats(records) -> dict:
    """Mean and population standard deviation of both alpha bounds per genre.

    Records need genre/song_id/alpha_min/alpha_max attributes. Genres appear
    in first-occurrence order; the statistics themselves are independent of
    record order.
    """
    grouped: dict = {}
    for rec in records:
        _check_alpha_order(rec)
        grouped.setdefault(rec.genre, []).append((rec.alpha_min, rec.alpha_max))
    if not grouped:
        raise DomainError("genre_stats needs at least one record")
    out = {}
    for genre, pairs in grouped.items():
        arr = np.asarray(pairs, dtype=np.float64)
        out[genre] = GenreStats(
            genre=genre,
            count=arr.shape[0],
            mean_min=float(arr[:, 0].mean()),
            std_min=float(arr[:, 0].std()),
            mean_max=float(arr[:, 1].mean()),
            std_max=float(arr[:, 1].std()),
        )
    return out


def anova_one_way(groups) -> AnovaResult:
    """One-way fixed-effects F test over a mapping of group -> values.

    Zero within-group variance with spread between groups reports F as
    +infinity; fully identical data reports F = 0.
    """
    names = list(groups)
    if len(names) < 2:
        raise DomainError("ANOVA needs at least two groups")
    arrays = [np.asarray(groups[name], dtype=np.float64).ravel() for name in names]
    if any(a.size == 0 for a in arrays):
        raise DomainError("ANOVA groups must be non-empty")
    n_total = int(sum(a.size for a in arrays))
    k = len(arrays)
    if n_total <= k:
        raise DomainError("ANOVA needs more observations than groups")
    df_between = k - 1
    df_within = n_total - k

    grand_mean = sum(float(a.sum()) for a in arrays) / n_total
    ss_between = sum(a.size * (float(a.mean()) - grand_mean) ** 2 for a in arrays)
    ss_within = sum(float(((a - a.mean()) ** 2).sum()) for a in arrays)

    if ss_within == 0.0:
        f_value = 0.0 if ss_between == 0.0 else math.inf
    else:
        f_value = (ss_between / df_between) / (ss_within / df_within)
    p_value = f_upper_tail(f_value, df_between, df_within)
    return AnovaResult(
        f_value=f_value,
        df_between=df_between,
        df_within=df_within,
        p_value=p_value,
    )


def regress_tempo_to_alpha(records, bound: str = "min") -> dict:
    """Per-genre least-squares line from original tempo to one alpha bound.

    `bound` selects "min" or "max". Records without a tempo are skipped; a
    genre whose remaining tempos are all equal (or fewer than two) raises an
    undefined-slope error naming the genre.
    """
    if bound not in ("min", "max"):
        raise DomainError("bound must be 'min' or 'max'")
    field = "alpha_min" if bound == "min" else "alpha_max"
    grouped: dict = {}
    for rec in records:
        tempo = getattr(rec, "tempo_bpm", None)
        if tempo is None:
            continue
        grouped.setdefault(rec.genre, []).append((float(tempo), float(getattr(rec, field))))
    if not grouped:
        raise DomainError("regression needs records with tempo values")
    out = {}
    for genre, points in grouped.items():
        arr = np.asarray(points, dtype=np.float64)
        tempos = arr[:, 0]
        alphas = arr[:, 1]
        if tempos.size < 2 or float(np.ptp(tempos)) == 0.0:
            raise UndefinedSlopeError(
                genre, f"genre {genre!r} needs two distinct tempo values"
            )
        slope, intercept = np.polyfit(tempos, alphas, 1)
        out[genre] = RegressionLine(slope=float(slope), intercept=float(intercept))
    return out
