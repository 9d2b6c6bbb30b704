"""Frozen reference values for the eleven-genre benchmark dataset.

The per-genre moments, the expected similarity half-matrix, the expected
rectangle relations, and the reference regression slopes are fixed inputs
for the analytics checks; the builders below turn them into records whose
population moments match the stated values exactly.
"""

import numpy as np

from msrkit.analytics import GenreStats
from msrkit.data import SongRecord

GENRES = [
    "Pop",
    "Rock",
    "Easy Listening",
    "Folk",
    "Latin",
    "Country",
    "Hip-hop&Rap",
    "R&B",
    "Jazz&Blues",
    "Classical",
    "Electronic",
]

# genre -> (count, mean_min, std_min, mean_max, std_max)
GENRE_MOMENTS = {
    "Pop": (87, 0.735, 0.069, 1.246, 0.066),
    "Rock": (95, 0.742, 0.083, 1.235, 0.064),
    "Easy Listening": (83, 0.594, 0.097, 1.355, 0.086),
    "Folk": (80, 0.698, 0.057, 1.283, 0.056),
    "Latin": (68, 0.702, 0.066, 1.287, 0.056),
    "Country": (86, 0.692, 0.047, 1.294, 0.050),
    "Hip-hop&Rap": (82, 0.789, 0.036, 1.207, 0.036),
    "R&B": (90, 0.729, 0.045, 1.259, 0.040),
    "Jazz&Blues": (78, 0.703, 0.049, 1.282, 0.059),
    "Classical": (73, 0.578, 0.085, 1.376, 0.079),
    "Electronic": (72, 0.610, 0.090, 1.346, 0.076),
}

TOTAL_COUNT = 894

# Upper triangle of the expected Jaccard similarity matrix, in GENRES order.
SIMILARITY_UPPER = [
    [1.0, 0.713, 0.021, 0.323, 0.334, 0.219, 0.159, 0.395, 0.346, 0.0, 0.032],
    [1.0, 0.018, 0.255, 0.259, 0.168, 0.244, 0.339, 0.275, 1.7e-4, 0.025],
    [1.0, 0.082, 0.092, 0.088, 0.0, 0.005, 0.063, 0.658, 0.748],
    [1.0, 0.808, 0.675, 0.002, 0.344, 0.822, 0.024, 0.113],
    [1.0, 0.625, 0.009, 0.351, 0.692, 0.031, 0.125],
    [1.0, 0.0, 0.223, 0.648, 0.024, 0.125],
    [1.0, 0.042, 0.0, 0.0, 0.0],
    [1.0, 0.380, 0.0, 0.014],
    [1.0, 0.010, 0.092],
    [1.0, 0.492],
    [1.0],
]

# Distinct pairs whose rectangles nest (one contains the other).
INCLUSION_PAIRS = {
    frozenset({"R&B", "Pop"}),
    frozenset({"R&B", "Rock"}),
    frozenset({"Hip-hop&Rap", "Rock"}),
}

# Distinct pairs with zero overlap area.
EXCLUSION_PAIRS = {
    frozenset({"Pop", "Classical"}),
    frozenset({"Easy Listening", "Hip-hop&Rap"}),
    frozenset({"Country", "Hip-hop&Rap"}),
    frozenset({"Hip-hop&Rap", "Jazz&Blues"}),
    frozenset({"Hip-hop&Rap", "Classical"}),
    frozenset({"Hip-hop&Rap", "Electronic"}),
    frozenset({"R&B", "Classical"}),
}

# genre -> (slope to alpha_min, slope to alpha_max), per BPM
REFERENCE_SLOPES = {
    "Pop": (2.78e-4, -5.30e-5),
    "Rock": (6.85e-6, -1.45e-4),
    "Easy Listening": (-3.15e-4, 6.75e-5),
    "Folk": (-4.29e-5, -1.47e-4),
    "Latin": (-1.34e-4, -1.25e-5),
    "Country": (1.73e-6, 1.79e-4),
    "Hip-hop&Rap": (6.98e-5, 3.12e-6),
    "R&B": (-2.77e-4, -1.71e-5),
    "Jazz&Blues": (-4.11e-5, -1.24e-4),
    "Classical": (-4.50e-4, 4.89e-4),
    "Electronic": (-7.79e-5, 5.31e-5),
}


def similarity_expected(i: int, j: int) -> float:
    if i <= j:
        return SIMILARITY_UPPER[i][j - i]
    return SIMILARITY_UPPER[j][i - j]


def reference_stats() -> dict:
    return {
        g: GenreStats(g, c, mean_min, std_min, mean_max, std_max)
        for g, (c, mean_min, std_min, mean_max, std_max) in GENRE_MOMENTS.items()
    }


def two_point_records() -> list:
    """Two records per genre placed at mean +/- std on both axes.

    Population mean and std of each bound then equal the reference moments
    exactly, so stats pipelines fed these records reproduce the benchmark.
    """
    records = []
    for g, (_, mean_min, std_min, mean_max, std_max) in GENRE_MOMENTS.items():
        records.append(
            SongRecord(f"{g}-lo", g, None, mean_min - std_min, mean_max - std_max)
        )
        records.append(
            SongRecord(f"{g}-hi", g, None, mean_min + std_min, mean_max + std_max)
        )
    return records


def moment_matched_records(seed=0) -> list:
    """Synthetic dataset with the reference counts and exact moments.

    Gaussian draws per genre are standardized (population convention) and
    rescaled, so each genre hits its stated mean/std to float precision
    while the per-song values stay plausible.
    """
    rng = np.random.default_rng(seed)
    records = []
    for g, (count, mean_min, std_min, mean_max, std_max) in GENRE_MOMENTS.items():
        z_min = rng.standard_normal(count)
        z_min = (z_min - z_min.mean()) / z_min.std()
        z_max = rng.standard_normal(count)
        z_max = (z_max - z_max.mean()) / z_max.std()
        alpha_min = np.clip(mean_min + std_min * z_min, 0.02, 0.98)
        alpha_max = np.clip(mean_max + std_max * z_max, 1.02, 1.98)
        # Clipping is a safety net; re-standardize so moments stay exact.
        alpha_min = mean_min + std_min * (alpha_min - alpha_min.mean()) / alpha_min.std()
        alpha_max = mean_max + std_max * (alpha_max - alpha_max.mean()) / alpha_max.std()
        for i in range(count):
            records.append(
                SongRecord(
                    song_id=f"{g}-{i:03d}",
                    genre=g,
                    tempo_bpm=float(60.0 + 140.0 * rng.random()),
                    alpha_min=float(alpha_min[i]),
                    alpha_max=float(alpha_max[i]),
                )
            )
    return records
