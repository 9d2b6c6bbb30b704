"""Pitch-preserving time stretching over the experiment's rate grid."""

from msrkit.grid import GRID_STEP, format_rate, grid_rates, is_grid_rate, validate_rate
from msrkit.stretch.engine import (
    SolaConfig,
    active_kernel,
    available_kernels,
    generate_variant_grid,
    stretch,
    stretched_tempo,
)

__all__ = [
    "GRID_STEP",
    "SolaConfig",
    "active_kernel",
    "available_kernels",
    "format_rate",
    "generate_variant_grid",
    "grid_rates",
    "is_grid_rate",
    "stretch",
    "stretched_tempo",
    "validate_rate",
]
