"""msrkit: time-scale modification and music stretching resistance analytics.

The package covers the full experiment pipeline: SOLA time stretching over
the 0.02 rate grid, tempo estimation, per-genre MSR statistics and geometry,
journal-backed experiment state, and an HTTP service tying them together.
"""

from .audio import AudioClip, read_wav, write_wav
from .exceptions import (
    AudioInputError,
    DomainError,
    InsufficientCatalogError,
    MsrKitError,
    PackageStateError,
    RecordValidationError,
    UndefinedSlopeError,
)
from .grid import GRID_STEP, format_rate, grid_rates, is_grid_rate, validate_rate
from .stretch import (
    SolaConfig,
    active_kernel,
    available_kernels,
    generate_variant_grid,
    stretch,
    stretched_tempo,
)
from .tempo import TempoEstimate, estimate_tempo, octave_fold

__version__ = "0.1.0"

__all__ = [
    "GRID_STEP",
    "AudioClip",
    "AudioInputError",
    "DomainError",
    "InsufficientCatalogError",
    "MsrKitError",
    "PackageStateError",
    "RecordValidationError",
    "SolaConfig",
    "TempoEstimate",
    "UndefinedSlopeError",
    "active_kernel",
    "available_kernels",
    "estimate_tempo",
    "format_rate",
    "generate_variant_grid",
    "grid_rates",
    "is_grid_rate",
    "octave_fold",
    "read_wav",
    "stretch",
    "stretched_tempo",
    "validate_rate",
    "write_wav",
    "__version__",
]
