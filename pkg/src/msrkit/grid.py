"""The discrete stretching-rate grid used by the listening experiment.

Stimuli are rendered at 98 rates: 49 compressed versions {0.02, 0.04, ..., 0.98}
and 49 elongated versions {1.02, 1.04, ..., 1.98}. Rate 1.00 is the unstretched
reference and is not part of the grid.
"""

from __future__ import annotations

from msrkit.exceptions import DomainError

GRID_STEP = 0.02
_GRID_DENOM = 50  # grid rates are k/50 for integer k


def grid_rates() -> list[float]:
    """All 98 grid rates in ascending order (1.00 excluded)."""
    return [k / _GRID_DENOM for k in range(1, 100) if k != _GRID_DENOM]


def is_grid_rate(value: float, include_unity: bool = False, tol: float = 1e-9) -> bool:
    """True if value sits on the 0.02 grid inside (0, 2).

    include_unity additionally admits 1.00 (the original version).
    """
    scaled = value * _GRID_DENOM
    k = round(scaled)
    if abs(scaled - k) > tol * _GRID_DENOM:
        return False
    if k == _GRID_DENOM:
        return include_unity
    return 1 <= k <= 99


def grid_index(value: float) -> int:
    """Map a grid value to its integer numerator k (value == k/50)."""
    k = round(value * _GRID_DENOM)
    if abs(value * _GRID_DENOM - k) > 1e-6:
        raise DomainError(f"{value!r} is not on the 0.02 rate grid")
    return k


def validate_rate(rate: float) -> float:
    """Check a stretching rate against the open interval (0, 2)."""
    rate = float(rate)
    if not 0.0 < rate < 2.0:
        raise DomainError(f"stretching rate must lie in (0.0, 2.0), got {rate}")
    return rate


def format_rate(rate: float) -> str:
    """Canonical two-decimal rendering, e.g. 0.5 -> '0.50'."""
    return f"{rate:.2f}"
