/** The discrete stretching-rate grid: k/50 for k in 1..99, excluding 1.00. */

export const GRID_STEP = 0.02;

const GRID_DENOM = 50;

/** All 98 stimulus rates in ascending order (1.00 excluded). */
export function gridRates(): number[] {
  const rates: number[] = [];
  for (let k = 1; k <= 99; k++) {
    if (k !== GRID_DENOM) rates.push(k / GRID_DENOM);
  }
  return rates;
}

/** Rates offered by the selector: the 98 grid rates plus the original 1.00. */
export function playbackRates(): number[] {
  const rates: number[] = [];
  for (let k = 1; k <= 99; k++) rates.push(k / GRID_DENOM);
  return rates;
}

export function isGridRate(value: number, includeUnity = false, tol = 1e-9): boolean {
  const scaled = value * GRID_DENOM;
  const k = Math.round(scaled);
  if (Math.abs(scaled - k) > tol * GRID_DENOM) return false;
  if (k === GRID_DENOM) return includeUnity;
  return k >= 1 && k <= 99;
}

/** Canonical two-decimal rendering, e.g. 0.5 -> '0.50'. */
export function formatRate(rate: number): string {
  return rate.toFixed(2);
}

/** Neighboring selector rate, one 0.02 step away (1.00 included, ends clamped). */
export function stepRate(rate: number, direction: 1 | -1): number {
  const k = Math.round(rate * GRID_DENOM) + direction;
  return Math.min(99, Math.max(1, k)) / GRID_DENOM;
}
