import { describe, expect, it } from 'vitest';

import { formatRate, gridRates, isGridRate, playbackRates, stepRate } from '../src/grid.js';

describe('rate grid', () => {
  it('has 98 stimulus rates without 1.00', () => {
    const rates = gridRates();
    expect(rates).toHaveLength(98);
    expect(rates).not.toContain(1.0);
    expect(rates[0]).toBeCloseTo(0.02, 12);
    expect(rates[rates.length - 1]).toBeCloseTo(1.98, 12);
  });

  it('selector offers the 98 grid rates plus 1.00', () => {
    const rates = playbackRates();
    expect(rates).toHaveLength(99);
    expect(rates).toContain(1.0);
    for (const rate of gridRates()) expect(rates).toContain(rate);
  });

  it('steps are uniformly 0.02', () => {
    const rates = playbackRates();
    for (let i = 1; i < rates.length; i++) {
      expect(rates[i] - rates[i - 1]).toBeCloseTo(0.02, 12);
    }
  });

  it('recognizes grid membership', () => {
    expect(isGridRate(0.82)).toBe(true);
    expect(isGridRate(1.26)).toBe(true);
    expect(isGridRate(0.8200000000000001)).toBe(true);
    expect(isGridRate(0.815)).toBe(false);
    expect(isGridRate(1.0)).toBe(false);
    expect(isGridRate(1.0, true)).toBe(true);
    expect(isGridRate(0.0)).toBe(false);
    expect(isGridRate(2.0)).toBe(false);
  });

  it('formats with two decimals', () => {
    expect(formatRate(0.5)).toBe('0.50');
    expect(formatRate(1.2)).toBe('1.20');
    expect(formatRate(0.82)).toBe('0.82');
  });

  it('steps through 1.00 and clamps at the ends', () => {
    expect(stepRate(0.98, 1)).toBeCloseTo(1.0, 12);
    expect(stepRate(1.0, 1)).toBeCloseTo(1.02, 12);
    expect(stepRate(1.02, -1)).toBeCloseTo(1.0, 12);
    expect(stepRate(0.02, -1)).toBeCloseTo(0.02, 12);
    expect(stepRate(1.98, 1)).toBeCloseTo(1.98, 12);
  });
});
