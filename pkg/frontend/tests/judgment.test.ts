import { describe, expect, it } from 'vitest';

import { parseAlpha, validateJudgment } from '../src/judgment.js';

describe('judgment validation', () => {
  it('accepts the canonical example (0.82, 1.26)', () => {
    expect(validateJudgment(0.82, 1.26)).toBeNull();
  });

  it('rejects mis-ordered bounds with the ordering rule', () => {
    expect(validateJudgment(1.26, 0.82)?.rule).toBe('alpha_order');
  });

  it('requires the bounds to straddle 1.0', () => {
    expect(validateJudgment(0.82, 0.98)?.rule).toBe('alpha_order');
    expect(validateJudgment(1.02, 1.26)?.rule).toBe('alpha_order');
    expect(validateJudgment(1.0, 1.26)?.rule).toBe('alpha_order');
    expect(validateJudgment(0.82, 1.0)?.rule).toBe('alpha_order');
  });

  it('rejects out-of-range bounds', () => {
    expect(validateJudgment(0.0, 1.26)?.rule).toBe('alpha_order');
    expect(validateJudgment(0.82, 2.0)?.rule).toBe('alpha_order');
    expect(validateJudgment(-0.5, 1.26)?.rule).toBe('alpha_order');
  });

  it('rejects off-grid bounds with the grid rule', () => {
    expect(validateJudgment(0.815, 1.26)?.rule).toBe('alpha_grid');
    expect(validateJudgment(0.82, 1.263)?.rule).toBe('alpha_grid');
  });

  it('applies the ordering rule before the grid rule, like the service', () => {
    // both rules violated: ordering wins
    expect(validateJudgment(1.263, 0.815)?.rule).toBe('alpha_order');
  });

  it('tolerates float noise on grid values', () => {
    expect(validateJudgment(0.8200000000000001, 1.26)).toBeNull();
  });

  it('parses text-field input defensively', () => {
    expect(parseAlpha('0.82')).toBe(0.82);
    expect(parseAlpha('  1.26 ')).toBe(1.26);
    expect(parseAlpha('')).toBeNull();
    expect(parseAlpha('fast')).toBeNull();
    expect(parseAlpha('1/2')).toBeNull();
  });
});
