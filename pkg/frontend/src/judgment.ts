/** Client-side judgment validation mirroring the service's 422 rules. */

import { isGridRate } from './grid.js';

export interface JudgmentDraft {
  alphaMin: number;
  alphaMax: number;
}

export interface RuleViolation {
  rule: 'alpha_order' | 'alpha_grid';
  message: string;
}

/** Parse a text-field value; null when empty or not a finite number. */
export function parseAlpha(text: string): number | null {
  const trimmed = text.trim();
  if (!trimmed) return null;
  const value = Number(trimmed);
  return Number.isFinite(value) ? value : null;
}

/**
 * Check a pair of bounds against the service rules, in the order the service
 * applies them: ordering around 1.0 first, then grid membership. Returns
 * null when the pair would be accepted.
 */
export function validateJudgment(alphaMin: number, alphaMax: number): RuleViolation | null {
  if (!(alphaMin > 0 && alphaMin < 1 && alphaMax > 1 && alphaMax < 2)) {
    return {
      rule: 'alpha_order',
      message: `expected 0 < alpha_min < 1 < alpha_max < 2, got (${alphaMin}, ${alphaMax})`,
    };
  }
  for (const [name, value] of [['alpha_min', alphaMin], ['alpha_max', alphaMax]] as const) {
    if (!isGridRate(value)) {
      return { rule: 'alpha_grid', message: `${name}=${value} is not on the 0.02 grid` };
    }
  }
  return null;
}
