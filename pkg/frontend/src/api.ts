/** Typed client for the experiment service JSON API. */

import { formatRate } from './grid.js';
import { validateJudgment } from './judgment.js';

export interface PackageInfo {
  package_id: string;
  participant_id: string;
  song_ids: string[];
  status: string;
}

export interface JudgmentInput {
  participant_id: string;
  song_id: string;
  alpha_min: number;
  alpha_max: number;
}

export interface JudgmentAck extends JudgmentInput {
  revision: number;
  ts: number;
}

export interface AggregateSong {
  song_id: string;
  genre: string;
  tempo_bpm: number | null;
  alpha_min: number;
  alpha_max: number;
  judgments: number;
}

export interface AggregateResult {
  method: string;
  songs: AggregateSong[];
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number, readonly rule?: string) {
    super(message);
    this.name = 'ApiError';
  }
}

type Fetcher = typeof fetch;

async function toApiError(res: Response): Promise<ApiError> {
  let message = `${res.status} ${res.statusText}`;
  let rule: string | undefined;
  try {
    const payload = await res.json();
    const detail = payload?.detail;
    if (typeof detail === 'string') {
      message = detail;
    } else if (detail && typeof detail === 'object') {
      if (typeof detail.message === 'string') message = detail.message;
      if (typeof detail.rule === 'string') rule = detail.rule;
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(message, res.status, rule);
}

export class ApiClient {
  private baseUrl: string;
  private fetcher: Fetcher;

  constructor(baseUrl: string, fetcher: Fetcher = fetch) {
    this.baseUrl = baseUrl.replace(/\/+$/, '');
    this.fetcher = fetcher;
  }

  variantUrl(songId: string, rate: number): string {
    return `${this.baseUrl}/songs/${encodeURIComponent(songId)}/variant?rate=${formatRate(rate)}`;
  }

  async registerParticipant(participantId?: string): Promise<string> {
    const data = await this.json<{ participant_id: string }>('/participants', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(participantId ? { participant_id: participantId } : {}),
    });
    return data.participant_id;
  }

  /** Current open package for the participant, assigning a fresh one if needed. */
  package(participantId: string): Promise<PackageInfo> {
    return this.json(`/participants/${encodeURIComponent(participantId)}/package`);
  }

  submitJudgment(judgment: JudgmentInput): Promise<JudgmentAck> {
    return this.json('/judgments', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(judgment),
    });
  }

  /**
   * Validate locally, mirroring the service rules, before any network write.
   * Off-grid or mis-ordered bounds never leave the client.
   */
  async submitJudgmentChecked(judgment: JudgmentInput): Promise<JudgmentAck> {
    const violation = validateJudgment(judgment.alpha_min, judgment.alpha_max);
    if (violation) throw new ApiError(violation.message, 422, violation.rule);
    return this.submitJudgment(judgment);
  }

  submitPackage(packageId: string): Promise<PackageInfo> {
    return this.json(`/packages/${encodeURIComponent(packageId)}/submit`, { method: 'POST' });
  }

  aggregate(method = 'mode'): Promise<AggregateResult> {
    return this.json(`/results/aggregate?method=${encodeURIComponent(method)}`);
  }

  stats(): Promise<Record<string, unknown>> {
    return this.json('/results/stats');
  }

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetcher(`${this.baseUrl}${path}`, init);
    if (!res.ok) throw await toApiError(res);
    return res.json() as Promise<T>;
  }
}
