/** A/B playback over stretched variants with position carried across switches. */

import { ApiClient } from './api.js';
import { JudgmentDraft } from './judgment.js';

/**
 * Playback backend. load() must either switch the sink to the new source and
 * resolve with its duration in seconds, or reject leaving the previous
 * source, position, and play state untouched.
 */
export interface AudioSink {
  load(url: string): Promise<number>;
  seek(seconds: number): void | Promise<void>;
  positionSeconds(): number;
  play(): void | Promise<void>;
  pause(): void;
}

export interface PlayerState {
  songId: string;
  currentRate: number;
  comparisonRate: number;
  positionFraction: number;
  judged?: JudgmentDraft;
}

export class Player {
  private songId = '';
  private currentRate = 1.0;
  private comparisonRate = 1.0;
  private durationSec = 0;
  private playing = false;
  private draft?: JudgmentDraft;

  constructor(private api: ApiClient, private sink: AudioSink) {}

  async loadSong(songId: string, currentRate = 1.0, comparisonRate = 1.0): Promise<void> {
    this.durationSec = await this.sink.load(this.api.variantUrl(songId, currentRate));
    this.songId = songId;
    this.currentRate = currentRate;
    this.comparisonRate = comparisonRate;
    this.playing = false;
    this.draft = undefined;
    await this.sink.seek(0);
  }

  state(): PlayerState {
    return {
      songId: this.songId,
      currentRate: this.currentRate,
      comparisonRate: this.comparisonRate,
      positionFraction: this.positionFraction(),
      judged: this.draft,
    };
  }

  /** Relative position in [0, 1): the same musical position in every variant. */
  positionFraction(): number {
    if (this.durationSec <= 0) return 0;
    const fraction = this.sink.positionSeconds() / this.durationSec;
    return Math.min(Math.max(fraction, 0), 1 - 1e-12);
  }

  durationSeconds(): number {
    return this.durationSec;
  }

  isPlaying(): boolean {
    return this.playing;
  }

  setComparisonRate(rate: number): void {
    this.comparisonRate = rate;
  }

  /** Re-render the current slot at a different rate, holding the fraction. */
  async setRate(rate: number): Promise<void> {
    if (rate === this.currentRate) return;
    await this.moveTo(rate, this.positionFraction());
    this.currentRate = rate;
  }

  /**
   * One-click A/B switch: the current and comparison rates swap and playback
   * resumes at the same fraction of the other variant. A fetch failure
   * rejects and leaves the previous playback state unchanged.
   */
  async switchVersion(): Promise<void> {
    if (this.comparisonRate === this.currentRate) return;
    await this.moveTo(this.comparisonRate, this.positionFraction());
    const previous = this.currentRate;
    this.currentRate = this.comparisonRate;
    this.comparisonRate = previous;
  }

  async play(): Promise<void> {
    await this.sink.play();
    this.playing = true;
  }

  pause(): void {
    this.sink.pause();
    this.playing = false;
  }

  async seekFraction(fraction: number): Promise<void> {
    const clamped = Math.min(Math.max(fraction, 0), 1 - 1e-12);
    await this.sink.seek(clamped * this.durationSec);
  }

  setDraft(draft: JudgmentDraft | undefined): void {
    this.draft = draft;
  }

  private async moveTo(rate: number, fraction: number): Promise<void> {
    const wasPlaying = this.playing;
    const duration = await this.sink.load(this.api.variantUrl(this.songId, rate));
    this.durationSec = duration;
    await this.sink.seek(fraction * duration);
    if (wasPlaying) await this.sink.play();
  }
}
