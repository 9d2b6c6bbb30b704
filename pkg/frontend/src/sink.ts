/** WebAudio playback that seeks with HTTP byte-range requests.
 *
 * Only the WAV header prefix is fetched on load; audio bytes are pulled from
 * the seek point onward, so jumping into the middle of a long variant does
 * not download its beginning.
 */

import { AudioSink } from './player.js';
import {
  byteRangeForFraction,
  durationSeconds,
  parseWavHeader,
  rangeStartSeconds,
  wrapPcmAsWav,
  WavHeader,
} from './wav.js';

const HEADER_PREFIX_BYTES = 512;

export class RangeStreamSink implements AudioSink {
  private ctx: AudioContext;
  private fetcher: typeof fetch;
  private url = '';
  private header: WavHeader | null = null;
  private durationSec = 0;
  private source: AudioBufferSourceNode | null = null;
  private baseSeconds = 0; // clip time where the running source started
  private startedAt = 0; // ctx.currentTime at source start
  private offsetSeconds = 0; // clip time while paused
  private playing = false;
  private generation = 0; // invalidates in-flight fetches on load/seek

  constructor(ctx?: AudioContext, fetcher: typeof fetch = fetch) {
    this.ctx = ctx ?? new AudioContext();
    this.fetcher = fetcher;
  }

  async load(url: string): Promise<number> {
    const head = await this.fetchRange(url, 0, HEADER_PREFIX_BYTES - 1);
    const header = parseWavHeader(head);
    this.generation += 1;
    this.stopSource();
    this.url = url;
    this.header = header;
    this.durationSec = durationSeconds(header);
    this.offsetSeconds = 0;
    this.playing = false;
    return this.durationSec;
  }

  async seek(seconds: number): Promise<void> {
    const clamped = Math.min(Math.max(seconds, 0), this.durationSec);
    if (this.playing) {
      await this.startFrom(clamped);
    } else {
      this.offsetSeconds = clamped;
    }
  }

  positionSeconds(): number {
    if (!this.playing) return this.offsetSeconds;
    return Math.min(this.baseSeconds + this.ctx.currentTime - this.startedAt, this.durationSec);
  }

  async play(): Promise<void> {
    if (this.playing) return;
    await this.ctx.resume();
    await this.startFrom(this.offsetSeconds);
  }

  pause(): void {
    this.offsetSeconds = this.positionSeconds();
    this.stopSource();
    this.playing = false;
  }

  private async startFrom(seconds: number): Promise<void> {
    if (!this.header) throw new Error('no source loaded');
    const generation = this.generation;
    const fraction = this.durationSec > 0 ? seconds / this.durationSec : 0;
    const { start, end } = byteRangeForFraction(this.header, fraction);
    const pcm = await this.fetchRange(this.url, start, end);
    if (generation !== this.generation) return; // superseded by a newer load
    const wav = wrapPcmAsWav(this.header, new Uint8Array(pcm));
    // freshly allocated by wrapPcmAsWav, so the backing buffer is exact
    const buffer = await this.ctx.decodeAudioData(wav.buffer as ArrayBuffer);
    if (generation !== this.generation) return;
    this.stopSource();
    const source = this.ctx.createBufferSource();
    source.buffer = buffer;
    source.connect(this.ctx.destination);
    source.onended = () => {
      if (this.source === source) {
        this.source = null;
        this.playing = false;
        this.offsetSeconds = this.durationSec;
      }
    };
    this.baseSeconds = rangeStartSeconds(this.header, start);
    this.startedAt = this.ctx.currentTime;
    source.start();
    this.source = source;
    this.playing = true;
  }

  private stopSource(): void {
    if (!this.source) return;
    this.source.onended = null;
    try {
      this.source.stop();
    } catch {
      // already stopped
    }
    this.source.disconnect();
    this.source = null;
  }

  private async fetchRange(url: string, start: number, end: number): Promise<ArrayBuffer> {
    const res = await this.fetcher(url, { headers: { range: `bytes=${start}-${end}` } });
    if (!res.ok) throw new Error(`variant fetch failed: ${res.status}`);
    const body = await res.arrayBuffer();
    if (res.status === 200 && start > 0) {
      // server ignored the range header; cut the slice locally
      return body.slice(start, Math.min(end + 1, body.byteLength));
    }
    return body;
  }
}
