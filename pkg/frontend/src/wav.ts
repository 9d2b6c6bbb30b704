/** Minimal RIFF/WAVE header math for byte-range seeking into served variants. */

export interface WavHeader {
  formatCode: number;
  channels: number;
  sampleRateHz: number;
  blockAlign: number;
  bitsPerSample: number;
  dataOffset: number;
  dataByteLength: number;
}

function ascii(view: DataView, offset: number, length: number): string {
  let out = '';
  for (let i = 0; i < length; i++) out += String.fromCharCode(view.getUint8(offset + i));
  return out;
}

/**
 * Parse the fmt/data chunk layout from the start of a WAV file. Only the
 * header region is required, so a partial prefix fetched with a byte-range
 * request is enough as long as it reaches the data chunk header.
 */
export function parseWavHeader(bytes: ArrayBuffer | Uint8Array): WavHeader {
  const view = bytes instanceof Uint8Array
    ? new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength)
    : new DataView(bytes);
  if (view.byteLength < 12 || ascii(view, 0, 4) !== 'RIFF' || ascii(view, 8, 4) !== 'WAVE') {
    throw new Error('not a RIFF/WAVE stream');
  }
  let offset = 12;
  let fmt: Omit<WavHeader, 'dataOffset' | 'dataByteLength'> | null = null;
  while (offset + 8 <= view.byteLength) {
    const id = ascii(view, offset, 4);
    const size = view.getUint32(offset + 4, true);
    const body = offset + 8;
    if (id === 'fmt ') {
      fmt = {
        formatCode: view.getUint16(body, true),
        channels: view.getUint16(body + 2, true),
        sampleRateHz: view.getUint32(body + 4, true),
        blockAlign: view.getUint16(body + 12, true),
        bitsPerSample: view.getUint16(body + 14, true),
      };
    } else if (id === 'data') {
      if (!fmt) throw new Error('data chunk precedes fmt chunk');
      return { ...fmt, dataOffset: body, dataByteLength: size };
    }
    offset = body + size + (size % 2); // chunks are word-aligned
  }
  throw new Error('no data chunk within the header prefix');
}

export function durationSeconds(header: WavHeader): number {
  return header.dataByteLength / header.blockAlign / header.sampleRateHz;
}

/**
 * Inclusive byte range (Range-header convention) covering playback from the
 * given fraction of the clip to its end, aligned to a PCM frame boundary.
 */
export function byteRangeForFraction(
  header: WavHeader,
  fraction: number,
): { start: number; end: number } {
  const frames = Math.floor(header.dataByteLength / header.blockAlign);
  const clamped = Math.min(Math.max(fraction, 0), 1);
  const startFrame = Math.min(Math.floor(clamped * frames), Math.max(frames - 1, 0));
  return {
    start: header.dataOffset + startFrame * header.blockAlign,
    end: header.dataOffset + header.dataByteLength - 1,
  };
}

/** Clip time, in seconds, of the first frame of a range from byteRangeForFraction. */
export function rangeStartSeconds(header: WavHeader, start: number): number {
  return (start - header.dataOffset) / header.blockAlign / header.sampleRateHz;
}

/** Re-wrap a frame-aligned PCM byte slice as a standalone playable WAV. */
export function wrapPcmAsWav(header: WavHeader, pcm: Uint8Array): Uint8Array {
  const out = new Uint8Array(44 + pcm.byteLength);
  const view = new DataView(out.buffer);
  const writeAscii = (offset: number, text: string) => {
    for (let i = 0; i < text.length; i++) out[offset + i] = text.charCodeAt(i);
  };
  writeAscii(0, 'RIFF');
  view.setUint32(4, 36 + pcm.byteLength, true);
  writeAscii(8, 'WAVE');
  writeAscii(12, 'fmt ');
  view.setUint32(16, 16, true);
  view.setUint16(20, header.formatCode, true);
  view.setUint16(22, header.channels, true);
  view.setUint32(24, header.sampleRateHz, true);
  view.setUint32(28, header.sampleRateHz * header.blockAlign, true);
  view.setUint16(32, header.blockAlign, true);
  view.setUint16(34, header.bitsPerSample, true);
  writeAscii(36, 'data');
  view.setUint32(40, pcm.byteLength, true);
  out.set(pcm, 44);
  return out;
}
