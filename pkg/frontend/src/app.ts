/** Page wiring for the listening session: one participant, one package. */

import { AggregateSong, ApiClient, ApiError, PackageInfo } from './api.js';
import { formatRate, playbackRates, stepRate } from './grid.js';
import { parseAlpha, validateJudgment } from './judgment.js';
import { Player } from './player.js';
import { WriteQueue } from './queue.js';
import { RangeStreamSink } from './sink.js';

interface Session {
  api: ApiClient;
  participantId: string;
  pkg: PackageInfo;
  player: Player;
}

let session: Session | null = null;
const writes = new WriteQueue();
const revisions = new Map<string, number>();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setStatus(text: string, isError = false): void {
  const status = el<HTMLElement>('status');
  status.textContent = text;
  status.className = isError ? 'error' : 'ok';
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return err.rule ? `${err.rule}: ${err.message}` : err.message;
  }
  return err instanceof Error ? err.message : String(err);
}

function fillRateSelect(select: HTMLSelectElement, selected: number): void {
  select.innerHTML = '';
  for (const rate of playbackRates()) {
    const option = document.createElement('option');
    option.value = formatRate(rate);
    option.textContent = formatRate(rate);
    if (formatRate(rate) === formatRate(selected)) option.selected = true;
    select.appendChild(option);
  }
}

function syncRateControls(): void {
  if (!session) return;
  const state = session.player.state();
  el<HTMLSelectElement>('rate-current').value = formatRate(state.currentRate);
  el<HTMLSelectElement>('rate-comparison').value = formatRate(state.comparisonRate);
}

function renderSongList(): void {
  if (!session) return;
  const list = el<HTMLUListElement>('song-list');
  list.innerHTML = '';
  for (const songId of session.pkg.song_ids) {
    const item = document.createElement('li');
    const link = document.createElement('a');
    link.href = '#';
    link.textContent = revisions.has(songId) ? `${songId} (rev ${revisions.get(songId)})` : songId;
    link.addEventListener('click', (event) => {
      event.preventDefault();
      void selectSong(songId);
    });
    item.appendChild(link);
    list.appendChild(item);
  }
}

async function selectSong(songId: string): Promise<void> {
  if (!session) return;
  try {
    await session.player.loadSong(songId, 1.0, 1.2);
    el<HTMLElement>('song-title').textContent = songId;
    el<HTMLInputElement>('alpha-min').value = '';
    el<HTMLInputElement>('alpha-max').value = '';
    el<HTMLElement>('judgment-error').textContent = '';
    syncRateControls();
    setStatus(`loaded ${songId}`);
  } catch (err) {
    setStatus(`could not load ${songId}: ${describeError(err)}`, true);
  }
}

async function startSession(): Promise<void> {
  const baseUrl = el<HTMLInputElement>('base-url').value || 'http://127.0.0.1:8000';
  const api = new ApiClient(baseUrl);
  try {
    const participantId = await api.registerParticipant();
    const pkg = await api.package(participantId);
    session = { api, participantId, pkg, player: new Player(api, new RangeStreamSink()) };
    revisions.clear();
    el<HTMLElement>('session-info').textContent =
      `participant ${participantId}, package ${pkg.package_id} (${pkg.song_ids.length} songs)`;
    fillRateSelect(el<HTMLSelectElement>('rate-current'), 1.0);
    fillRateSelect(el<HTMLSelectElement>('rate-comparison'), 1.2);
    renderSongList();
    if (pkg.song_ids.length) await selectSong(pkg.song_ids[0]);
  } catch (err) {
    setStatus(`could not start session: ${describeError(err)}`, true);
  }
}

async function onSwitch(): Promise<void> {
  if (!session) return;
  try {
    await session.player.switchVersion();
    syncRateControls();
    const state = session.player.state();
    setStatus(
      `now at rate ${formatRate(state.currentRate)}, ` +
      `position ${(state.positionFraction * 100).toFixed(1)}%`,
    );
  } catch (err) {
    setStatus(`switch failed, playback unchanged: ${describeError(err)}`, true);
  }
}

async function onRateChange(rate: number): Promise<void> {
  if (!session) return;
  try {
    await session.player.setRate(rate);
    syncRateControls();
  } catch (err) {
    setStatus(`rate change failed: ${describeError(err)}`, true);
  }
}

function onSaveJudgment(): void {
  if (!session) return;
  const errorBox = el<HTMLElement>('judgment-error');
  const alphaMin = parseAlpha(el<HTMLInputElement>('alpha-min').value);
  const alphaMax = parseAlpha(el<HTMLInputElement>('alpha-max').value);
  if (alphaMin === null || alphaMax === null) {
    errorBox.textContent = 'both bounds are required, e.g. 0.82 and 1.26';
    return;
  }
  const violation = validateJudgment(alphaMin, alphaMax);
  if (violation) {
    errorBox.textContent = violation.message;
    return;
  }
  errorBox.textContent = '';
  const { api, participantId, player } = session;
  const songId = player.state().songId;
  player.setDraft({ alphaMin, alphaMax });
  void writes
    .push(() =>
      api.submitJudgmentChecked({
        participant_id: participantId,
        song_id: songId,
        alpha_min: alphaMin,
        alpha_max: alphaMax,
      }),
    )
    .then((ack) => {
      revisions.set(ack.song_id, ack.revision);
      renderSongList();
      setStatus(`saved ${ack.song_id}: (${ack.alpha_min}, ${ack.alpha_max}) revision ${ack.revision}`);
    })
    .catch((err) => {
      errorBox.textContent = describeError(err);
    });
}

async function onSubmitPackage(): Promise<void> {
  if (!session) return;
  try {
    const pkg = await session.api.submitPackage(session.pkg.package_id);
    session.pkg = pkg;
    setStatus(`package ${pkg.package_id} submitted; judgments are now frozen`);
    el<HTMLButtonElement>('btn-save').disabled = true;
    el<HTMLButtonElement>('btn-submit-package').disabled = true;
  } catch (err) {
    setStatus(`submit failed: ${describeError(err)}`, true);
  }
}

async function refreshAggregate(): Promise<void> {
  if (!session) return;
  try {
    const result = await session.api.aggregate();
    const body = el<HTMLTableSectionElement>('aggregate-body');
    body.innerHTML = '';
    result.songs.forEach((song: AggregateSong) => {
      const row = document.createElement('tr');
      for (const cell of [
        song.song_id,
        song.genre,
        song.alpha_min.toFixed(2),
        song.alpha_max.toFixed(2),
        String(song.judgments),
      ]) {
        const td = document.createElement('td');
        td.textContent = cell;
        row.appendChild(td);
      }
      body.appendChild(row);
    });
    setStatus(`aggregate over ${result.songs.length} songs (${result.method})`);
  } catch (err) {
    setStatus(`aggregate failed: ${describeError(err)}`, true);
  }
}

function tick(): void {
  if (session) {
    const player = session.player;
    const fraction = player.positionFraction();
    const seconds = fraction * player.durationSeconds();
    el<HTMLElement>('position-readout').textContent =
      `${seconds.toFixed(1)} s / ${player.durationSeconds().toFixed(1)} s (${(fraction * 100).toFixed(1)}%)`;
  }
  requestAnimationFrame(tick);
}

function wire(): void {
  el<HTMLButtonElement>('btn-start').addEventListener('click', () => void startSession());
  el<HTMLButtonElement>('btn-switch').addEventListener('click', () => void onSwitch());
  el<HTMLButtonElement>('btn-play').addEventListener('click', () => void session?.player.play());
  el<HTMLButtonElement>('btn-pause').addEventListener('click', () => session?.player.pause());
  el<HTMLButtonElement>('btn-save').addEventListener('click', onSaveJudgment);
  el<HTMLButtonElement>('btn-submit-package').addEventListener('click', () => void onSubmitPackage());
  el<HTMLButtonElement>('btn-aggregate').addEventListener('click', () => void refreshAggregate());

  const current = el<HTMLSelectElement>('rate-current');
  current.addEventListener('change', () => void onRateChange(Number(current.value)));
  const comparison = el<HTMLSelectElement>('rate-comparison');
  comparison.addEventListener('change', () => {
    session?.player.setComparisonRate(Number(comparison.value));
  });
  el<HTMLButtonElement>('btn-rate-down').addEventListener('click', () =>
    void onRateChange(stepRate(Number(current.value), -1)),
  );
  el<HTMLButtonElement>('btn-rate-up').addEventListener('click', () =>
    void onRateChange(stepRate(Number(current.value), 1)),
  );

  const seek = el<HTMLInputElement>('seek');
  seek.addEventListener('change', () => {
    void session?.player.seekFraction(Number(seek.value) / 1000);
  });

  requestAnimationFrame(tick);
}

document.addEventListener('DOMContentLoaded', wire);
