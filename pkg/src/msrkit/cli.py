"""Command line interface: stretching, analytics, and the experiment service."""

from __future__ import annotations

import dataclasses
import json
import math
from pathlib import Path

import click

from . import audio
from .analytics import (
    anova_one_way,
    genre_stats,
    msr_rectangle,
    rect_relation,
    regress_tempo_to_alpha,
    similarity_matrix,
)
from .data.records import read_annotations_csv
from .exceptions import MsrKitError
from .grid import format_rate, grid_rates
from .stretch import SolaConfig, active_kernel, stretch
from .tempo import estimate_tempo


def _fail(exc: Exception) -> None:
    raise click.ClickException(str(exc))


def _emit(payload: dict, json_path) -> None:
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        click.echo(f"wrote {json_path}")


def _load_records(data_path):
    try:
        return read_annotations_csv(data_path)
    except (MsrKitError, OSError) as exc:
        _fail(exc)


@click.group()
def main():
    """Music stretching resistance toolkit."""


@main.command("stretch")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--rate", type=float, required=True, help="duration ratio in (0, 2), 1.0 excluded")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def stretch_cmd(in_path, rate, out_path):
    """Time-stretch a WAV file without changing pitch."""
    try:
        clip = audio.read_wav(in_path)
        result = stretch(clip, rate)
        audio.write_wav(out_path, result)
    except MsrKitError as exc:
        _fail(exc)
    click.echo(
        f"{in_path} -> {out_path} rate={format_rate(rate)} "
        f"({result.duration_seconds:.2f}s, kernel={active_kernel()})"
    )


@main.command("grid")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--outdir", type=click.Path(file_okay=False), required=True)
def grid_cmd(in_path, outdir):
    """Render all 98 grid-rate variants of a WAV file."""
    out_dir = Path(outdir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(in_path).stem
    try:
        clip = audio.read_wav(in_path)
        config = SolaConfig()
        for rate in grid_rates():
            variant = stretch(clip, rate, config=config)
            audio.write_wav(out_dir / f"{stem}_{format_rate(rate)}.wav", variant)
    except MsrKitError as exc:
        _fail(exc)
    click.echo(f"wrote {len(grid_rates())} variants to {out_dir}")


@main.group("analyze")
def analyze():
    """Analytics over audio or annotation data."""


@analyze.command("tempo")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def tempo_cmd(in_path, json_path):
    """Estimate tempo (BPM, folded into (0, 200]) of a WAV file."""
    try:
        estimate = estimate_tempo(audio.read_wav(in_path))
    except MsrKitError as exc:
        _fail(exc)
    click.echo(f"tempo_bpm={estimate.bpm:.2f} confidence={estimate.confidence:.3f}")
    _emit({"tempo_bpm": estimate.bpm, "confidence": estimate.confidence}, json_path)


@analyze.command("stats")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def stats_cmd(data_path, json_path):
    """Per-genre means and deviations of the alpha bounds."""
    try:
        stats = genre_stats(_load_records(data_path))
    except MsrKitError as exc:
        _fail(exc)
    for g, s in stats.items():
        click.echo(
            f"{g}: n={s.count} alpha_min {s.mean_min:.3f}+/-{s.std_min:.3f} "
            f"alpha_max {s.mean_max:.3f}+/-{s.std_max:.3f}"
        )
    _emit({g: dataclasses.asdict(s) for g, s in stats.items()}, json_path)


@analyze.command("rects")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def rects_cmd(data_path, json_path):
    """Genre rectangles and their pairwise relations."""
    try:
        stats = genre_stats(_load_records(data_path))
    except MsrKitError as exc:
        _fail(exc)
    rects = {g: msr_rectangle(s) for g, s in stats.items()}
    for g, r in rects.items():
        click.echo(
            f"{g}: [{r.x_lo:.3f}, {r.x_hi:.3f}] x [{r.y_lo:.3f}, {r.y_hi:.3f}] "
            f"area={r.area:.6f}"
        )
    genres = list(rects)
    relations = []
    for i, a in enumerate(genres):
        for b in genres[i + 1:]:
            rel = rect_relation(rects[a], rects[b])
            relations.append({"a": a, "b": b, "relation": rel.value})
            if rel.value != "intersection":
                click.echo(f"{a} / {b}: {rel.value}")
    _emit(
        {
            "rectangles": {g: dataclasses.asdict(r) for g, r in rects.items()},
            "relations": relations,
        },
        json_path,
    )


@analyze.command("similarity")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def similarity_cmd(data_path, json_path):
    """Jaccard genre-similarity matrix, printed as an upper half-matrix."""
    try:
        stats = genre_stats(_load_records(data_path))
        genres, matrix = similarity_matrix(stats)
    except MsrKitError as exc:
        _fail(exc)
    width = max(len(g) for g in genres)
    for i, g in enumerate(genres):
        cells = ["     " for _ in range(i)]
        cells += [f"{matrix[i, j]:.3f}" for j in range(i, len(genres))]
        click.echo(f"{g:<{width}}  " + " ".join(cells))
    _emit({"genres": genres, "matrix": matrix.tolist()}, json_path)


@analyze.command("anova")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def anova_cmd(data_path, json_path):
    """One-way ANOVA of each alpha bound across genres."""
    records = _load_records(data_path)
    payload = {}
    try:
        for bound in ("alpha_min", "alpha_max"):
            groups: dict = {}
            for rec in records:
                groups.setdefault(rec.genre, []).append(getattr(rec, bound))
            res = anova_one_way(groups)
            payload[bound] = dataclasses.asdict(res)
            p_text = "<0.001" if res.p_value < 0.001 else f"{res.p_value:.4f}"
            f_text = "inf" if math.isinf(res.f_value) else f"{res.f_value:.3f}"
            click.echo(
                f"{bound}: F({res.df_between}, {res.df_within})={f_text}, P={p_text}"
            )
    except MsrKitError as exc:
        _fail(exc)
    _emit(payload, json_path)


@analyze.command("regression")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def regression_cmd(data_path, json_path):
    """Per-genre least-squares lines from tempo to each alpha bound."""
    records = _load_records(data_path)
    payload = {}
    try:
        for bound in ("min", "max"):
            lines = regress_tempo_to_alpha(records, bound=bound)
            payload[f"alpha_{bound}"] = {
                g: dataclasses.asdict(line) for g, line in lines.items()
            }
            for g, line in lines.items():
                click.echo(f"alpha_{bound} {g}: slope={line.slope:.3e} intercept={line.intercept:.4f}")
    except MsrKitError as exc:
        _fail(exc)
    _emit(payload, json_path)


@main.command("serve")
@click.option("--catalog", "catalog_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--journal", "journal_path", type=click.Path(dir_okay=False), required=True)
@click.option("--cache", "cache_dir", type=click.Path(file_okay=False), required=True)
@click.option("--addr", default="127.0.0.1:8000", show_default=True)
@click.option("--annotations", "annotations_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--frame-ms", type=float, default=SolaConfig.frame_ms, show_default=True)
@click.option("--overlap-ms", type=float, default=SolaConfig.overlap_ms, show_default=True)
@click.option("--seek-window-ms", type=float, default=SolaConfig.seek_window_ms, show_default=True)
def serve_cmd(
    catalog_path, journal_path, cache_dir, addr,
    annotations_path, frame_ms, overlap_ms, seek_window_ms,
):
    """Run the listening-experiment HTTP service."""
    import uvicorn

    from .service import build_app

    host, _, port_text = addr.rpartition(":")
    host = host or "127.0.0.1"
    try:
        port = int(port_text)
    except ValueError:
        raise click.ClickException(f"bad --addr {addr!r}; expected host:port")
    try:
        config = SolaConfig(
            frame_ms=frame_ms, overlap_ms=overlap_ms, seek_window_ms=seek_window_ms
        )
        app = build_app(
            catalog_path, journal_path, cache_dir,
            annotations_path=annotations_path, config=config,
        )
    except MsrKitError as exc:
        _fail(exc)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
