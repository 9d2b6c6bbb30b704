"""Command line surface."""

import json

import numpy as np
from click.testing import CliRunner
from scipy.io import wavfile

from msrkit.audio import write_wav
from msrkit.cli import main
from msrkit.data import write_annotations_csv
from msrkit.grid import format_rate, grid_rates

import reference_data as ref
from signals import SR, click_track, sine_clip


def _write_inputs(tmp_path):
    tone = tmp_path / "tone.wav"
    write_wav(tone, sine_clip(seconds=1.0))
    csv_path = tmp_path / "ann.csv"
    write_annotations_csv(csv_path, ref.two_point_records())
    return tone, csv_path


def test_stretch_command(tmp_path):
    tone, _ = _write_inputs(tmp_path)
    out = tmp_path / "half.wav"
    result = CliRunner().invoke(
        main, ["stretch", "--in", str(tone), "--rate", "0.5", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    rate_hz, data = wavfile.read(out)
    assert rate_hz == SR
    assert len(data) == SR // 2


def test_stretch_rejects_out_of_range_rate(tmp_path):
    tone, _ = _write_inputs(tmp_path)
    result = CliRunner().invoke(
        main, ["stretch", "--in", str(tone), "--rate", "2.5", "--out", str(tmp_path / "x.wav")]
    )
    assert result.exit_code != 0
    assert "rate" in result.output


def test_grid_command_emits_98_named_variants(tmp_path):
    tone, _ = _write_inputs(tmp_path)
    outdir = tmp_path / "variants"
    result = CliRunner().invoke(main, ["grid", "--in", str(tone), "--outdir", str(outdir)])
    assert result.exit_code == 0, result.output
    files = sorted(p.name for p in outdir.iterdir())
    assert len(files) == 98
    assert f"tone_{format_rate(0.02)}.wav" in files
    assert f"tone_{format_rate(1.98)}.wav" in files
    assert "tone_1.00.wav" not in files
    rate_hz, data = wavfile.read(outdir / "tone_0.50.wav")
    assert len(data) == int(round(0.5 * SR))
    assert set(files) == {f"tone_{format_rate(r)}.wav" for r in grid_rates()}


def test_analyze_tempo_json(tmp_path):
    clicks = tmp_path / "clicks.wav"
    write_wav(clicks, click_track(120))
    out = tmp_path / "tempo.json"
    result = CliRunner().invoke(
        main, ["analyze", "tempo", "--in", str(clicks), "--json", str(out)]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert abs(payload["tempo_bpm"] - 120.0) <= 2.0
    assert "tempo_bpm=" in result.output


def test_analyze_stats_and_similarity(tmp_path):
    _, csv_path = _write_inputs(tmp_path)
    stats_json = tmp_path / "stats.json"
    result = CliRunner().invoke(
        main, ["analyze", "stats", "--data", str(csv_path), "--json", str(stats_json)]
    )
    assert result.exit_code == 0, result.output
    stats = json.loads(stats_json.read_text())
    assert stats["Pop"]["mean_min"] == 0.735

    sim_json = tmp_path / "sim.json"
    result = CliRunner().invoke(
        main, ["analyze", "similarity", "--data", str(csv_path), "--json", str(sim_json)]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(sim_json.read_text())
    assert payload["genres"] == ref.GENRES
    matrix = np.array(payload["matrix"])
    assert abs(matrix[0, 1] - 0.713) < 0.005  # Pop/Rock anchor
    assert "0.713" in result.output or "0.71" in result.output


def test_analyze_rects_reports_relations(tmp_path):
    _, csv_path = _write_inputs(tmp_path)
    rects_json = tmp_path / "rects.json"
    result = CliRunner().invoke(
        main, ["analyze", "rects", "--data", str(csv_path), "--json", str(rects_json)]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(rects_json.read_text())
    relations = {
        frozenset({r["a"], r["b"]}): r["relation"] for r in payload["relations"]
    }
    for pair in ref.INCLUSION_PAIRS:
        assert relations[pair] == "inclusion"
    for pair in ref.EXCLUSION_PAIRS:
        assert relations[pair] == "exclusion"


def test_analyze_anova(tmp_path):
    _, csv_path = _write_inputs(tmp_path)
    out = tmp_path / "anova.json"
    result = CliRunner().invoke(
        main, ["analyze", "anova", "--data", str(csv_path), "--json", str(out)]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert payload["alpha_min"]["df_between"] == 10
    assert "F(10, 11)" in result.output


def test_analyze_regression_undefined_slope_fails_cleanly(tmp_path):
    _, csv_path = _write_inputs(tmp_path)
    # two_point_records carry no tempos at all
    result = CliRunner().invoke(main, ["analyze", "regression", "--data", str(csv_path)])
    assert result.exit_code != 0
    assert "tempo" in result.output


def test_serve_rejects_malformed_addr(tmp_path):
    _, csv_path = _write_inputs(tmp_path)
    catalog = tmp_path / "catalog.json"
    catalog.write_text("{}")
    result = CliRunner().invoke(
        main,
        [
            "serve",
            "--catalog", str(catalog),
            "--journal", str(tmp_path / "j.jsonl"),
            "--cache", str(tmp_path / "cache"),
            "--addr", "nonsense",
        ],
    )
    assert result.exit_code != 0
    assert "addr" in result.output
