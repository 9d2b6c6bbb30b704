"""Song annotation records, CSV ingestion, and the audio catalog manifest."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from ..exceptions import DomainError, RecordValidationError

ANNOTATION_HEADER = ["song_id", "genre", "tempo_bpm", "alpha_min", "alpha_max"]


@dataclass(frozen=True)
class SongRecord:
    """One song's annotation: genre, optional tempo, and its MSR bounds."""

    song_id: str
    genre: str
    tempo_bpm: float | None
    alpha_min: float
    alpha_max: float

    def __post_init__(self):
        if not self.song_id:
            raise RecordValidationError("song_id", "song_id must be non-empty")
        if not self.genre:
            raise RecordValidationError(
                "genre", f"record {self.song_id!r}: genre must be non-empty"
            )
        if self.tempo_bpm is not None and not self.tempo_bpm > 0.0:
            raise RecordValidationError(
                "tempo", f"record {self.song_id!r}: tempo_bpm must be positive"
            )
        if not 0.0 < self.alpha_min < 1.0 < self.alpha_max < 2.0:
            raise RecordValidationError(
                "alpha_order",
                f"record {self.song_id!r}: alpha bounds must satisfy "
                "0 < alpha_min < 1 < alpha_max < 2",
            )


def read_annotations_csv(path) -> list:
    """Read annotation records from comma-separated text.

    Expected header: song_id,genre,tempo_bpm,alpha_min,alpha_max. The tempo
    field may be empty. Malformed rows raise a validation error naming the
    offending row.
    """
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ANNOTATION_HEADER:
            raise DomainError(
                f"unexpected annotation header {header!r}; "
                f"expected {ANNOTATION_HEADER!r}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != len(ANNOTATION_HEADER):
                raise RecordValidationError(
                    "row_shape", f"line {lineno}: expected {len(ANNOTATION_HEADER)} fields"
                )
            song_id, genre, tempo_raw, amin_raw, amax_raw = (f.strip() for f in row)
            try:
                tempo = float(tempo_raw) if tempo_raw else None
                alpha_min = float(amin_raw)
                alpha_max = float(amax_raw)
            except ValueError as exc:
                raise RecordValidationError(
                    "number", f"line {lineno}: {exc}"
                ) from exc
            records.append(
                SongRecord(
                    song_id=song_id,
                    genre=genre,
                    tempo_bpm=tempo,
                    alpha_min=alpha_min,
                    alpha_max=alpha_max,
                )
            )
    return records


def write_annotations_csv(path, records) -> None:
    """Write records as comma-separated text that round-trips exactly."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(ANNOTATION_HEADER)
        for rec in records:
            tempo = "" if rec.tempo_bpm is None else repr(float(rec.tempo_bpm))
            writer.writerow(
                [rec.song_id, rec.genre, tempo, repr(float(rec.alpha_min)), repr(float(rec.alpha_max))]
            )


@dataclass(frozen=True)
class CatalogEntry:
    """Audio location and metadata for one song."""

    song_id: str
    path: str
    genre: str
    tempo_bpm: float | None = None


def load_catalog(path) -> dict:
    """Load a catalog manifest: JSON object song_id -> {path, genre, tempo_bpm?}.

    Relative audio paths resolve against the manifest's directory.
    """
    manifest_path = Path(path)
    with open(manifest_path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise DomainError("catalog manifest must be a JSON object")
    catalog = {}
    for song_id, entry in raw.items():
        if not isinstance(entry, dict) or "path" not in entry or "genre" not in entry:
            raise DomainError(f"catalog entry {song_id!r} needs 'path' and 'genre'")
        audio_path = Path(entry["path"])
        if not audio_path.is_absolute():
            audio_path = manifest_path.parent / audio_path
        tempo = entry.get("tempo_bpm")
        catalog[song_id] = CatalogEntry(
            song_id=song_id,
            path=str(audio_path),
            genre=str(entry["genre"]),
            tempo_bpm=float(tempo) if tempo is not None else None,
        )
    return catalog


def write_catalog(path, entries) -> None:
    """Write a catalog manifest from CatalogEntry values."""
    payload = {}
    for entry in entries:
        item = {"path": entry.path, "genre": entry.genre}
        if entry.tempo_bpm is not None:
            item["tempo_bpm"] = entry.tempo_bpm
        payload[entry.song_id] = item
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
