"""Experiment state: packages, judgment journal, and vote aggregation.

Persistence is an append-only line-delimited JSON journal of judgment
revisions, a sidecar event log for participants and packages, and an
optional compacted snapshot. Replaying the files reconstructs the exact
in-memory state. All writes funnel through one lock so the journal stays
totally ordered.
"""

from __future__ import annotations

import json
import os
import random
import threading
import time
import uuid
from collections import Counter
from dataclasses import dataclass, replace

import numpy as np

from ..exceptions import (
    DomainError,
    InsufficientCatalogError,
    PackageStateError,
    RecordValidationError,
)
from ..grid import is_grid_rate
from .records import SongRecord

PACKAGE_SIZE = 20
OPEN = "open"
SUBMITTED = "submitted"

UNKNOWN_GENRE = "unknown"


@dataclass(frozen=True)
class Package:
    """A participant's batch of songs to judge."""

    package_id: str
    participant_id: str
    song_ids: tuple
    status: str = OPEN

    def __post_init__(self):
        if len(set(self.song_ids)) != len(self.song_ids):
            raise DomainError("package songs must be distinct")
        if not self.song_ids:
            raise DomainError("package must contain songs")
        if self.status not in (OPEN, SUBMITTED):
            raise DomainError("package status must be open or submitted")


@dataclass(frozen=True)
class Judgment:
    """One revision of a participant's MSR report for a song."""

    participant_id: str
    song_id: str
    alpha_min: float
    alpha_max: float
    revision: int
    ts: float


def _validate_alpha(alpha_min: float, alpha_max: float) -> None:
    if not (0.0 < alpha_min < 1.0 and 1.0 < alpha_max < 2.0):
        raise RecordValidationError(
            "alpha_order",
            "alpha bounds must satisfy 0 < alpha_min < 1 < alpha_max < 2",
        )
    if not (is_grid_rate(alpha_min) and is_grid_rate(alpha_max)):
        raise RecordValidationError(
            "alpha_grid", "alpha values must be multiples of 0.02"
        )


def vote_alpha(values, method: str = "mode") -> float:
    """Collapse one bound's reported values to a single grid value.

    mode: most frequent grid value; ties resolve to the median of the tied
    values when that median is itself one of them (odd tie count), otherwise
    to the tied value closest to 1.0. mean/median: computed on grid indices
    and rounded to the nearest grid value.
    """
    ks = [int(round(v * 50)) for v in values]
    if not ks:
        raise DomainError("vote needs at least one value")
    if method == "mode":
        counts = Counter(ks)
        top = max(counts.values())
        tied = sorted(k for k, c in counts.items() if c == top)
        if len(tied) % 2 == 1:
            k = tied[len(tied) // 2]
        else:
            k = min(tied, key=lambda kk: abs(kk - 50))
    elif method == "mean":
        k = int(round(float(np.mean(ks))))
    elif method == "median":
        k = int(round(float(np.median(ks))))
    else:
        raise DomainError("method must be mode, mean, or median")
    return k / 50.0


def aggregate_judgments(judgments, method: str = "mode") -> tuple:
    """Aggregate one song's judgments to (alpha_min, alpha_max).

    Only the latest revision per participant counts.
    """
    latest: dict = {}
    for j in judgments:
        prev = latest.get(j.participant_id)
        if prev is None or j.revision > prev.revision:
            latest[j.participant_id] = j
    if not latest:
        raise DomainError("aggregation needs at least one judgment")
    chosen = list(latest.values())
    alpha_min = vote_alpha([j.alpha_min for j in chosen], method)
    alpha_max = vote_alpha([j.alpha_max for j in chosen], method)
    return alpha_min, alpha_max


class ExperimentStore:
    """Journal-backed state for one listening experiment."""

    def __init__(self, journal_path, catalog=None, package_size: int = PACKAGE_SIZE):
        self._journal_path = str(journal_path)
        self._events_path = self._journal_path + ".packages"
        self._snapshot_path = self._journal_path + ".snapshot.json"
        self._catalog = dict(catalog) if catalog else {}
        self._package_size = int(package_size)
        self._lock = threading.RLock()
        self._participants: set = set()
        self._packages: dict = {}
        self._history: dict = {}
        self._replay()

    # -- loading ----------------------------------------------------------

    def _replay(self) -> None:
        if os.path.exists(self._events_path):
            with open(self._events_path, encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    event = json.loads(line)
                    kind = event.get("event")
                    if kind == "participant":
                        self._participants.add(event["participant_id"])
                    elif kind == "assign":
                        pkg = Package(
                            package_id=event["package_id"],
                            participant_id=event["participant_id"],
                            song_ids=tuple(event["song_ids"]),
                        )
                        self._packages[pkg.package_id] = pkg
                    elif kind == "submit":
                        pkg = self._packages[event["package_id"]]
                        self._packages[pkg.package_id] = replace(pkg, status=SUBMITTED)
        if os.path.exists(self._journal_path):
            with open(self._journal_path, encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    raw = json.loads(line)
                    judgment = Judgment(
                        participant_id=raw["participant_id"],
                        song_id=raw["song_id"],
                        alpha_min=float(raw["alpha_min"]),
                        alpha_max=float(raw["alpha_max"]),
                        revision=int(raw["revision"]),
                        ts=float(raw["ts"]),
                    )
                    key = (judgment.participant_id, judgment.song_id)
                    self._history.setdefault(key, []).append(judgment)

    def _append(self, path: str, payload: dict) -> None:
        line = json.dumps(payload, sort_keys=True)
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")

    # -- participants and packages ----------------------------------------

    def add_participant(self, participant_id=None) -> str:
        with self._lock:
            pid = participant_id or uuid.uuid4().hex
            if pid not in self._participants:
                self._participants.add(pid)
                self._append(
                    self._events_path,
                    {"event": "participant", "participant_id": pid, "ts": time.time()},
                )
            return pid

    def has_participant(self, participant_id) -> bool:
        return participant_id in self._participants

    def packages_for(self, participant_id) -> list:
        with self._lock:
            return [
                p for p in self._packages.values()
                if p.participant_id == participant_id
            ]

    def package(self, package_id) -> Package:
        pkg = self._packages.get(package_id)
        if pkg is None:
            raise KeyError(f"unknown package {package_id!r}")
        return pkg

    def assign_package(self, participant_id, seed=None) -> Package:
        """Sample a fresh batch of songs, none previously assigned to the
        participant. Deterministic for a given seed and catalog."""
        with self._lock:
            if participant_id not in self._participants:
                raise KeyError(f"unknown participant {participant_id!r}")
            if not self._catalog:
                raise DomainError("store has no catalog to assign from")
            existing = self.packages_for(participant_id)
            seen = {sid for pkg in existing for sid in pkg.song_ids}
            available = sorted(set(self._catalog) - seen)
            if len(available) < self._package_size:
                raise InsufficientCatalogError(
                    f"{len(available)} unseen songs left; "
                    f"need {self._package_size}"
                )
            rng = random.Random(seed)
            song_ids = tuple(rng.sample(available, self._package_size))
            package_id = f"{participant_id}-p{len(existing) + 1}"
            pkg = Package(
                package_id=package_id,
                participant_id=participant_id,
                song_ids=song_ids,
            )
            self._packages[package_id] = pkg
            self._append(
                self._events_path,
                {
                    "event": "assign",
                    "package_id": package_id,
                    "participant_id": participant_id,
                    "song_ids": list(song_ids),
                    "ts": time.time(),
                },
            )
            return pkg

    def open_package_for(self, participant_id, song_id):
        for pkg in self.packages_for(participant_id):
            if song_id in pkg.song_ids and pkg.status == OPEN:
                return pkg
        return None

    def submit_package(self, package_id) -> Package:
        with self._lock:
            pkg = self.package(package_id)
            if pkg.status == SUBMITTED:
                raise PackageStateError(f"package {package_id!r} already submitted")
            pkg = replace(pkg, status=SUBMITTED)
            self._packages[package_id] = pkg
            self._append(
                self._events_path,
                {"event": "submit", "package_id": package_id, "ts": time.time()},
            )
            self.write_snapshot()
            return pkg

    # -- judgments ----------------------------------------------------------

    def record_judgment(
        self, participant_id, song_id, alpha_min, alpha_max, ts=None
    ) -> Judgment:
        with self._lock:
            if participant_id not in self._participants:
                raise KeyError(f"unknown participant {participant_id!r}")
            _validate_alpha(float(alpha_min), float(alpha_max))
            pkg = self.open_package_for(participant_id, song_id)
            if pkg is None:
                for other in self.packages_for(participant_id):
                    if song_id in other.song_ids:
                        raise PackageStateError(
                            f"package {other.package_id!r} already submitted"
                        )
                raise PackageStateError(
                    f"song {song_id!r} is not assigned to participant "
                    f"{participant_id!r}"
                )
            key = (participant_id, song_id)
            history = self._history.setdefault(key, [])
            judgment = Judgment(
                participant_id=participant_id,
                song_id=song_id,
                alpha_min=float(alpha_min),
                alpha_max=float(alpha_max),
                revision=len(history) + 1,
                ts=float(ts) if ts is not None else time.time(),
            )
            history.append(judgment)
            self._append(
                self._journal_path,
                {
                    "participant_id": judgment.participant_id,
                    "song_id": judgment.song_id,
                    "alpha_min": judgment.alpha_min,
                    "alpha_max": judgment.alpha_max,
                    "revision": judgment.revision,
                    "ts": judgment.ts,
                },
            )
            return judgment

    def judgment_history(self, participant_id, song_id) -> list:
        return list(self._history.get((participant_id, song_id), []))

    def judgment_count(self) -> int:
        return sum(len(h) for h in self._history.values())

    def latest_judgments(self) -> dict:
        """Latest revision per (participant, song), grouped by song."""
        by_song: dict = {}
        with self._lock:
            for (_, song_id), history in self._history.items():
                if history:
                    by_song.setdefault(song_id, []).append(history[-1])
        return by_song

    def aggregate(self, method: str = "mode") -> list:
        """Per-song aggregated SongRecords over the latest judgments."""
        records = []
        for song_id, judgments in sorted(self.latest_judgments().items()):
            alpha_min, alpha_max = aggregate_judgments(judgments, method)
            entry = self._catalog.get(song_id)
            records.append(
                SongRecord(
                    song_id=song_id,
                    genre=entry.genre if entry else UNKNOWN_GENRE,
                    tempo_bpm=entry.tempo_bpm if entry else None,
                    alpha_min=alpha_min,
                    alpha_max=alpha_max,
                )
            )
        return records

    # -- snapshot -----------------------------------------------------------

    def write_snapshot(self) -> str:
        """Write the compacted current state next to the journal."""
        with self._lock:
            state = {
                "participants": sorted(self._participants),
                "packages": [
                    {
                        "package_id": p.package_id,
                        "participant_id": p.participant_id,
                        "song_ids": list(p.song_ids),
                        "status": p.status,
                    }
                    for _, p in sorted(self._packages.items())
                ],
                "judgments": {
                    f"{pid}/{sid}": {
                        "alpha_min": h[-1].alpha_min,
                        "alpha_max": h[-1].alpha_max,
                        "revision": h[-1].revision,
                        "ts": h[-1].ts,
                    }
                    for (pid, sid), h in sorted(self._history.items())
                    if h
                },
            }
            tmp = self._snapshot_path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(state, fh, indent=2, sort_keys=True)
                fh.write("\n")
            os.replace(tmp, self._snapshot_path)
            return self._snapshot_path
