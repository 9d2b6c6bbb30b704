"""HTTP facade for the listening experiment.

Serves stretched variants (synthesized lazily, cached on disk, byte-range
requests honored), assigns song packages, records judgment revisions, and
publishes aggregated results and genre statistics.
"""

from __future__ import annotations

import hashlib
import os
import re
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import audio
from .analytics import (
    anova_one_way,
    genre_stats,
    msr_rectangle,
    similarity_matrix,
)
from .data.records import load_catalog, read_annotations_csv
from .data.store import ExperimentStore
from .exceptions import (
    AudioInputError,
    DomainError,
    InsufficientCatalogError,
    PackageStateError,
    RecordValidationError,
)
from .grid import format_rate, is_grid_rate
from .stretch import SolaConfig, stretch

_RANGE_RE = re.compile(r"bytes=(\d*)-(\d*)$")


class ParticipantIn(BaseModel):
    participant_id: str | None = None


class JudgmentIn(BaseModel):
    participant_id: str
    song_id: str
    alpha_min: float
    alpha_max: float


def _safe_name(song_id: str) -> str:
    if re.fullmatch(r"[A-Za-z0-9._-]+", song_id):
        return song_id
    return hashlib.sha1(song_id.encode("utf-8")).hexdigest()


def _package_json(pkg) -> dict:
    return {
        "package_id": pkg.package_id,
        "participant_id": pkg.participant_id,
        "song_ids": list(pkg.song_ids),
        "status": pkg.status,
    }


def _stats_payload(records) -> dict:
    stats = genre_stats(records)
    rects = {g: msr_rectangle(s) for g, s in stats.items()}
    payload = {
        "genres": {
            g: {
                "count": s.count,
                "mean_min": s.mean_min,
                "std_min": s.std_min,
                "mean_max": s.mean_max,
                "std_max": s.std_max,
            }
            for g, s in stats.items()
        },
        "rectangles": {
            g: {"x_lo": r.x_lo, "x_hi": r.x_hi, "y_lo": r.y_lo, "y_hi": r.y_hi}
            for g, r in rects.items()
        },
    }
    if len(stats) >= 2:
        genres, matrix = similarity_matrix(stats)
        payload["similarity"] = {"genres": genres, "matrix": matrix.tolist()}
        groups_min = {}
        groups_max = {}
        for rec in records:
            groups_min.setdefault(rec.genre, []).append(rec.alpha_min)
            groups_max.setdefault(rec.genre, []).append(rec.alpha_max)
        try:
            payload["anova"] = {
                bound: {
                    "f_value": res.f_value,
                    "df_between": res.df_between,
                    "df_within": res.df_within,
                    "p_value": res.p_value,
                }
                for bound, res in (
                    ("alpha_min", anova_one_way(groups_min)),
                    ("alpha_max", anova_one_way(groups_max)),
                )
            }
        except DomainError:
            pass
    return payload


def _range_response(payload: bytes, request: Request, media_type: str) -> Response:
    total = len(payload)
    header = request.headers.get("range")
    base = {"accept-ranges": "bytes"}
    if not header:
        return Response(payload, media_type=media_type, headers=base)
    match = _RANGE_RE.fullmatch(header.strip())
    if not match or (not match.group(1) and not match.group(2)):
        return Response(payload, media_type=media_type, headers=base)
    start_raw, end_raw = match.groups()
    if start_raw:
        start = int(start_raw)
        end = int(end_raw) if end_raw else total - 1
    else:
        # suffix form: last N bytes
        length = int(end_raw)
        start = max(total - length, 0)
        end = total - 1
    end = min(end, total - 1)
    if start >= total or start > end:
        return Response(
            status_code=416,
            headers={**base, "content-range": f"bytes */{total}"},
        )
    chunk = payload[start:end + 1]
    return Response(
        chunk,
        status_code=206,
        media_type=media_type,
        headers={**base, "content-range": f"bytes {start}-{end}/{total}"},
    )


class VariantCache:
    """Disk cache of stretched variants, one synthesis per key."""

    def __init__(self, cache_dir, config: SolaConfig):
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.config = config
        self._master = threading.Lock()
        self._locks: dict = {}

    def _key_lock(self, key: str) -> threading.Lock:
        with self._master:
            lock = self._locks.get(key)
            if lock is None:
                lock = threading.Lock()
                self._locks[key] = lock
            return lock

    def variant_path(self, song_id: str, source_path: str, rate: float) -> Path:
        key = f"{_safe_name(song_id)}_{format_rate(rate)}_{self.config.cache_key()}"
        target = self.cache_dir / f"{key}.wav"
        if target.exists():
            return target
        with self._key_lock(key):
            if target.exists():
                return target
            clip = audio.read_wav(source_path)
            out = stretch(clip, rate, config=self.config)
            tmp = target.with_suffix(".tmp.wav")
            audio.write_wav(tmp, out)
            os.replace(tmp, target)
        return target


def create_app(
    catalog,
    store: ExperimentStore,
    cache_dir,
    annotations=None,
    config: SolaConfig | None = None,
) -> FastAPI:
    """Assemble the service from loaded components.

    `catalog` maps song_id -> CatalogEntry; `annotations` is an optional list
    of SongRecords used for /results/stats while the journal is still empty.
    """
    config = config or SolaConfig()
    cache = VariantCache(cache_dir, config)
    app = FastAPI(title="msrkit experiment service")
    app.state.catalog = catalog
    app.state.store = store
    app.state.cache = cache
    app.state.annotations = list(annotations) if annotations else []

    @app.exception_handler(RecordValidationError)
    async def _validation_handler(request, exc):
        return JSONResponse(
            status_code=422,
            content={"detail": {"rule": exc.rule, "message": str(exc)}},
        )

    @app.exception_handler(PackageStateError)
    async def _state_handler(request, exc):
        return JSONResponse(status_code=409, content={"detail": {"message": str(exc)}})

    @app.exception_handler(InsufficientCatalogError)
    async def _catalog_handler(request, exc):
        return JSONResponse(status_code=409, content={"detail": {"message": str(exc)}})

    @app.exception_handler(DomainError)
    async def _domain_handler(request, exc):
        return JSONResponse(status_code=400, content={"detail": {"message": str(exc)}})

    @app.exception_handler(AudioInputError)
    async def _audio_handler(request, exc):
        return JSONResponse(status_code=400, content={"detail": {"message": str(exc)}})

    def _not_found(message: str) -> JSONResponse:
        return JSONResponse(status_code=404, content={"detail": {"message": message}})

    @app.get("/songs/{song_id}/variant")
    def get_variant(song_id: str, rate: float, request: Request):
        entry = catalog.get(song_id)
        if entry is None:
            return _not_found(f"unknown song {song_id!r}")
        if abs(rate - 1.0) <= 1e-9:
            payload = Path(entry.path).read_bytes()
        else:
            if not is_grid_rate(rate):
                raise DomainError(
                    f"rate {rate} is not on the 0.02 grid"
                )
            path = cache.variant_path(song_id, entry.path, rate)
            payload = path.read_bytes()
        return _range_response(payload, request, "audio/wav")

    @app.post("/participants", status_code=201)
    def post_participant(body: ParticipantIn | None = None):
        pid = store.add_participant(body.participant_id if body else None)
        return {"participant_id": pid}

    @app.get("/participants/{participant_id}/package")
    def get_package(participant_id: str):
        if not store.has_participant(participant_id):
            return _not_found(f"unknown participant {participant_id!r}")
        open_packages = [
            p for p in store.packages_for(participant_id) if p.status == "open"
        ]
        if open_packages:
            return _package_json(open_packages[-1])
        seq = len(store.packages_for(participant_id)) + 1
        digest = hashlib.sha256(f"{participant_id}:{seq}".encode("utf-8")).digest()
        seed = int.from_bytes(digest[:8], "big")
        return _package_json(store.assign_package(participant_id, seed=seed))

    @app.post("/judgments", status_code=201)
    def post_judgment(body: JudgmentIn):
        try:
            judgment = store.record_judgment(
                body.participant_id, body.song_id, body.alpha_min, body.alpha_max
            )
        except KeyError as exc:
            return _not_found(str(exc))
        return {
            "participant_id": judgment.participant_id,
            "song_id": judgment.song_id,
            "alpha_min": judgment.alpha_min,
            "alpha_max": judgment.alpha_max,
            "revision": judgment.revision,
            "ts": judgment.ts,
        }

    @app.post("/packages/{package_id}/submit")
    def post_submit(package_id: str):
        try:
            pkg = store.submit_package(package_id)
        except KeyError as exc:
            return _not_found(str(exc))
        return _package_json(pkg)

    @app.get("/results/aggregate")
    def get_aggregate(method: str = "mode"):
        records = store.aggregate(method)
        votes = store.latest_judgments()
        return {
            "method": method,
            "songs": [
                {
                    "song_id": rec.song_id,
                    "genre": rec.genre,
                    "tempo_bpm": rec.tempo_bpm,
                    "alpha_min": rec.alpha_min,
                    "alpha_max": rec.alpha_max,
                    "judgments": len(votes.get(rec.song_id, [])),
                }
                for rec in records
            ],
        }

    @app.get("/results/stats")
    def get_stats():
        records = store.aggregate()
        source = "journal"
        if not records and app.state.annotations:
            records = app.state.annotations
            source = "annotations"
        if not records:
            raise DomainError("no judgments or annotation data available")
        payload = _stats_payload(records)
        payload["source"] = source
        return payload

    return app


def build_app(
    catalog_path,
    journal_path,
    cache_dir,
    annotations_path=None,
    config: SolaConfig | None = None,
) -> FastAPI:
    """File-path convenience wrapper around create_app."""
    catalog = load_catalog(catalog_path)
    store = ExperimentStore(journal_path, catalog=catalog)
    annotations = (
        read_annotations_csv(annotations_path) if annotations_path else None
    )
    return create_app(
        catalog, store, cache_dir, annotations=annotations, config=config
    )
