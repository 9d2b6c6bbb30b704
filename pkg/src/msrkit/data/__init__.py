"""Annotation ingestion, experiment persistence, and judgment aggregation."""

from .records import (
    ANNOTATION_HEADER,
    CatalogEntry,
    SongRecord,
    load_catalog,
    read_annotations_csv,
    write_annotations_csv,
    write_catalog,
)
from .store import (
    OPEN,
    PACKAGE_SIZE,
    SUBMITTED,
    ExperimentStore,
    Judgment,
    Package,
    aggregate_judgments,
    vote_alpha,
)

__all__ = [
    "ANNOTATION_HEADER",
    "OPEN",
    "PACKAGE_SIZE",
    "SUBMITTED",
    "CatalogEntry",
    "ExperimentStore",
    "Judgment",
    "Package",
    "SongRecord",
    "aggregate_judgments",
    "load_catalog",
    "read_annotations_csv",
    "vote_alpha",
    "write_annotations_csv",
    "write_catalog",
]
