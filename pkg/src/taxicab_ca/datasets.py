"""Embedded example datasets.

``asbestos``: 5x4 contingency table of 1117 workers cross-classified by years
of occupational asbestos exposure and diagnosed asbestosis grade.

``americas``: 22x15 binary affiliation matrix of Western Hemisphere countries
by membership in regional trade and treaty organizations.
"""

from __future__ import annotations

from importlib import resources

from .io import LabeledMatrix, parse_counts_csv

__all__ = ["DATASETS", "dataset_bytes", "load_dataset"]

DATASETS = ("asbestos", "americas")


def dataset_bytes(name: str) -> bytes:
    """Raw CSV bytes of an embedded dataset (for hashing and provenance)."""
    if name not in DATASETS:
        raise ValueError(f"unknown dataset {name!r}; available: {', '.join(DATASETS)}")
    return resources.files(__package__).joinpath(f"data/{name}.csv").read_bytes()


def load_dataset(name: str) -> LabeledMatrix:
    """Load an embedded dataset as a labeled count matrix."""
    return parse_counts_csv(dataset_bytes(name).decode("utf-8"), source=name)
