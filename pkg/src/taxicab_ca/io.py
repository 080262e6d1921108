"""Labeled CSV counts, the plain-text tensor format, and parse errors with positions.

CSV convention (R-style): the header row holds the m column labels; every
data row holds a row label followed by m nonnegative numbers.  The tensor
format is a dimension line "n m t" followed by n*t lines of m numbers,
ordered in third-mode-major slabs.
"""

from __future__ import annotations

import csv
import io as _io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "LabeledMatrix",
    "format_tensor",
    "load_counts_csv",
    "load_tensor",
    "parse_counts_csv",
    "parse_tensor",
]


@dataclass(frozen=True)
class LabeledMatrix:
    """Nonnegative matrix with row and column labels."""

    values: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def total(self) -> float:
        return float(self.values.sum())


def parse_counts_csv(text: str, source: str = "<string>") -> LabeledMatrix:
    """Parse labeled counts from CSV text; errors carry row/column positions."""
    rows = [row for row in csv.reader(_io.StringIO(text))]
    if not rows or not rows[0]:
        raise ValueError(f"{source}: empty CSV")
    col_labels = tuple(label.strip() for label in rows[0])
    m = len(col_labels)
    if len(set(col_labels)) != m:
        raise ValueError(f"{source}: duplicate column labels")
    data_rows = rows[1:]
    if not data_rows:
        raise ValueError(f"{source}: no data rows")
    row_labels: list[str] = []
    values = np.zeros((len(data_rows), m))
    for i, row in enumerate(data_rows):
        line = i + 2  # 1-based, after the header
        if len(row) != m + 1:
            raise ValueError(
                f"{source}: row {line} has {len(row)} cells, expected {m + 1}"
            )
        row_labels.append(row[0].strip())
        for j, cell in enumerate(row[1:]):
            try:
                value = float(cell)
            except ValueError:
                raise ValueError(
                    f"{source}: non-numeric cell {cell!r} at row {line}, "
                    f"column {col_labels[j]!r}"
                ) from None
            if not np.isfinite(value):
                raise ValueError(
                    f"{source}: non-finite cell at row {line}, column {col_labels[j]!r}"
                )
            if value < 0:
                raise ValueError(
                    f"{source}: negative cell at row {line}, column {col_labels[j]!r}"
                )
            values[i, j] = value
    if len(set(row_labels)) != len(row_labels):
        raise ValueError(f"{source}: duplicate row labels")
    return LabeledMatrix(values=values, row_labels=tuple(row_labels),
                         col_labels=tuple(col_labels))


def load_counts_csv(path: str | Path) -> LabeledMatrix:
    """Load labeled counts from a CSV file."""
    path = Path(path)
    return parse_counts_csv(path.read_text(encoding="utf-8"), source=str(path))


def parse_tensor(text: str, source: str = "<string>") -> np.ndarray:
    """Parse a 3-way array: "n m t" then n*t lines of m numbers (slab-major in t)."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError(f"{source}: empty tensor file")
    dims = lines[0].split()
    if len(dims) != 3:
        raise ValueError(f"{source}: line 1 must hold three dimensions 'n m t'")
    try:
        n, m, t = (int(d) for d in dims)
    except ValueError:
        raise ValueError(f"{source}: non-integer dimension on line 1") from None
    if n < 1 or m < 1 or t < 1:
        raise ValueError(f"{source}: dimensions must be positive")
    expected = n * t
    if len(lines) - 1 != expected:
        raise ValueError(
            f"{source}: expected {expected} data lines, found {len(lines) - 1}"
        )
    x = np.zeros((n, m, t))
    for offset, line in enumerate(lines[1:]):
        lineno = offset + 2
        cells = line.split()
        if len(cells) != m:
            raise ValueError(
                f"{source}: line {lineno} has {len(cells)} values, expected {m}"
            )
        k, i = divmod(offset, n)
        for j, cell in enumerate(cells):
            try:
                x[i, j, k] = float(cell)
            except ValueError:
                raise ValueError(
                    f"{source}: non-numeric value {cell!r} at line {lineno}, "
                    f"position {j + 1}"
                ) from None
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{source}: non-finite values in tensor")
    return x


def load_tensor(path: str | Path) -> np.ndarray:
    """Load a 3-way array from a tensor text file."""
    path = Path(path)
    return parse_tensor(path.read_text(encoding="utf-8"), source=str(path))


def format_tensor(x: np.ndarray) -> str:
    """Write a 3-way array in the tensor text format (round-trips with parse)."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 3:
        raise ValueError("tensor must be a 3-d array")
    n, m, t = x.shape
    out = [f"{n} {m} {t}"]
    for k in range(t):
        for i in range(n):
            out.append(" ".join(repr(float(v)) for v in x[i, :, k]))
    return "\n".join(out) + "\n"
