"""Correspondence matrices and centered residual arrays.

A correspondence matrix is a nonnegative matrix normalized to total 1 with
row/column masses.  Its multiplicative residual against the independence model
is double-centered (all row and column sums vanish), as is the additive
double-centering of an arbitrary matrix.  The three-way analogue removes all
main effects and two-way interactions, leaving an array whose fibers all sum
to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CENTERING_TOL",
    "CorrespondenceMatrix",
    "ResidualMatrix",
    "Tensor3",
    "additive_double_center",
    "correspondence_residual",
    "from_counts",
    "triple_center",
]

CENTERING_TOL = 1e-10


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CorrespondenceMatrix:
    """Nonnegative matrix summing to 1, with row masses p_i* and column masses p_*j."""

    p: np.ndarray
    row_masses: np.ndarray
    col_masses: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", _readonly(self.p))
        object.__setattr__(self, "row_masses", _readonly(self.row_masses))
        object.__setattr__(self, "col_masses", _readonly(self.col_masses))
        p = self.p
        if p.ndim != 2 or p.size == 0:
            raise ValueError("correspondence matrix must be a nonempty 2-d array")
        if not np.all(np.isfinite(p)):
            raise ValueError("correspondence matrix contains non-finite values")
        if np.any(p < 0):
            raise ValueError("correspondence matrix has negative entries")
        if abs(float(p.sum()) - 1.0) > CENTERING_TOL:
            raise ValueError("correspondence matrix does not sum to 1")
        if not np.allclose(self.row_masses, p.sum(axis=1), rtol=0, atol=CENTERING_TOL):
            raise ValueError("row masses inconsistent with matrix")
        if not np.allclose(self.col_masses, p.sum(axis=0), rtol=0, atol=CENTERING_TOL):
            raise ValueError("column masses inconsistent with matrix")
        zero_rows = np.flatnonzero(self.row_masses == 0)
        if zero_rows.size:
            raise ValueError(f"row {int(zero_rows[0])} has zero mass")
        zero_cols = np.flatnonzero(self.col_masses == 0)
        if zero_cols.size:
            raise ValueError(f"column {int(zero_cols[0])} has zero mass")

    @property
    def shape(self) -> tuple[int, int]:
        return self.p.shape

    @classmethod
    def from_counts(cls, counts: np.ndarray) -> "CorrespondenceMatrix":
        """Normalize a nonnegative count matrix by its grand total."""
        c = np.asarray(counts, dtype=float)
        if c.ndim != 2 or c.size == 0:
            raise ValueError("counts must be a nonempty 2-d array")
        if not np.all(np.isfinite(c)):
            raise ValueError("counts contain non-finite values")
        if np.any(c < 0):
            i, j = np.argwhere(c < 0)[0]
            raise ValueError(f"negative count at row {int(i)}, column {int(j)}")
        total = float(c.sum())
        if total <= 0.0:
            raise ValueError("zero total")
        row_sums = c.sum(axis=1)
        col_sums = c.sum(axis=0)
        zr = np.flatnonzero(row_sums == 0)
        if zr.size:
            raise ValueError(f"row {int(zr[0])} is all zero")
        zc = np.flatnonzero(col_sums == 0)
        if zc.size:
            raise ValueError(f"column {int(zc[0])} is all zero")
        p = c / total
        return cls(p=p, row_masses=row_sums / total, col_masses=col_sums / total)


def from_counts(counts: np.ndarray) -> CorrespondenceMatrix:
    """Build a CorrespondenceMatrix from a nonnegative count matrix."""
    return CorrespondenceMatrix.from_counts(counts)


def _max_line_sum(x: np.ndarray) -> float:
    return max(
        float(np.abs(x.sum(axis=1)).max(initial=0.0)),
        float(np.abs(x.sum(axis=0)).max(initial=0.0)),
    )


@dataclass(frozen=True)
class ResidualMatrix:
    """Double-centered matrix: every row sum and column sum is zero.

    Centering is validated relative to the entrywise L1 mass; a matrix whose
    mass is itself below the tolerance counts as (numerically) zero and is
    trivially centered.
    """

    x: np.ndarray
    kind: str = "additive"
    centering_tolerance: float = CENTERING_TOL

    _KINDS = ("multiplicative", "additive", "deflated")

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _readonly(self.x))
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown residual kind {self.kind!r}")
        x = self.x
        if x.ndim != 2 or x.size == 0:
            raise ValueError("residual matrix must be a nonempty 2-d array")
        if not np.all(np.isfinite(x)):
            raise ValueError("residual matrix contains non-finite values")
        mass = float(np.abs(x).sum())
        if mass > self.centering_tolerance:
            if _max_line_sum(x) > self.centering_tolerance * mass:
                raise ValueError("matrix is not double-centered")

    @property
    def shape(self) -> tuple[int, int]:
        return self.x.shape


def correspondence_residual(P: CorrespondenceMatrix) -> ResidualMatrix:
    """Residual of P against the independence model: x_ij = p_ij - p_i* p_*j."""
    x = P.p - np.outer(P.row_masses, P.col_masses)
    return ResidualMatrix(x=x, kind="multiplicative")


def additive_double_center(Y: np.ndarray) -> ResidualMatrix:
    """Additive two-way interactions: y_ij - rowmean_i - colmean_j + grandmean."""
    y = np.asarray(Y, dtype=float)
    if y.ndim != 2 or y.size == 0:
        raise ValueError("input must be a nonempty 2-d array")
    if not np.all(np.isfinite(y)):
        raise ValueError("input contains non-finite values")
    x = y - y.mean(axis=1, keepdims=True) - y.mean(axis=0, keepdims=True) + y.mean()
    return ResidualMatrix(x=x, kind="additive")


@dataclass(frozen=True)
class Tensor3:
    """Triple-centered 3-way array: all mode-wise fiber sums are zero."""

    x: np.ndarray
    centering_tolerance: float = CENTERING_TOL

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _readonly(self.x))
        x = self.x
        if x.ndim != 3 or x.size == 0:
            raise ValueError("tensor must be a nonempty 3-d array")
        if not np.all(np.isfinite(x)):
            raise ValueError("tensor contains non-finite values")
        mass = float(np.abs(x).sum())
        if mass > self.centering_tolerance:
            worst = max(
                float(np.abs(x.sum(axis=axis)).max()) for axis in range(3)
            )
            if worst > self.centering_tolerance * mass:
                raise ValueError("tensor is not triple-centered")

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.x.shape


def triple_center(Y: np.ndarray) -> Tensor3:
    """Additive three-way interactions of a 3-way array.

    Subtracts all three two-way means, adds back the three one-way means,
    and subtracts the grand mean, leaving an array whose fibers along every
    mode sum to zero.
    """
    y = np.asarray(Y, dtype=float)
    if y.ndim != 3 or y.size == 0:
        raise ValueError("input must be a nonempty 3-d array")
    if not np.all(np.isfinite(y)):
        raise ValueError("input contains non-finite values")
    m_ij = y.mean(axis=2, keepdims=True)
    m_ik = y.mean(axis=1, keepdims=True)
    m_jk = y.mean(axis=0, keepdims=True)
    m_i = y.mean(axis=(1, 2), keepdims=True)
    m_j = y.mean(axis=(0, 2), keepdims=True)
    m_k = y.mean(axis=(0, 1), keepdims=True)
    x = y - m_ij - m_ik - m_jk + m_i + m_j + m_k - y.mean()
    return Tensor3(x=x)
