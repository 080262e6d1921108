"""Classical correspondence analysis via a one-sided Jacobi SVD.

Standard CA: singular value decomposition of the standardized residuals
s_ij = (p_ij - p_i* p_*j) / sqrt(p_i* p_*j), factor scores scaled by the
masses, and per-axis contributions mass * score^2 / inertia.  Contributions
here can concentrate arbitrarily close to 1 on a single point, unlike the
taxicab variant where they are capped at 1/2; ``compare_ca_tca`` puts the two
side by side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .residual import CorrespondenceMatrix
from .taxicab import rc_axis, tca

__all__ = [
    "CaDecomposition",
    "CaTcaComparison",
    "PointComparison",
    "SvdConvergenceError",
    "ca",
    "compare_ca_tca",
    "jacobi_svd",
]

_SVD_TOL = 1e-12
_MAX_SWEEPS = 60
_RANK_TOL = 1e-12


class SvdConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted before off-diagonal entries vanished."""


def jacobi_svd(
    M: np.ndarray, tol: float = _SVD_TOL, max_sweeps: int = _MAX_SWEEPS
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Compact SVD M = U diag(s) V' by one-sided Jacobi rotations.

    Columns are rotated pairwise until every off-diagonal Gram entry falls
    below ``tol`` times the Frobenius norm of M.  Singular values come out
    descending; U and V have orthonormal columns (k = min(n, m)).

    Raises:
        SvdConvergenceError: if not converged after ``max_sweeps`` sweeps.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.size == 0:
        raise ValueError("input must be a nonempty 2-d array")
    if not np.all(np.isfinite(A)):
        raise ValueError("input contains non-finite values")
    n, m = A.shape
    if n < m:
        V, s, U = jacobi_svd(A.T, tol=tol, max_sweeps=max_sweeps)
        return U, s, V

    norm = float(np.linalg.norm(A))
    thresh = tol * norm
    V = np.eye(m)
    converged = norm == 0.0
    sweeps = 0
    while not converged:
        if sweeps >= max_sweeps:
            raise SvdConvergenceError(f"no convergence after {sweeps} sweeps")
        sweeps += 1
        converged = True
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = float(A[:, p] @ A[:, q])
                if abs(apq) <= thresh:
                    continue
                converged = False
                app = float(A[:, p] @ A[:, p])
                aqq = float(A[:, q] @ A[:, q])
                zeta = (aqq - app) / (2.0 * apq)
                t = np.sign(zeta) if zeta != 0 else 1.0
                t /= abs(zeta) + np.hypot(1.0, zeta)
                c = 1.0 / np.hypot(1.0, t)
                s_ = c * t
                col_p = A[:, p].copy()
                A[:, p] = c * col_p - s_ * A[:, q]
                A[:, q] = s_ * col_p + c * A[:, q]
                col_p = V[:, p].copy()
                V[:, p] = c * col_p - s_ * V[:, q]
                V[:, q] = s_ * col_p + c * V[:, q]

    s = np.linalg.norm(A, axis=0)
    order = np.argsort(-s, kind="stable")
    s = s[order]
    A = A[:, order]
    V = V[:, order]
    U = np.zeros_like(A)
    # columns at the numerical-rank floor are noise; rebuild them orthonormally
    nonzero = s > (_RANK_TOL * s[0] if s.size and s[0] > 0 else 0.0)
    U[:, nonzero] = A[:, nonzero] / s[nonzero]
    # orthonormal completion for null columns, deterministic over the standard basis
    for j in np.flatnonzero(~nonzero):
        for k in range(n):
            cand = np.zeros(n)
            cand[k] = 1.0
            cand -= U @ (U.T @ cand)
            norm_c = float(np.linalg.norm(cand))
            if norm_c > 0.5:
                U[:, j] = cand / norm_c
                break
    return U, s, V


@dataclass(frozen=True)
class CaDecomposition:
    """Classical CA axes: singular values, inertias, scores and contributions.

    Arrays are axis-major: ``row_scores[k]`` is the length-n score vector of
    axis k+1.  Contributions per axis sum to 1 over rows and over columns,
    and the principal inertias sum to the total inertia.
    """

    singular_values: np.ndarray
    principal_inertias: np.ndarray
    row_scores: np.ndarray
    col_scores: np.ndarray
    row_ctr: np.ndarray
    col_ctr: np.ndarray
    total_inertia: float
    row_masses: np.ndarray
    col_masses: np.ndarray

    @property
    def n_axes(self) -> int:
        return int(self.singular_values.size)


def ca(P: CorrespondenceMatrix, max_axes: int | None = None) -> CaDecomposition:
    """Correspondence analysis of P, keeping axes with nonnegligible inertia."""
    if max_axes is not None and max_axes < 0:
        raise ValueError("max_axes must be nonnegative")
    expected = np.outer(P.row_masses, P.col_masses)
    S = (P.p - expected) / np.sqrt(expected)
    total_inertia = float((S**2).sum())
    U, s, V = jacobi_svd(S)
    if s.size and s[0] > 0:
        keep = int(np.count_nonzero(s > _RANK_TOL * s[0]))
    else:
        keep = 0
    if max_axes is not None:
        keep = min(keep, max_axes)
    U, s, V = U[:, :keep], s[:keep], V[:, :keep]
    inv_sqrt_r = 1.0 / np.sqrt(P.row_masses)
    inv_sqrt_c = 1.0 / np.sqrt(P.col_masses)
    row_scores = (s[None, :] * U * inv_sqrt_r[:, None]).T
    col_scores = (s[None, :] * V * inv_sqrt_c[:, None]).T
    with np.errstate(invalid="ignore", divide="ignore"):
        row_ctr = P.row_masses[None, :] * row_scores**2 / (s**2)[:, None]
        col_ctr = P.col_masses[None, :] * col_scores**2 / (s**2)[:, None]
    return CaDecomposition(
        singular_values=s,
        principal_inertias=s**2,
        row_scores=row_scores,
        col_scores=col_scores,
        row_ctr=row_ctr,
        col_ctr=col_ctr,
        total_inertia=total_inertia,
        row_masses=P.row_masses,
        col_masses=P.col_masses,
    )


@dataclass(frozen=True)
class PointComparison:
    label: str
    ca_contribution: float
    tca_contribution: float


@dataclass(frozen=True)
class CaTcaComparison:
    """Per-point CA vs TCA contributions on one axis (empty if axis absent)."""

    axis: int
    rows: tuple[PointComparison, ...]
    cols: tuple[PointComparison, ...]
    ca_max_contribution: float
    tca_max_contribution: float

    @property
    def empty(self) -> bool:
        return not self.rows and not self.cols


def compare_ca_tca(
    P: CorrespondenceMatrix,
    axis: int,
    row_labels: tuple[str, ...] | None = None,
    col_labels: tuple[str, ...] | None = None,
) -> CaTcaComparison:
    """Side-by-side CA and TCA contributions on a 1-based axis."""
    if axis < 1:
        raise ValueError("axis must be >= 1")
    n, m = P.shape
    if row_labels is None:
        row_labels = tuple(f"row{i}" for i in range(n))
    if col_labels is None:
        col_labels = tuple(f"col{j}" for j in range(m))
    ca_dec = ca(P, max_axes=axis)
    tca_dec = tca(P, max_axes=axis)
    if ca_dec.n_axes < axis or len(tca_dec.axes) < axis:
        return CaTcaComparison(axis=axis, rows=(), cols=(),
                               ca_max_contribution=0.0, tca_max_contribution=0.0)
    contrib = rc_axis(tca_dec, axis)
    k = axis - 1
    rows = tuple(
        PointComparison(label, float(ca_dec.row_ctr[k, i]), contrib.rc_rows[i])
        for i, label in enumerate(row_labels)
    )
    cols = tuple(
        PointComparison(label, float(ca_dec.col_ctr[k, j]), contrib.rc_cols[j])
        for j, label in enumerate(col_labels)
    )
    all_ca = [p.ca_contribution for p in rows + cols]
    all_tca = [p.tca_contribution for p in rows + cols]
    return CaTcaComparison(
        axis=axis, rows=rows, cols=cols,
        ca_max_contribution=max(all_ca), tca_max_contribution=max(all_tca),
    )
