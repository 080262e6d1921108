"""Univariate dispersion statistics and their gain-function optimality certificates.

Three dispersion measures of a sample: the mean absolute deviation about the
mean ``d``, the population variance/standard deviation ``s2``/``s``, and the
mean absolute deviation about the median (``lad``).  Each maximizes a gain
function over sign vectors (or the unit sphere), and ``d`` equals twice the
cut-norm of the centered sample.  Relative contributions per element quantify
robustness: contributions to ``d`` are bounded by 1/2, contributions to the
variance can approach (but never reach) 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "CENTERING_TOL",
    "HEAVYWEIGHT_TOL",
    "DispersionReport",
    "center",
    "cut_norm_vec",
    "gain_d",
    "gain_lad",
    "gain_s",
    "lad",
    "mad_mean",
    "median",
    "relative_contributions",
    "sign_pm",
    "variance_and_std",
]

CENTERING_TOL = 1e-10
HEAVYWEIGHT_TOL = 1e-10


def sign_pm(x: np.ndarray) -> np.ndarray:
    """Elementwise sign with the convention sign(0) = +1; entries are exactly +-1."""
    return np.where(np.asarray(x, dtype=float) >= 0.0, 1.0, -1.0)


def _as_sample(values: Sequence[float] | np.ndarray) -> np.ndarray:
    y = np.asarray(values, dtype=float)
    if y.ndim != 1:
        y = y.reshape(-1)
    if y.size == 0:
        raise ValueError("empty sample")
    if not np.all(np.isfinite(y)):
        raise ValueError("sample contains non-finite values")
    return y


def mad_mean(values: Sequence[float] | np.ndarray) -> float:
    """Mean absolute deviation about the mean: sum |y_i - mean| / n."""
    y = _as_sample(values)
    return float(np.abs(y - y.mean()).sum() / y.size)


def variance_and_std(values: Sequence[float] | np.ndarray) -> tuple[float, float]:
    """Population variance (divisor n) and standard deviation."""
    y = _as_sample(values)
    s2 = float(((y - y.mean()) ** 2).sum() / y.size)
    return s2, float(np.sqrt(s2))


def median(values: Sequence[float] | np.ndarray) -> float:
    """Sample median; for even n, the midpoint of the two middle order statistics."""
    y = np.sort(_as_sample(values))
    n = y.size
    mid = n // 2
    if n % 2 == 1:
        return float(y[mid])
    return float(0.5 * (y[mid - 1] + y[mid]))


def lad(values: Sequence[float] | np.ndarray) -> float:
    """Mean absolute deviation about the median: sum |y_i - median| / n."""
    y = _as_sample(values)
    return float(np.abs(y - median(y)).sum() / y.size)


def center(values: Sequence[float] | np.ndarray) -> np.ndarray:
    """Centered sample x = y - mean(y); entries sum to zero up to rounding."""
    y = _as_sample(values)
    return y - y.mean()


def _check_centered(x: np.ndarray, tol: float) -> None:
    mass = float(np.abs(x).sum())
    if mass <= tol:
        return
    if abs(float(x.sum())) > tol * mass:
        raise ValueError("not centered")


def cut_norm_vec(
    x: Sequence[float] | np.ndarray, tol: float = CENTERING_TOL
) -> tuple[float, tuple[int, ...]]:
    """Cut-norm of a centered vector: the largest subset sum.

    For a centered x the maximizing subset is exactly the nonnegative entries,
    so the value is computed in closed form.  Returns ``(value, indices)``
    where ``indices`` are the 0-based positions of the maximizing subset.

    Raises:
        ValueError: if x is not centered within ``tol`` (relative to the
            entrywise L1 mass; an all-zero vector is trivially centered).
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.size == 0:
        raise ValueError("empty sample")
    _check_centered(x, tol)
    mask = x >= 0.0
    value = float(x[mask].sum())
    return value, tuple(int(i) for i in np.flatnonzero(mask))


def gain_d(
    x: Sequence[float] | np.ndarray, tol: float = CENTERING_TOL
) -> tuple[float, np.ndarray]:
    """Maximum of x'u/n over sign vectors u, with the maximizing u.

    Equals twice the cut-norm divided by n, hence equals ``mad_mean`` of the
    original sample.  The maximizer puts +1 on nonnegative entries.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    value, _ = cut_norm_vec(x, tol)
    return 2.0 * value / x.size, sign_pm(x)


def gain_lad(values: Sequence[float] | np.ndarray) -> float:
    """Maximum of (y - median 1)'u/n over sign vectors u; equals ``lad``."""
    y = _as_sample(values)
    return float(np.abs(y - median(y)).sum() / y.size)


def gain_s(values: Sequence[float] | np.ndarray) -> float:
    """Maximum of (y - mean 1)'u/sqrt(n) over unit-L2 u; equals the std dev."""
    y = _as_sample(values)
    return float(np.linalg.norm(y - y.mean()) / np.sqrt(y.size))


@dataclass(frozen=True)
class DispersionReport:
    """All three dispersion measures with per-element relative contributions.

    ``rc_*`` lists are empty and ``degenerate`` is True for zero-dispersion
    (constant) samples.  ``heavyweight_indices`` are the elements whose
    contribution to d attains the 1/2 bound.
    """

    d: float
    s: float
    s2: float
    lad: float
    median: float
    mean: float
    rc_d: tuple[float, ...]
    rc_s2: tuple[float, ...]
    rc_lad: tuple[float, ...]
    heavyweight_indices: tuple[int, ...]
    degenerate: bool


def relative_contributions(values: Sequence[float] | np.ndarray) -> DispersionReport:
    """Per-element relative contributions to d, s2 and lad, with heavyweights."""
    y = _as_sample(values)
    n = y.size
    mean_ = float(y.mean())
    med = median(y)
    d = mad_mean(y)
    s2, s = variance_and_std(y)
    lad_ = lad(y)
    if d <= 0.0:
        return DispersionReport(
            d=d, s=s, s2=s2, lad=lad_, median=med, mean=mean_,
            rc_d=(), rc_s2=(), rc_lad=(),
            heavyweight_indices=(), degenerate=True,
        )
    abs_dev = np.abs(y - mean_)
    rc_d = abs_dev / (n * d)
    rc_s2 = abs_dev**2 / (n * s2)
    rc_lad = np.abs(y - med) / (n * lad_)
    heavy = np.flatnonzero(np.abs(rc_d - 0.5) <= HEAVYWEIGHT_TOL)
    return DispersionReport(
        d=d, s=s, s2=s2, lad=lad_, median=med, mean=mean_,
        rc_d=tuple(float(v) for v in rc_d),
        rc_s2=tuple(float(v) for v in rc_s2),
        rc_lad=tuple(float(v) for v in rc_lad),
        heavyweight_indices=tuple(int(i) for i in heavy),
        degenerate=False,
    )
