"""Taxicab matrix norm, taxicab SVD via deflation, and balanced 2-block seriation.

The taxicab norm of a double-centered matrix X is the maximum of v'Xu over
sign vectors u, v.  It equals four times the cut-norm of X, so every computed
axis certifies a row/column bipartition whose four blocks have equal-magnitude
sums.  Repeated rank-1 deflation yields an L1 analogue of the singular value
decomposition; applied to a correspondence matrix this is taxicab
correspondence analysis, with factor scores obtained by dividing the axis
projections by the row/column masses.

Exhaustive search is exact up to ``EXACT_ENUM_LIMIT`` on the smaller matrix
dimension (sign symmetry halves the space); beyond that an alternating
sign-iteration heuristic with deterministic restarts is available.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .dispersion import sign_pm
from .residual import CorrespondenceMatrix, ResidualMatrix, correspondence_residual

__all__ = [
    "EXACT_ENUM_LIMIT",
    "STOP_TOL",
    "AxisContributions",
    "EnumerationBudgetError",
    "SeriationReport",
    "TaxicabAxis",
    "TcaDecomposition",
    "cut_norm_matrix",
    "deflate",
    "norm_exact",
    "norm_heuristic",
    "rc_axis",
    "seriate",
    "tca",
]

EXACT_ENUM_LIMIT = 22
STOP_TOL = 1e-12          # axis cutoff relative to the first dispersion
HEAVYWEIGHT_TOL = 1e-10
INDETERMINATE_TOL = 1e-9  # |projection| below this (relative to delta) has arbitrary sign
_IDENTITY_TOL = 1e-10
_ENUM_BATCH = 1 << 14


class EnumerationBudgetError(ValueError):
    """Requested exhaustive search exceeds the enumeration budget."""


@dataclass(frozen=True)
class TaxicabAxis:
    """One taxicab principal axis.

    ``a = X u`` and ``b = X' v`` are the row/column projections; at output the
    transition identities v = sign(a), u = sign(b) hold exactly under the
    sign(0) = +1 convention, and delta = ||a||_1 = ||b||_1 with sum(a) =
    sum(b) = 0.  ``f``/``g`` are mass-standardized factor scores, set only
    when the axis was computed from a correspondence matrix.  Coordinates
    listed in ``*_indeterminate`` have projections so small that their sign
    is arbitrary.
    """

    delta: float
    u: np.ndarray
    v: np.ndarray
    a: np.ndarray
    b: np.ndarray
    exact: bool
    f: np.ndarray | None = None
    g: np.ndarray | None = None
    u_indeterminate: tuple[int, ...] = ()
    v_indeterminate: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        u = np.asarray(self.u, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if not np.all(np.abs(u) == 1.0) or not np.all(np.abs(v) == 1.0):
            raise ValueError("sign vectors must have entries exactly +-1")
        slack = _IDENTITY_TOL * (1.0 + abs(self.delta))
        a1 = float(np.abs(self.a).sum())
        b1 = float(np.abs(self.b).sum())
        if abs(float(self.a.sum())) > slack or abs(float(self.b.sum())) > slack:
            raise ValueError("axis projections do not sum to zero")
        if abs(a1 - self.delta) > slack or abs(b1 - self.delta) > slack:
            raise ValueError("axis dispersion inconsistent with projections")


@dataclass(frozen=True)
class TcaDecomposition:
    """Ordered taxicab axes of a correspondence matrix.

    ``residuals[k]`` is the double-centered matrix axis k was computed from
    (the deflation history); ``rank_used`` is the number of retained axes.
    """

    axes: tuple[TaxicabAxis, ...]
    row_masses: np.ndarray
    col_masses: np.ndarray
    rank_used: int
    residuals: tuple[ResidualMatrix, ...]


@dataclass(frozen=True)
class SeriationReport:
    """Balanced 2-block seriation certificate for one axis.

    The four block sums over (S,T), (S,T-bar), (S-bar,T), (S-bar,T-bar) come
    out as (+c, -c, -c, +c) with c the cut-norm (= delta/4).  Row and column
    orders sort each sign group by descending score, positive group first.
    """

    s_opt: tuple[int, ...]
    t_opt: tuple[int, ...]
    block_sums: tuple[float, float, float, float]
    cut_norm: float
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]


@dataclass(frozen=True)
class AxisContributions:
    """Relative contributions of rows/columns to one axis, with heavyweights."""

    rc_rows: tuple[float, ...]
    rc_cols: tuple[float, ...]
    heavyweight_rows: tuple[int, ...]
    heavyweight_cols: tuple[int, ...]
    heavyweight_cells: tuple[tuple[int, int], ...]


def _enumerate_best(M: np.ndarray) -> np.ndarray:
    """Maximize ||M s||_1 over sign vectors s with s[0] = +1, exhaustively.

    Candidates are scanned in lexicographic order (+1 before -1), so on ties
    the lexicographically smallest maximizer is returned.
    """
    q = M.shape[1]
    total = 1 << (q - 1)
    shifts = np.arange(q - 2, -1, -1, dtype=np.int64)
    best_val = -np.inf
    best_s: np.ndarray | None = None
    for start in range(0, total, _ENUM_BATCH):
        idx = np.arange(start, min(start + _ENUM_BATCH, total), dtype=np.int64)
        signs = np.empty((idx.size, q), dtype=float)
        signs[:, 0] = 1.0
        if q > 1:
            bits = (idx[:, None] >> shifts[None, :]) & 1
            signs[:, 1:] = 1.0 - 2.0 * bits
        vals = np.abs(M @ signs.T).sum(axis=0)
        j = int(np.argmax(vals))
        if float(vals[j]) > best_val:
            best_val = float(vals[j])
            best_s = signs[j].copy()
    assert best_s is not None
    return best_s


def _transition_fixed_point(
    x: np.ndarray, u0: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, float]:
    """Alternate v = sign(Xu), u = sign(X'v) from u0 until (u, v) repeats.

    The dispersion estimate is non-decreasing along the iteration, so the
    walk terminates at a fixed point of the transition maps (a cycle through
    equal-dispersion states is cut short, keeping the current state).
    """
    u = np.asarray(u0, dtype=float)
    seen = {u.tobytes()}
    delta_prev = -np.inf
    while True:
        a = x @ u
        v = sign_pm(a)
        delta = float(np.abs(a).sum())
        assert delta >= delta_prev - 1e-12 * (1.0 + delta), "dispersion decreased"
        delta_prev = delta
        b = x.T @ v
        u_next = sign_pm(b)
        if np.array_equal(u_next, u):
            return u, v, a, b, delta
        key = u_next.tobytes()
        if key in seen:
            return u, v, a, b, delta
        seen.add(key)
        u = u_next


def _canonical_state(
    x: np.ndarray,
    state: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, float],
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, float]:
    """Flip the axis sign so the largest-magnitude b coordinate is positive."""
    u, v, a, b, delta = state
    if delta <= 0.0:
        return state
    for _ in range(4):
        j = int(np.argmax(np.abs(b)))
        if b[j] >= 0.0:
            break
        flipped = _transition_fixed_point(x, -u)
        if flipped[4] < delta - 1e-12 * (1.0 + delta):
            break
        u, v, a, b, delta = flipped
    return u, v, a, b, delta


def _axis_from_state(
    state: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, float],
    exact: bool,
) -> TaxicabAxis:
    u, v, a, b, delta = state
    if delta > 0.0:
        floor = INDETERMINATE_TOL * delta
        u_ind = tuple(int(j) for j in np.flatnonzero(np.abs(b) <= floor))
        v_ind = tuple(int(i) for i in np.flatnonzero(np.abs(a) <= floor))
    else:
        u_ind = tuple(range(b.size))
        v_ind = tuple(range(a.size))
    return TaxicabAxis(
        delta=delta, u=u, v=v, a=a, b=b, exact=exact,
        u_indeterminate=u_ind, v_indeterminate=v_ind,
    )


def norm_exact(X: ResidualMatrix) -> TaxicabAxis:
    """Globally optimal taxicab norm by exhaustive sign enumeration.

    Enumerates 2^(q-1) sign vectors on the smaller side q = min(n, m); the
    other side follows from the transition formulas.  Requires q <=
    ``EXACT_ENUM_LIMIT``.
    """
    n, m = X.shape
    q = min(n, m)
    if q > EXACT_ENUM_LIMIT:
        raise EnumerationBudgetError(
            f"min dimension {q} exceeds exhaustive budget {EXACT_ENUM_LIMIT}: "
            "use norm_heuristic"
        )
    x = X.x
    if m <= n:
        u0 = _enumerate_best(x)
    else:
        v0 = _enumerate_best(x.T)
        u0 = sign_pm(x.T @ v0)
    state = _transition_fixed_point(x, u0)
    return _axis_from_state(_canonical_state(x, state), exact=True)


def norm_heuristic(X: ResidualMatrix, restarts: str = "columns") -> TaxicabAxis:
    """Taxicab norm lower bound by alternating sign iteration.

    One deterministic restart per column j, seeded with v = sign(column j);
    the best dispersion across restarts wins (first restart on ties).  The
    result is a transition fixed point but not necessarily the global
    optimum.
    """
    if restarts != "columns":
        raise ValueError(f"unknown restart strategy {restarts!r}")
    x = X.x
    best: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, float] | None = None
    for j in range(x.shape[1]):
        v0 = sign_pm(x[:, j])
        u0 = sign_pm(x.T @ v0)
        state = _transition_fixed_point(x, u0)
        if best is None or state[4] > best[4]:
            best = state
    assert best is not None
    return _axis_from_state(_canonical_state(x, best), exact=False)


def _best_axis(X: ResidualMatrix, solver: str = "auto") -> TaxicabAxis:
    if solver == "exact":
        return norm_exact(X)
    if solver == "heuristic":
        return norm_heuristic(X)
    if solver != "auto":
        raise ValueError(f"unknown solver {solver!r}")
    if min(X.shape) <= EXACT_ENUM_LIMIT:
        return norm_exact(X)
    return norm_heuristic(X)


def deflate(X: ResidualMatrix, axis: TaxicabAxis) -> ResidualMatrix:
    """Rank-1 reduction X - a b'/delta; stays double-centered, rank drops by 1."""
    if axis.delta <= 0.0:
        raise ValueError("cannot deflate null axis")
    x = X.x - np.outer(axis.a, axis.b) / axis.delta
    return ResidualMatrix(x=x, kind="deflated",
                          centering_tolerance=X.centering_tolerance)


def tca(
    P: CorrespondenceMatrix, max_axes: int | None = None, solver: str = "auto"
) -> TcaDecomposition:
    """Taxicab correspondence analysis of a correspondence matrix.

    Alternates norm computation (exact within the enumeration budget, else
    heuristic; override with ``solver``) with rank-1 deflation until
    ``max_axes`` axes are found or the dispersion falls below ``STOP_TOL``
    relative to the first axis.  Factor scores f = a / row_masses and
    g = b / col_masses are attached per axis.
    """
    if max_axes is not None and max_axes < 0:
        raise ValueError("max_axes must be nonnegative")
    X = correspondence_residual(P)
    n, m = X.shape
    cap = min(n, m) - 1 if max_axes is None else max_axes
    axes: list[TaxicabAxis] = []
    residuals: list[ResidualMatrix] = []
    delta1: float | None = None
    while len(axes) < cap:
        axis = _best_axis(X, solver)
        if delta1 is None:
            delta1 = axis.delta
        # P has total 1, so deltas at the double-precision floor are rank exhaustion
        if axis.delta <= STOP_TOL or axis.delta < STOP_TOL * delta1:
            break
        axis = replace(axis, f=axis.a / P.row_masses, g=axis.b / P.col_masses)
        axes.append(axis)
        residuals.append(X)
        if len(axes) < cap:
            X = deflate(X, axis)
    return TcaDecomposition(
        axes=tuple(axes),
        row_masses=P.row_masses,
        col_masses=P.col_masses,
        rank_used=len(axes),
        residuals=tuple(residuals),
    )


def _grouped_order(signs: np.ndarray, scores: np.ndarray) -> tuple[int, ...]:
    pos = np.flatnonzero(signs > 0)
    neg = np.flatnonzero(signs < 0)
    pos = pos[np.argsort(-scores[pos], kind="stable")]
    neg = neg[np.argsort(-scores[neg], kind="stable")]
    return tuple(int(i) for i in np.concatenate([pos, neg]))


def _seriation_from_axis(
    X: ResidualMatrix,
    axis: TaxicabAxis,
    row_scores: np.ndarray | None = None,
    col_scores: np.ndarray | None = None,
) -> SeriationReport:
    x = X.x
    s_mask = axis.v > 0
    t_mask = axis.u > 0
    b_st = float(x[np.ix_(s_mask, t_mask)].sum())
    b_st_c = float(x[np.ix_(s_mask, ~t_mask)].sum())
    b_sc_t = float(x[np.ix_(~s_mask, t_mask)].sum())
    b_sc_tc = float(x[np.ix_(~s_mask, ~t_mask)].sum())
    rs = axis.a if row_scores is None else row_scores
    cs = axis.b if col_scores is None else col_scores
    return SeriationReport(
        s_opt=tuple(int(i) for i in np.flatnonzero(s_mask)),
        t_opt=tuple(int(j) for j in np.flatnonzero(t_mask)),
        block_sums=(b_st, b_st_c, b_sc_t, b_sc_tc),
        cut_norm=b_st,
        row_order=_grouped_order(axis.v, rs),
        col_order=_grouped_order(axis.u, cs),
    )


def cut_norm_matrix(X: ResidualMatrix) -> SeriationReport:
    """Cut-norm of a double-centered matrix with its 4-block certificate.

    S and T are the positive-sign index sets of the optimal axis; the four
    block sums are (+c, -c, -c, +c) with c = cut_norm = delta/4.
    """
    axis = _best_axis(X)
    report = _seriation_from_axis(X, axis)
    slack = _IDENTITY_TOL * (1.0 + axis.delta)
    assert abs(report.cut_norm - axis.delta / 4.0) <= slack
    return report


def rc_axis(decomposition: TcaDecomposition, axis_index: int) -> AxisContributions:
    """Relative contributions |a|/delta, |b|/delta for 1-based axis ``axis_index``.

    Each contribution is at most 1/2; rows/columns attaining the bound are
    heavyweights, and a cell is heavyweight (contributing exactly 1/4) when
    both its row and column are.
    """
    axes = decomposition.axes
    if not 1 <= axis_index <= len(axes):
        raise ValueError(f"axis {axis_index} not computed")
    axis = axes[axis_index - 1]
    rc_rows = np.abs(axis.a) / axis.delta
    rc_cols = np.abs(axis.b) / axis.delta
    heavy_rows = tuple(int(i) for i in np.flatnonzero(np.abs(rc_rows - 0.5) <= HEAVYWEIGHT_TOL))
    heavy_cols = tuple(int(j) for j in np.flatnonzero(np.abs(rc_cols - 0.5) <= HEAVYWEIGHT_TOL))
    cells = tuple((i, j) for i in heavy_rows for j in heavy_cols)
    return AxisContributions(
        rc_rows=tuple(float(r) for r in rc_rows),
        rc_cols=tuple(float(c) for c in rc_cols),
        heavyweight_rows=heavy_rows,
        heavyweight_cols=heavy_cols,
        heavyweight_cells=cells,
    )


def seriate(decomposition: TcaDecomposition, axis_index: int) -> SeriationReport:
    """Seriation report for 1-based axis ``axis_index`` of a decomposition.

    Rows are ordered by descending factor score within v-sign groups
    (positive group first), columns likewise within u-sign groups.  An empty
    decomposition yields a degenerate all-empty report for axis 1.
    """
    axes = decomposition.axes
    if not axes and axis_index == 1:
        return SeriationReport(
            s_opt=(), t_opt=(), block_sums=(0.0, 0.0, 0.0, 0.0),
            cut_norm=0.0, row_order=(), col_order=(),
        )
    if not 1 <= axis_index <= len(axes):
        raise ValueError(f"axis {axis_index} not computed")
    axis = axes[axis_index - 1]
    return _seriation_from_axis(
        decomposition.residuals[axis_index - 1], axis,
        row_scores=axis.f, col_scores=axis.g,
    )
