"""Independent brute-force oracles for the test suite.

Everything here enumerates exhaustively with its own code paths (itertools
products of raw sign choices, full subset lattices, recursive partition
generation) so it shares no logic with the library implementations it checks.
"""

from __future__ import annotations

import itertools

import numpy as np


def all_sign_vectors(q: int) -> np.ndarray:
    """All 2^q sign vectors as a (2^q, q) array."""
    return np.array(list(itertools.product((1.0, -1.0), repeat=q)))


def brute_cut_norm_vec(x: np.ndarray) -> float:
    """Max subset sum over all 2^n subsets."""
    x = np.asarray(x, dtype=float)
    best = -np.inf
    for r in range(x.size + 1):
        for subset in itertools.combinations(range(x.size), r):
            best = max(best, float(x[list(subset)].sum()))
    return best


def brute_gain_d(x: np.ndarray) -> float:
    """Max of x'u/n over all sign vectors."""
    x = np.asarray(x, dtype=float)
    vals = all_sign_vectors(x.size) @ x
    return float(vals.max()) / x.size


def brute_matrix_norm(x: np.ndarray) -> float:
    """Max of ||X u||_1 over all 2^m sign vectors (no symmetry shortcuts)."""
    x = np.asarray(x, dtype=float)
    signs = all_sign_vectors(x.shape[1])
    return float(np.abs(x @ signs.T).sum(axis=0).max())


def brute_cut_norm_matrix(x: np.ndarray) -> float:
    """Max submatrix sum over all 2^n x 2^m subset pairs."""
    x = np.asarray(x, dtype=float)
    n, m = x.shape
    rows = np.array(list(itertools.product((0.0, 1.0), repeat=n)))
    cols = np.array(list(itertools.product((0.0, 1.0), repeat=m)))
    vals = rows @ x @ cols.T
    return float(vals.max())


def brute_tensor_norm(x: np.ndarray) -> float:
    """Max trilinear form over all 2^(n+m+t) sign assignments."""
    x = np.asarray(x, dtype=float)
    n, m, t = x.shape
    su = all_sign_vectors(n)
    sv = all_sign_vectors(m)
    sw = all_sign_vectors(t)
    contracted = np.einsum("ai,ijk->ajk", su, x)
    contracted = np.einsum("bj,ajk->abk", sv, contracted)
    vals = np.einsum("ck,abk->abc", sw, contracted)
    return float(vals.max())


def partitions_exact(n: int, r: int):
    """All set partitions of range(n) into exactly r labeled-by-order blocks."""
    if r > n:
        return
    if n == 0:
        if r == 0:
            yield []
        return

    def rec(i: int, blocks: list[list[int]]):
        if i == n:
            if len(blocks) == r:
                yield [list(b) for b in blocks]
            return
        if len(blocks) + (n - i) < r:
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < r:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


def brute_two_mode_best(x: np.ndarray, r: int, c: int, p: float) -> float:
    """Max overall interaction over all r x c set-partition pairs."""
    x = np.asarray(x, dtype=float)
    n, m = x.shape
    best = -np.inf
    for row_blocks in partitions_exact(n, r):
        for col_blocks in partitions_exact(m, c):
            total = 0.0
            for S in row_blocks:
                for T in col_blocks:
                    size = len(S) * len(T)
                    block = float(x[np.ix_(S, T)].sum())
                    total += size * (abs(block) / size) ** p
            best = max(best, total)
    return best


def random_double_centered(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    """Additively double-center an i.i.d. normal matrix (independent of the library)."""
    y = rng.normal(size=(n, m))
    return y - y.mean(axis=1, keepdims=True) - y.mean(axis=0, keepdims=True) + y.mean()


def random_triple_centered(
    rng: np.random.Generator, n: int, m: int, t: int
) -> np.ndarray:
    """Triple-center an i.i.d. normal array by sweeping out means directly."""
    y = rng.normal(size=(n, m, t))
    return (
        y
        - y.mean(axis=2, keepdims=True)
        - y.mean(axis=1, keepdims=True)
        - y.mean(axis=0, keepdims=True)
        + y.mean(axis=(1, 2), keepdims=True)
        + y.mean(axis=(0, 2), keepdims=True)
        + y.mean(axis=(0, 1), keepdims=True)
        - y.mean()
    )
