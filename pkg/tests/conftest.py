from __future__ import annotations

import numpy as np
import pytest

from taxicab_ca.datasets import load_dataset
from taxicab_ca.residual import from_counts


@pytest.fixture(scope="session")
def asbestos():
    return load_dataset("asbestos")


@pytest.fixture(scope="session")
def americas():
    return load_dataset("americas")


@pytest.fixture(scope="session")
def asbestos_P(asbestos):
    return from_counts(asbestos.values)


@pytest.fixture(scope="session")
def americas_P(americas):
    return from_counts(americas.values)


def assert_match_up_to_sign(computed, expected, atol):
    """Assert two vectors agree within atol after the best global sign flip."""
    computed = np.asarray(computed, dtype=float)
    expected = np.asarray(expected, dtype=float)
    direct = np.max(np.abs(computed - expected))
    flipped = np.max(np.abs(computed + expected))
    assert min(direct, flipped) <= atol, (
        f"no global sign aligns within {atol}: direct={direct}, flipped={flipped}"
    )


def align_sign(computed, expected):
    """Return +-1 making computed best match expected."""
    computed = np.asarray(computed, dtype=float)
    expected = np.asarray(expected, dtype=float)
    return 1.0 if float(computed @ expected) >= 0.0 else -1.0
