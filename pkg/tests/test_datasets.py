from __future__ import annotations

import numpy as np

from taxicab_ca.datasets import DATASETS, dataset_bytes, load_dataset


class TestAsbestos:
    def test_shape_and_total(self, asbestos):
        assert asbestos.shape == (5, 4)
        assert asbestos.total == 1117

    def test_margins(self, asbestos):
        np.testing.assert_allclose(asbestos.values.sum(axis=0), [575, 366, 126, 50])
        np.testing.assert_allclose(asbestos.values.sum(axis=1), [346, 379, 77, 194, 121])

    def test_labels(self, asbestos):
        assert asbestos.col_labels == ("G0", "G1", "G2", "G3")
        assert asbestos.row_labels == ("0-9", "10-19", "20-29", "30-39", "40+")


class TestAmericas:
    def test_shape_and_total(self, americas):
        assert americas.shape == (22, 15)
        # the printed 0/1 body sums to 148 and is what reproduces the
        # published contribution values; the table's margin row claims 149
        assert americas.total == 148

    def test_binary(self, americas):
        assert set(np.unique(americas.values)) == {0.0, 1.0}

    def test_column_sums(self, americas):
        np.testing.assert_allclose(
            americas.values.sum(axis=0),
            [12, 11, 8, 5, 2, 16, 11, 3, 22, 4, 3, 22, 3, 6, 20],
        )

    def test_canada_us_identical_profiles(self, americas):
        i_ca = americas.row_labels.index("Canada")
        i_us = americas.row_labels.index("UnitedStates")
        np.testing.assert_array_equal(americas.values[i_ca], americas.values[i_us])

    def test_nafta_members(self, americas):
        j = americas.col_labels.index("NAFTA")
        members = {americas.row_labels[i] for i in np.flatnonzero(americas.values[:, j])}
        assert members == {"Canada", "Mexico", "UnitedStates"}


class TestRegistry:
    def test_names(self):
        assert set(DATASETS) == {"asbestos", "americas"}

    def test_bytes_stable(self):
        assert dataset_bytes("asbestos") == dataset_bytes("asbestos")

    def test_unknown(self):
        import pytest

        with pytest.raises(ValueError, match="unknown dataset"):
            load_dataset("nonesuch")
