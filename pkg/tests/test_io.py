from __future__ import annotations

import numpy as np
import pytest

from taxicab_ca.io import (
    format_tensor,
    load_counts_csv,
    load_tensor,
    parse_counts_csv,
    parse_tensor,
)
from taxicab_ca.reports import AnalysisReport


class TestCountsCsv:
    def test_single_cell(self):
        data = parse_counts_csv("x\nr,5")
        assert data.shape == (1, 1)
        assert data.values[0, 0] == 5.0
        assert data.row_labels == ("r",)
        assert data.col_labels == ("x",)

    def test_asbestos_file(self, asbestos):
        assert asbestos.shape == (5, 4)
        assert asbestos.total == 1117

    def test_load_from_path(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("a,b\nr1,1,2\nr2,3,4\n")
        data = load_counts_csv(path)
        np.testing.assert_allclose(data.values, [[1, 2], [3, 4]])

    def test_ragged_row_positional(self):
        with pytest.raises(ValueError, match="row 3 has 2 cells, expected 3"):
            parse_counts_csv("a,b\nr1,1,2\nr2,1")

    def test_negative_cell_positional(self):
        with pytest.raises(ValueError, match="negative cell at row 2, column 'b'"):
            parse_counts_csv("a,b\nr1,1,-2")

    def test_non_numeric_positional(self):
        with pytest.raises(ValueError, match="non-numeric cell 'oops' at row 3"):
            parse_counts_csv("a,b\nr1,1,2\nr2,oops,4")

    def test_duplicate_row_labels(self):
        with pytest.raises(ValueError, match="duplicate row labels"):
            parse_counts_csv("a\nr1,1\nr1,2")

    def test_duplicate_col_labels(self):
        with pytest.raises(ValueError, match="duplicate column labels"):
            parse_counts_csv("a,a\nr1,1,2")

    def test_empty(self):
        with pytest.raises(ValueError, match="empty CSV"):
            parse_counts_csv("")

    def test_header_only(self):
        with pytest.raises(ValueError, match="no data rows"):
            parse_counts_csv("a,b\n")


class TestTensorFormat:
    def test_scalar(self):
        x = parse_tensor("1 1 1\n5\n")
        assert x.shape == (1, 1, 1)
        assert x[0, 0, 0] == 5.0

    def test_round_trip_sign_tensor(self):
        s = np.array([1.0, -1.0])
        x = np.einsum("i,j,k->ijk", s, s, s)
        again = parse_tensor(format_tensor(x))
        np.testing.assert_array_equal(again, x)

    def test_round_trip_random(self):
        rng = np.random.default_rng(51)
        x = rng.normal(size=(3, 4, 2))
        np.testing.assert_array_equal(parse_tensor(format_tensor(x)), x)

    def test_slab_order(self):
        # slabs are third-mode-major: line 1 + k*n + i holds x[i, :, k]
        text = "2 2 2\n1 2\n3 4\n5 6\n7 8\n"
        x = parse_tensor(text)
        np.testing.assert_allclose(x[:, :, 0], [[1, 2], [3, 4]])
        np.testing.assert_allclose(x[:, :, 1], [[5, 6], [7, 8]])

    def test_load_from_path(self, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("1 2 1\n3 4\n")
        np.testing.assert_allclose(load_tensor(path), [[[3.0], [4.0]]])

    def test_malformed_dims(self):
        with pytest.raises(ValueError, match="three dimensions"):
            parse_tensor("2 2\n1 2\n")
        with pytest.raises(ValueError, match="non-integer dimension"):
            parse_tensor("a 2 2\n")
        with pytest.raises(ValueError, match="must be positive"):
            parse_tensor("0 2 2\n")

    def test_wrong_line_count(self):
        with pytest.raises(ValueError, match="expected 4 data lines, found 3"):
            parse_tensor("2 2 2\n1 2\n3 4\n5 6\n")

    def test_wrong_cell_count(self):
        with pytest.raises(ValueError, match="line 3 has 1 values, expected 2"):
            parse_tensor("2 2 1\n1 2\n3\n")

    def test_non_numeric(self):
        with pytest.raises(ValueError, match="non-numeric value 'x' at line 2"):
            parse_tensor("1 2 1\nx 2\n")


class TestReportRoundTrip:
    def test_identity(self):
        report = AnalysisReport(
            method="tca",
            inputs={"dataset": "demo", "shape": [2, 2]},
            provenance={"sha256": "00", "solver": "auto",
                        "tolerances": {"centering": 1e-10}},
            results={"axes": [{"axis": 1, "delta": 0.123456789012345678}]},
        )
        text = report.to_json()
        again = AnalysisReport.from_json(text)
        assert again == report
        assert again.to_json() == text

    def test_full_float_precision(self):
        value = 0.1 + 0.2  # not representable; repr must round-trip
        report = AnalysisReport(method="ca", inputs={}, provenance={},
                                results={"v": value})
        again = AnalysisReport.from_json(report.to_json())
        assert again.results["v"] == value
