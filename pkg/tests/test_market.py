"""Tests for Matrix Market parsing and serialization."""

import numpy as np
import pytest

from core.errors import MatrixMarketError
from modules.matrix.market import (
    parse_matrix_market,
    read_matrix_market,
    serialize_matrix_market,
    write_matrix_market,
)
from modules.matrix.matrix import ComplexMatrix, classify


# === Parsing ===

class TestParseArray:
    """Dense array format."""

    def test_real_general_is_column_major(self):
        text = "%%MatrixMarket matrix array real general\n2 2\n1\n3\n2\n4\n"
        A = parse_matrix_market(text)
        np.testing.assert_array_equal(A.entries, [[1, 2], [3, 4]])

    def test_complex_general(self):
        text = "%%MatrixMarket matrix array complex general\n% comment\n1 1\n1.5 -2\n"
        assert parse_matrix_market(text)[0, 0] == 1.5 - 2j

    def test_symmetric_lower_triangle(self):
        text = "%%MatrixMarket matrix array real symmetric\n2 2\n1\n5\n2\n"
        A = parse_matrix_market(text)
        np.testing.assert_array_equal(A.entries, [[1, 5], [5, 2]])

    def test_hermitian_mirrors_conjugate(self):
        text = "%%MatrixMarket matrix array complex hermitian\n2 2\n1 0\n2 3\n4 0\n"
        A = parse_matrix_market(text)
        assert A[1, 0] == 2 + 3j
        assert A[0, 1] == 2 - 3j

    def test_integer_field(self):
        text = "%%MatrixMarket matrix array integer general\n1 1\n7\n"
        assert parse_matrix_market(text)[0, 0] == 7


class TestParseCoordinate:
    """Sparse coordinate format, expanded to dense."""

    def test_coordinate_general(self):
        text = "%%MatrixMarket matrix coordinate real general\n3 3 2\n1 1 4\n3 2 -1\n"
        A = parse_matrix_market(text)
        assert A[0, 0] == 4 and A[2, 1] == -1 and A[1, 1] == 0

    def test_coordinate_hermitian(self):
        text = "%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1 0\n2 1 0 1\n"
        A = parse_matrix_market(text)
        assert A[1, 0] == 1j and A[0, 1] == -1j


class TestParseErrors:
    """Malformed input names the offending line."""

    def test_bad_header(self):
        with pytest.raises(MatrixMarketError) as exc:
            parse_matrix_market("%%NotMatrixMarket matrix array real general\n1 1\n1\n")
        assert exc.value.line_number == 1

    def test_non_square(self):
        with pytest.raises(MatrixMarketError) as exc:
            parse_matrix_market("%%MatrixMarket matrix array real general\n% c\n2 3\n")
        assert exc.value.line_number == 3

    def test_bad_value(self):
        with pytest.raises(MatrixMarketError) as exc:
            parse_matrix_market("%%MatrixMarket matrix array real general\n1 1\nabc\n")
        assert exc.value.line_number == 3
        assert "line 3" in str(exc.value)

    def test_too_few_entries(self):
        with pytest.raises(MatrixMarketError):
            parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n2\n")

    def test_too_many_entries(self):
        with pytest.raises(MatrixMarketError) as exc:
            parse_matrix_market("%%MatrixMarket matrix array real general\n1 1\n1\n2\n")
        assert exc.value.line_number == 4

    def test_out_of_range_index(self):
        with pytest.raises(MatrixMarketError) as exc:
            parse_matrix_market("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n")
        assert exc.value.line_number == 3

    def test_duplicate_entry(self):
        text = "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n1 1 2\n"
        with pytest.raises(MatrixMarketError) as exc:
            parse_matrix_market(text)
        assert exc.value.line_number == 4
        assert "line 3" in str(exc.value)

    def test_upper_triangle_in_symmetric(self):
        text = "%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n1 2 1\n"
        with pytest.raises(MatrixMarketError):
            parse_matrix_market(text)

    def test_wrong_token_count_for_complex(self):
        with pytest.raises(MatrixMarketError):
            parse_matrix_market("%%MatrixMarket matrix array complex general\n1 1\n1\n")

    def test_empty_input(self):
        with pytest.raises(MatrixMarketError):
            parse_matrix_market("")

    def test_non_finite_names_entry_line(self):
        text = "%%MatrixMarket matrix array real general\n2 2\n1\ninf\n2\n4\n"
        with pytest.raises(MatrixMarketError, match="line 4"):
            parse_matrix_market(text)

    def test_non_utf8_file(self, tmp_path):
        path = tmp_path / "latin1.mtx"
        path.write_bytes(b"%%MatrixMarket matrix array real general\n1 1\n\xe9\n")
        with pytest.raises(MatrixMarketError, match="line 3"):
            read_matrix_market(path)


# === Serialization ===

class TestSerialize:
    """Writer output parses back to the same matrix."""

    def test_round_trip_exact(self, rng):
        A = ComplexMatrix(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        B = parse_matrix_market(serialize_matrix_market(A))
        np.testing.assert_array_equal(A.entries, B.entries)
        assert A.digest() == B.digest()

    def test_header(self):
        text = serialize_matrix_market(ComplexMatrix.identity(2))
        assert text.splitlines()[0] == "%%MatrixMarket matrix array complex general"
        assert text.splitlines()[1] == "2 2"

    def test_write_and_read_file(self, tmp_path, worked_example):
        path = write_matrix_market(worked_example, tmp_path / "sub" / "a.mtx")
        assert read_matrix_market(path).allclose(worked_example)

    def test_non_symmetric_round_trip(self, tmp_path, nilpotent_2):
        B = read_matrix_market(write_matrix_market(nilpotent_2, tmp_path / "n.mtx"))
        np.testing.assert_array_equal(B.entries, [[0, 1], [0, 0]])
        assert not classify(B).is_hermitian
