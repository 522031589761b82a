"""Tests for the eigen oracle: Jacobi, shifted QR, spectrum quantities and hulls."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import ContractError, DimensionError
from modules.matrix.matrix import ComplexMatrix
from modules.oracle.hull import convex_hull, distance_to_hull, max_distance
from modules.oracle.jacobi import eig_hermitian, jacobi_diagonalize
from modules.oracle.models import ASCENDING, RE_DESC_IM_DESC
from modules.oracle.qr import eig_general, hessenberg
from modules.oracle.spectrum import (
    OPPOSED,
    SAME,
    eig_down,
    eig_up,
    max_pairwise_eig_distance,
    ordered_eig_distance,
    spectral_norm,
    spectral_norm_agreement,
    spectrum_of,
    spread,
    weyl_interval,
)
from tests.conftest import random_complex, random_hermitian


# === Jacobi ===

class TestJacobi:
    """Hermitian eigensolver."""

    def test_worked_example_spectrum(self, worked_example):
        s = eig_hermitian(worked_example)
        expected = [0.0, (5 - math.sqrt(17)) / 2, (5 + math.sqrt(17)) / 2]
        np.testing.assert_allclose(s.real_values(), expected, atol=1e-12)
        assert s.ordering_key == ASCENDING
        assert s.is_real

    def test_complex_hermitian_matches_reference(self, hermitian_3):
        s = eig_hermitian(hermitian_3)
        np.testing.assert_allclose(s.real_values(), np.linalg.eigvalsh(hermitian_3.entries), atol=1e-12)

    def test_residual_certificate(self, rng):
        A = random_hermitian(rng, 8)
        s = eig_hermitian(A)
        assert s.max_residual <= 1e-10 * A.scale()
        v = s.vectors
        np.testing.assert_allclose(v.conj().T @ v, np.eye(8), atol=1e-12)

    def test_rejects_non_hermitian(self, nilpotent_2):
        with pytest.raises(ContractError):
            eig_hermitian(nilpotent_2)

    def test_one_by_one(self):
        assert eig_hermitian(ComplexMatrix([[3.5]])).real_values()[0] == 3.5

    def test_zero_matrix(self):
        s = eig_hermitian(ComplexMatrix(np.zeros((3, 3))))
        assert np.all(s.real_values() == 0)

    def test_repeated_eigenvalues(self):
        s = eig_hermitian(ComplexMatrix.identity(4) * 2)
        np.testing.assert_allclose(s.real_values(), [2, 2, 2, 2])

    def test_warm_start_same_values(self, rng):
        A = random_hermitian(rng, 5)
        cold = eig_hermitian(A)
        warm = eig_hermitian(A, cold.vectors)
        np.testing.assert_allclose(cold.real_values(), warm.real_values(), atol=1e-12)

    def test_diagonal_needs_no_sweeps(self):
        _, _, sweeps = jacobi_diagonalize(np.diag([3.0, 1.0, 2.0]).astype(complex))
        assert sweeps == 0

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 7), st.integers(0, 2 ** 32 - 1))
    def test_matches_numpy_on_random(self, n, seed):
        A = random_hermitian(np.random.default_rng(seed), n)
        np.testing.assert_allclose(
            eig_hermitian(A).real_values(), np.linalg.eigvalsh(A.entries), atol=1e-9 * A.scale()
        )

    def test_certificate_holds_across_sizes(self):
        rng = np.random.default_rng(2024)
        for trial in range(200):
            n = 2 + trial % 31
            A = random_hermitian(rng, n)
            s = eig_hermitian(A)
            assert s.max_residual <= 1e-10 * A.scale(), f"trial {trial}, n={n}"


# === Shifted QR ===

class TestShiftedQR:
    """General complex eigensolver."""

    def test_hessenberg_form(self, rng):
        a = random_complex(rng, 6).entries
        h, q = hessenberg(a)
        assert np.allclose(np.tril(h, -2), 0)
        np.testing.assert_allclose(q @ h @ q.conj().T, a, atol=1e-12)

    def test_ordering(self):
        s = eig_general(ComplexMatrix.diag([1j, 2, -1j, 2 + 1j]))
        assert s.ordering_key == RE_DESC_IM_DESC
        assert list(s.values) == pytest.approx([2 + 1j, 2, 1j, -1j])

    def test_nilpotent(self, nilpotent_2):
        s = eig_general(nilpotent_2)
        np.testing.assert_allclose(s.as_array(), [0, 0], atol=1e-12)

    def test_rotation_has_imaginary_spectrum(self):
        s = eig_general(ComplexMatrix([[0, -1], [1, 0]]))
        values = sorted(s.values, key=lambda z: z.imag)
        assert values == pytest.approx([-1j, 1j])

    def test_rejects_large_n(self):
        with pytest.raises(DimensionError):
            eig_general(ComplexMatrix.identity(65))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 32 - 1))
    def test_matches_numpy_on_random(self, n, seed):
        A = random_complex(np.random.default_rng(seed), n)
        s = eig_general(A)
        assert s.max_residual <= 1e-10 * A.scale()
        ref = np.linalg.eigvals(A.entries)
        gaps = np.abs(s.as_array()[:, None] - ref[None, :])
        assert gaps.min(axis=1).max() <= 1e-8 * A.scale()
        assert gaps.min(axis=0).max() <= 1e-8 * A.scale()

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 10), st.integers(0, 2 ** 32 - 1))
    def test_agrees_with_jacobi_on_hermitian(self, n, seed):
        A = random_hermitian(np.random.default_rng(seed), n)
        qr_values = np.sort(eig_general(A).as_array().real)
        np.testing.assert_allclose(qr_values, eig_hermitian(A).real_values(), atol=1e-8 * A.scale())


# === Spectrum quantities ===

class TestSpectrumQuantities:
    """Orderings, norms, spread and distances."""

    def test_spectrum_of_dispatch(self, worked_example, nilpotent_2):
        assert spectrum_of(worked_example).ordering_key == ASCENDING
        assert spectrum_of(nilpotent_2).ordering_key == RE_DESC_IM_DESC

    def test_down_up_orders(self):
        s = eig_hermitian(ComplexMatrix.diag([2, -1, 5]))
        assert eig_down(s) == [5, 2, -1]
        assert eig_up(s) == [-1, 2, 5]

    def test_down_rejects_complex(self):
        with pytest.raises(ContractError):
            eig_down(eig_general(ComplexMatrix.diag([1j, 1])))

    def test_spread_worked_example(self, worked_example):
        assert spread(eig_hermitian(worked_example)) == pytest.approx((5 + math.sqrt(17)) / 2, abs=1e-12)

    def test_spread_complex(self):
        assert spread(eig_general(ComplexMatrix.diag([1j, -1j, 0]))) == pytest.approx(2.0)

    def test_spectral_norm_paths_agree(self, hermitian_3):
        assert spectral_norm_agreement(hermitian_3) < 1e-10
        assert spectral_norm(hermitian_3) == pytest.approx(np.linalg.norm(hermitian_3.entries, 2), abs=1e-10)

    def test_spectral_norm_non_hermitian(self, rng):
        A = random_complex(rng, 5)
        assert spectral_norm(A) == pytest.approx(np.linalg.norm(A.entries, 2), rel=1e-10)

    def test_spectral_norm_hermitian_path_rejects(self, nilpotent_2):
        with pytest.raises(ContractError):
            spectral_norm(nilpotent_2, "hermitian")

    def test_spectral_norm_unknown_method(self, hermitian_3):
        with pytest.raises(ContractError):
            spectral_norm(hermitian_3, "svd")

    def test_max_pairwise_distance(self):
        sa = eig_hermitian(ComplexMatrix.diag([0, 1]))
        sb = eig_hermitian(ComplexMatrix.diag([3, 4]))
        assert max_pairwise_eig_distance(sa, sb) == 4.0

    def test_ordered_distance_modes(self):
        A = ComplexMatrix.diag([1, 2, 3])
        B = ComplexMatrix.diag([0, 0, 1])
        assert ordered_eig_distance(A, B, SAME) == pytest.approx(2.0)
        assert ordered_eig_distance(A, B, OPPOSED) == pytest.approx(3.0)
        with pytest.raises(ContractError):
            ordered_eig_distance(A, B, "sideways")

    def test_ordered_distance_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            ordered_eig_distance(ComplexMatrix.identity(2), ComplexMatrix.identity(3), SAME)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 6), st.integers(0, 2 ** 32 - 1))
    def test_weyl_interval_brackets_norm(self, n, seed):
        rng = np.random.default_rng(seed)
        A, B = random_hermitian(rng, n), random_hermitian(rng, n)
        lower, upper = weyl_interval(A, B)
        norm = spectral_norm(A - B)
        assert lower <= norm + 1e-9
        assert norm <= upper + 1e-9


# === Convex hull ===

class TestHull:
    """Monotone-chain hull and point distance."""

    def test_square_with_interior_point(self):
        hull = convex_hull([0, 1, 1 + 1j, 1j, 0.5 + 0.5j])
        assert len(hull) == 4
        assert 0.5 + 0.5j not in hull

    def test_degenerate_inputs(self):
        assert convex_hull([1 + 1j, 1 + 1j]) == [1 + 1j]
        assert len(convex_hull([0, 1, 2])) == 2

    def test_distance_inside_and_outside(self):
        hull = convex_hull([0, 2, 2 + 2j, 2j])
        assert distance_to_hull(1 + 1j, hull) == 0.0
        assert distance_to_hull(3 + 1j, hull) == pytest.approx(1.0)
        assert distance_to_hull(3 + 3j, hull) == pytest.approx(math.sqrt(2))

    def test_distance_to_segment_and_point(self):
        assert distance_to_hull(1j, [0, 2]) == pytest.approx(1.0)
        assert distance_to_hull(3, [0]) == 3.0

    def test_max_distance(self):
        assert max_distance([0, 1], [3j]) == pytest.approx(math.sqrt(10))
