"""Tests for the bound estimators on fixed instances with known values."""

import math

import numpy as np
import pytest

from core.errors import ContractError, DimensionError
from modules.bounds.condition import det_ratio_bounds
from modules.bounds.perturbation import (
    bound_cor24,
    bound_cor25,
    bound_diag_pair,
    bound_diag_refinement,
    bound_eq25,
    bound_index_sets,
    bound_mean_vs_pairdiag,
    bound_mirsky_diag,
    bound_mirsky_pair,
    bound_offdiag_split,
    bound_reim_split,
    bound_thm21,
    bound_thm21_catalog,
    bound_thm22,
    bound_weyl,
    default_index_family,
)
from modules.bounds.result import LOWER, UPPER, inapplicable, make_result
from modules.bounds.spread import spread_lower_functional, spread_lower_normal, spread_refined_thm32
from modules.bounds.variance import bound_bhatia_davis, bound_cor31, bound_thm34
from modules.matrix.matrix import ComplexMatrix, SpectralInterval, diagonal_part
from modules.pulm.functionals import PulFunctional
from modules.pulm.maps import PulMap

SPD_A3 = (5 + math.sqrt(17)) / 2           # 4.56155
CENTERED_NORM_A3 = SPD_A3 - 5 / 3          # 2.89489
TOL = 1e-9


@pytest.fixture
def A3(worked_example):
    return worked_example


@pytest.fixture
def D3(worked_example):
    return diagonal_part(worked_example)


# === BoundResult ===

class TestBoundResult:
    """Slack direction and the holds() contract."""

    def test_lower_slack(self):
        r = make_result("eq2.7", 1.0, 3.0, LOWER, "x")
        assert r.slack == 2.0 and r.holds()

    def test_upper_slack(self):
        r = make_result("eq1.1", 1.0, 3.0, UPPER, "x")
        assert r.slack == -2.0 and not r.holds()

    def test_tolerance_scales_with_exact(self):
        r = make_result("eq2.7", 1000.0 + 1e-6, 1000.0, LOWER, "x")
        assert r.holds()

    def test_failed_check_is_violation(self):
        r = make_result("thm3.2", 1.0, 2.0, LOWER, "x", checks={"middle_ge_right": -0.5})
        assert not r.holds()

    def test_inapplicable_always_holds(self):
        r = inapplicable("thm3.4", "premise fails", "x")
        assert r.holds() and not r.applicable and r.reason == "premise fails"

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            make_result("eq2.7", float("nan"), 1.0, LOWER, "x")

    def test_dict_field_order(self):
        keys = list(make_result("eq2.7", 0.0, 1.0, LOWER, "x").to_dict())
        assert keys[:5] == ["name", "bound", "exact", "slack", "direction"]


# === Functional-pair bounds ===

class TestThm21:
    """|phi1(A) - phi2(B)| <= s(W(A), W(B))."""

    def test_identical_functionals(self, A3):
        r = bound_thm21(A3, A3, PulFunctional.diag(1, 3), PulFunctional.diag(1, 3))
        assert r.bound == pytest.approx(0.0)
        assert r.exact == pytest.approx(SPD_A3)

    def test_against_diagonal(self, A3, D3):
        r = bound_thm21(A3, D3, PulFunctional.diag(3, 3), PulFunctional.diag(1, 3))
        assert r.bound == pytest.approx(1.0)
        assert r.exact == pytest.approx(SPD_A3 - 1)
        assert r.aux["exact_kind"] == "max_pairwise_eig_distance"

    def test_mean_vs_diag(self, A3):
        r = bound_thm21(A3, A3, PulFunctional.mean_all(3), PulFunctional.diag(3, 3))
        assert r.bound == pytest.approx(10 / 3)
        assert r.holds()

    def test_catalog_maximum(self, A3):
        r = bound_thm21_catalog(A3, A3)
        assert r.bound >= 10 / 3 - TOL
        assert r.holds()

    def test_non_normal_uses_numerical_range(self, nilpotent_2):
        r = bound_thm21(nilpotent_2, nilpotent_2, PulFunctional.theta_pair(1, 2, 0.0, 2),
                        PulFunctional.theta_pair(1, 2, math.pi, 2))
        assert r.aux["exact_kind"] == "s_numerical_range"
        assert r.bound == pytest.approx(1.0)
        assert r.exact == pytest.approx(1.0, abs=1e-9)
        assert r.holds()

    def test_dimension_mismatch(self, A3):
        with pytest.raises(DimensionError):
            bound_thm21(A3, ComplexMatrix.identity(2), PulFunctional.diag(1, 3), PulFunctional.diag(1, 2))


class TestDiagonalBounds:
    """Eq (2.7)/(2.8) diagonal-entry bounds."""

    def test_diag_pair_self(self, A3):
        assert bound_diag_pair(A3, A3).bound == pytest.approx(1.0)

    def test_diag_pair_identity(self):
        assert bound_diag_pair(ComplexMatrix.identity(3), ComplexMatrix.identity(3)).bound == 0.0

    def test_diag_pair_against_d(self, A3, D3):
        r = bound_diag_pair(A3, D3)
        assert r.bound == pytest.approx(1.0)
        assert r.exact == pytest.approx(SPD_A3 - 1)

    def test_refinement_chain(self, A3):
        r = bound_diag_refinement(A3)
        assert r.bound == pytest.approx(1.0)
        assert r.exact == pytest.approx(SPD_A3 - 1)
        assert r.checks["spread_ge_exact"] == pytest.approx(1.0)
        assert r.holds()


class TestIndexSets:
    """Eq (2.10) averages over index sets."""

    def test_singletons(self, A3):
        assert bound_index_sets(A3, A3, [(1,), (2,), (3,)]).bound == pytest.approx(1.0)

    def test_full_set_only(self, A3):
        assert bound_index_sets(A3, A3, [(1, 2, 3)]).bound == pytest.approx(0.0)

    def test_singletons_and_full(self, A3):
        r = bound_index_sets(A3, A3, [(1,), (2,), (3,), (1, 2, 3)])
        assert r.bound == pytest.approx(10 / 3)

    def test_empty_set_rejected(self, A3):
        with pytest.raises(ContractError):
            bound_index_sets(A3, A3, [(1,), ()])
        with pytest.raises(ContractError):
            bound_index_sets(A3, A3, [])

    def test_default_family(self):
        family = default_index_family(3)
        assert (1,) in family and (1, 3) in family and (1, 2, 3) in family
        assert len(default_index_family(4, power_set=True)) == 15
        with pytest.raises(DimensionError):
            default_index_family(13, power_set=True)


class TestCor24:
    """Eq (2.11) off-diagonal sums."""

    def test_self(self, A3):
        r = bound_cor24(A3, A3)
        assert r.bound == pytest.approx(4.0)
        assert r.holds()

    def test_diagonal_against_full(self, A3, D3):
        assert bound_cor24(D3, A3).bound == pytest.approx(8 / 3)

    def test_identity(self):
        assert bound_cor24(ComplexMatrix.identity(3), ComplexMatrix.identity(3)).bound == 0.0

    def test_n1(self):
        with pytest.raises(DimensionError):
            bound_cor24(ComplexMatrix([[1]]), ComplexMatrix([[2]]))


class TestCor25:
    """Eq (2.12) phase-rotated pair functional."""

    def test_optimized_against_diagonal(self, A3, D3):
        r = bound_cor25(A3, D3, 1, 2)
        assert r.bound == pytest.approx(2.0, abs=1e-12)
        assert r.exact == pytest.approx(SPD_A3 - 1)

    def test_fixed_theta(self, A3):
        assert bound_cor25(A3, A3, 1, 2, theta=0.0).bound == pytest.approx(2.0)

    def test_optimum_dominates_random_angles(self, rng):
        A = ComplexMatrix(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        B = diagonal_part(A)
        best = bound_cor25(A, B, 1, 3).bound
        for theta in rng.uniform(0, 2 * math.pi, 2000):
            assert bound_cor25(A, B, 1, 3, theta=float(theta)).bound <= best + 1e-9

    def test_rejects_equal_indices(self, A3):
        with pytest.raises(ContractError):
            bound_cor25(A3, A3, 2, 2)


class TestClosingDisplays:
    """Mean versus pair-diagonal, and the Cartesian/diagonal splits."""

    def test_mean_vs_pairdiag(self, A3):
        r = bound_mean_vs_pairdiag(A3)
        assert r.bound == pytest.approx(17 / 6)
        assert r.exact == pytest.approx(SPD_A3 - 1)

    def test_mean_vs_pairdiag_trivial(self):
        assert bound_mean_vs_pairdiag(ComplexMatrix.identity(3)).bound == pytest.approx(0.0)
        assert bound_mean_vs_pairdiag(ComplexMatrix.diag([0, 2])).bound == pytest.approx(0.0)

    def test_reim_split(self, A3):
        r = bound_reim_split(A3)
        assert r.bound == pytest.approx(2.0)
        assert r.exact == pytest.approx(SPD_A3)

    def test_offdiag_split(self, A3):
        r = bound_offdiag_split(A3)
        assert r.bound == pytest.approx(2.0)
        assert r.exact == pytest.approx(SPD_A3 + 2)

    def test_offdiag_split_non_normal(self):
        r = bound_offdiag_split(ComplexMatrix([[1, 1], [0, 1]]))
        assert not r.applicable


# === Hermitian perturbation bounds ===

class TestThm22:
    """||Phi1(A) - Phi2(B)|| <= ||Eig_down(A) - Eig_up(B)||."""

    def test_trace_complement_vs_identity(self, A3):
        r = bound_thm22(A3, A3, PulMap.trace_complement(3), PulMap.identity(3))
        assert r.bound == pytest.approx(1.5 * CENTERED_NORM_A3)
        assert r.exact == pytest.approx(SPD_A3)

    def test_equality_at_scalar_b(self, A3):
        B = ComplexMatrix.scalar(3, 5 / 3)
        r = bound_thm22(A3, B, PulMap.identity(3), PulMap.identity(3))
        assert r.bound == pytest.approx(CENTERED_NORM_A3)
        assert r.slack == pytest.approx(0.0, abs=1e-12)

    def test_same_map_same_matrix(self, A3):
        assert bound_thm22(A3, A3, PulMap.identity(3), PulMap.identity(3)).bound == pytest.approx(0.0)

    def test_rejects_non_hermitian(self, nilpotent_2):
        with pytest.raises(ContractError):
            bound_thm22(nilpotent_2, nilpotent_2, PulMap.identity(2), PulMap.identity(2))

    def test_rejects_output_mismatch(self, A3):
        with pytest.raises(DimensionError):
            bound_thm22(A3, A3, PulMap.identity(3), PulMap.compression_2x2(1, 2, 3))


class TestEq25:
    """Trace-complement form and its independence from Weyl."""

    def test_self(self, A3):
        assert bound_eq25(A3, A3).bound == pytest.approx(1.5 * CENTERED_NORM_A3)

    def test_scalar_b(self, A3):
        assert bound_eq25(A3, ComplexMatrix.scalar(3, 5 / 3)).bound == pytest.approx(0.5 * CENTERED_NORM_A3)

    def test_identity(self):
        r = bound_eq25(ComplexMatrix.identity(3), ComplexMatrix.identity(3))
        assert r.bound == pytest.approx(0.0) and r.exact == pytest.approx(0.0)

    def test_n1(self):
        with pytest.raises(DimensionError):
            bound_eq25(ComplexMatrix([[1]]), ComplexMatrix([[1]]))

    def test_beats_weyl_lower_at_b_equal_a(self, A3):
        weyl_lower = bound_weyl(A3, A3)[0].bound
        assert bound_eq25(A3, A3).bound > weyl_lower

    def test_weyl_lower_beats_it_at_scalar_b(self, A3):
        B = ComplexMatrix.scalar(3, 5 / 3)
        assert bound_weyl(A3, B)[0].bound > bound_eq25(A3, B).bound


class TestMirsky:
    """Eq (2.9) compression/flip bound."""

    def test_pair_12(self, A3):
        assert bound_mirsky_pair(A3, A3, 1, 2).bound == pytest.approx(4.0)

    def test_pair_13(self, A3):
        assert bound_mirsky_pair(A3, A3, 1, 3).bound == pytest.approx(math.sqrt(5))

    def test_tight_for_2x2(self):
        A = ComplexMatrix([[0, 1], [1, 0]])
        r = bound_mirsky_pair(A, A, 1, 2)
        assert r.bound == pytest.approx(2.0)
        assert r.slack == pytest.approx(0.0, abs=1e-12)

    def test_closed_form_for_a_equal_b(self, hermitian_3):
        a = hermitian_3.entries
        for i, j in [(1, 2), (1, 3), (2, 3)]:
            expected = math.sqrt((a[i - 1, i - 1] - a[j - 1, j - 1]).real ** 2 + 4 * abs(a[i - 1, j - 1]) ** 2)
            assert bound_mirsky_pair(hermitian_3, hermitian_3, i, j).bound == pytest.approx(expected, abs=1e-12)

    def test_diag_variant(self, A3):
        r = bound_mirsky_diag(A3, 1, 3)
        # sqrt((a11 - a33)^2 + |a13|^2)
        assert r.bound == pytest.approx(math.sqrt(2))
        assert r.name == "eq2.9-diag"
        assert r.holds()

    def test_rejects_equal_indices(self, A3):
        with pytest.raises(ContractError):
            bound_mirsky_pair(A3, A3, 1, 1)


class TestWeyl:
    """Eq (1.4) sandwich of ||A - B||."""

    def test_against_diagonal(self, A3, D3):
        lower, upper = bound_weyl(A3, D3)
        assert lower.bound == pytest.approx(SPD_A3 - 2)
        assert upper.bound == pytest.approx(SPD_A3 - 1)
        assert lower.exact == pytest.approx(1 + math.sqrt(3))
        assert lower.holds() and upper.holds()
        assert upper.direction == UPPER


# === Spread bounds ===

class TestSpread:
    """Thm 3.1, Eq (3.4) and Thm 3.2."""

    def test_thm31(self, A3):
        r = spread_lower_normal(A3)
        assert r.bound == pytest.approx(1.5 * CENTERED_NORM_A3)
        assert r.exact == pytest.approx(SPD_A3)

    def test_thm31_scalar(self):
        r = spread_lower_normal(ComplexMatrix.scalar(3, 2.0))
        assert r.bound == pytest.approx(0.0) and r.exact == pytest.approx(0.0)

    def test_thm31_tight_n2(self):
        r = spread_lower_normal(ComplexMatrix.diag([1, -1]))
        assert r.bound == pytest.approx(2.0) and r.exact == pytest.approx(2.0)

    def test_functional_variant(self, A3):
        assert spread_lower_functional(A3, PulFunctional.mean_all(3)).bound == pytest.approx(4.0)
        assert spread_lower_functional(A3, PulFunctional.diag(1, 3)).bound == pytest.approx(0.5)

    def test_functional_at_trace_average(self, A3):
        phi = PulFunctional.custom(np.eye(3) / 3)
        assert spread_lower_functional(A3, phi).bound == pytest.approx(0.0, abs=1e-12)

    def test_thm32_chain(self, A3):
        r = spread_refined_thm32(A3)
        assert r.bound == pytest.approx(1.5 * CENTERED_NORM_A3)
        assert r.aux["right"] == pytest.approx(4.0)
        assert r.exact >= r.bound >= r.aux["right"]

    def test_thm32_n2(self):
        r = spread_refined_thm32(ComplexMatrix.diag([1, -1]))
        assert r.bound == pytest.approx(2.0)
        assert r.aux["right"] == 0.0

    def test_requires_normal_and_n2(self, nilpotent_2):
        with pytest.raises(ContractError):
            spread_lower_normal(nilpotent_2)
        with pytest.raises(DimensionError):
            spread_lower_normal(ComplexMatrix([[1]]))


# === Variance bounds ===

class TestBhatiaDavis:
    """Eq (3.10) and Eq (1.1)."""

    def test_worked_example(self, A3):
        eq310, eq11 = bound_bhatia_davis(A3, PulFunctional.diag(1, 3))
        assert eq11.aux["variance"] == pytest.approx(5.0)
        assert eq11.aux["spread_lower"] == pytest.approx(2 * math.sqrt(5))
        assert eq11.bound == pytest.approx(SPD_A3 ** 2 / 4)
        assert eq310.bound == pytest.approx((SPD_A3 - 2) * 2)
        assert eq310.holds() and eq11.holds()

    def test_explicit_interval(self, A3):
        _, eq11 = bound_bhatia_davis(A3, PulFunctional.diag(1, 3), SpectralInterval(0.0, SPD_A3))
        assert eq11.aux["spread_lower"] == pytest.approx(4.47214, abs=1e-5)

    def test_scalar_matrix(self):
        results = bound_bhatia_davis(ComplexMatrix.scalar(2, 3.0), PulFunctional.mean_all(2))
        for r in results:
            assert r.bound == pytest.approx(0.0, abs=1e-12)
            assert r.exact == pytest.approx(0.0, abs=1e-12)

    def test_map_form(self, A3):
        eq310, eq11 = bound_bhatia_davis(A3, PulMap.compression_2x2(1, 2, 3))
        assert eq310.direction == LOWER and eq310.bound == 0.0
        assert eq310.exact >= -1e-10
        assert eq11.holds()

    def test_interval_must_contain_spectrum(self, A3):
        with pytest.raises(ContractError):
            bound_bhatia_davis(A3, PulFunctional.diag(1, 3), SpectralInterval(1.0, 2.0))


class TestThm34:
    """Premise-gated variance refinement."""

    def test_worked_example(self, A3):
        r = bound_thm34(A3, PulFunctional.diag(1, 3))
        assert r.applicable
        assert r.bound == pytest.approx(4.5)
        assert r.holds()

    def test_other_diagonal(self, A3):
        assert bound_thm34(A3, PulFunctional.diag(3, 3)).bound == pytest.approx(3.0)

    def test_premise_fails_on_identity(self):
        r = bound_thm34(ComplexMatrix.identity(3), PulFunctional.diag(1, 3))
        assert not r.applicable
        assert "premise" in r.reason

    def test_not_psd(self):
        assert not bound_thm34(ComplexMatrix.diag([1, -1]), PulFunctional.diag(1, 2)).applicable

    @pytest.mark.parametrize("c", [0.1, 0.3, 1 / 3, 0.7, 1.1, 1e3 / 7])
    def test_premise_equality_survives_rounding(self, c):
        r = bound_thm34(ComplexMatrix.diag([2 * c, 0]), PulFunctional.pair_diag(1, 2, 2))
        assert r.applicable, r.reason
        assert r.bound == pytest.approx(2 * c)
        assert r.holds()


class TestCor31:
    """Refined spread lower bound and its chain."""

    def test_worked_example(self, A3):
        r = bound_cor31(A3, PulFunctional.diag(1, 3))
        assert r.bound == pytest.approx(4.5)
        assert r.aux["baseline"] == pytest.approx(2 * math.sqrt(5))
        assert r.exact == pytest.approx(SPD_A3)
        assert all(v >= 0 for v in r.checks.values())

    def test_third_diagonal(self, A3):
        r = bound_cor31(A3, PulFunctional.diag(3, 3))
        assert r.aux["variance"] == pytest.approx(2.0)
        assert r.bound == pytest.approx(3.0)
        assert r.aux["baseline"] == pytest.approx(2 * math.sqrt(2))

    def test_premise_boundary_equality(self):
        r = bound_cor31(ComplexMatrix.diag([2, 0]), PulFunctional.pair_diag(1, 2, 2))
        assert r.applicable
        assert r.aux["refined"] == pytest.approx(r.aux["baseline"])

    def test_rejects_maps(self, A3):
        with pytest.raises(ContractError):
            bound_cor31(A3, PulMap.identity(3))


# === Condition number ===

class TestDetRatio:
    """Determinant-normalized bounds and the condition-number inversion."""

    def test_boundary_case(self):
        results, cond = det_ratio_bounds(ComplexMatrix.diag([1, 2]), PulMap.identity(2))
        lower, upper, inverted = results
        assert lower.bound == pytest.approx(math.sqrt(0.5))
        assert lower.exact == pytest.approx(math.sqrt(0.5))
        assert upper.bound == pytest.approx(math.sqrt(2))
        assert cond == pytest.approx(2.0)
        assert inverted.exact == pytest.approx(2.0)
        assert all(r.holds() for r in results)

    def test_scalar_matrix(self):
        results, cond = det_ratio_bounds(ComplexMatrix.scalar(3, 4.0), PulMap.trace_complement(3))
        assert cond == pytest.approx(1.0)
        for r in results:
            assert r.bound == pytest.approx(1.0)
            assert r.exact == pytest.approx(1.0)

    def test_shifted_worked_example(self, A3):
        A = A3 + ComplexMatrix.scalar(3, 0.5)
        results, cond = det_ratio_bounds(A, PulMap.identity(3))
        assert all(r.holds() for r in results)
        assert 1.0 <= cond <= (SPD_A3 + 0.5) / 0.5 + 1e-9

    def test_requires_pd(self, A3):
        with pytest.raises(ContractError):
            det_ratio_bounds(A3, PulMap.identity(3))

    def test_requires_n2(self):
        with pytest.raises(DimensionError):
            det_ratio_bounds(ComplexMatrix([[2]]), PulMap.identity(1))
