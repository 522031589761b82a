"""
Perturbation bounds: lower bounds on the maximum distance between the
spectra (numerical ranges) of two matrices, and the Weyl sandwich.

Three different exact quantities appear here and must not be mixed up:
- s(W(A), W(B)), which is max |lambda_i(A) - lambda_j(B)| for normal A, B
- ||Eig_down(A) - Eig_up(B)|| for Hermitian A, B
- ||A - B|| for the Weyl interval
"""

import logging
import math

import numpy as np

from config.settings import NUM_ANGLES, THETA_GRID
from core.errors import ContractError, DimensionError
from modules.bounds.result import LOWER, UPPER, BoundResult, inapplicable, make_result, pair_digest
from modules.matrix.matrix import (
    ComplexMatrix,
    classify,
    diagonal_part,
    hermitian_part,
    offdiagonal_part,
    skew_real_part,
)
from modules.oracle.numerical_range import golden_section_max, s_numerical_range
from modules.oracle.spectrum import (
    OPPOSED,
    max_pairwise_eig_distance,
    ordered_eig_distance,
    spectral_norm,
    spectrum_of,
    spread,
    weyl_interval,
)
from modules.pulm.functionals import PulFunctional, apply_functional, catalog_functionals
from modules.pulm.maps import PulMap, apply_map

logger = logging.getLogger(__name__)


def _check_same_n(A: ComplexMatrix, B: ComplexMatrix):
    if A.n != B.n:
        raise DimensionError(f"Dimension mismatch: {A.n} vs {B.n}")


def _require_hermitian(*matrices: ComplexMatrix):
    for M in matrices:
        if not classify(M).is_hermitian:
            raise ContractError("This bound requires Hermitian matrices")


def _require_n_at_least_2(A: ComplexMatrix):
    if A.n < 2:
        raise DimensionError("This bound is undefined for n = 1")


def functional_pair_exact(A: ComplexMatrix, B: ComplexMatrix, num_angles: int = NUM_ANGLES) -> tuple[float, str]:
    """s(W(A), W(B)): max pairwise eigenvalue distance for normal inputs,
    numerical-range sweep otherwise. Returns (value, kind)."""
    _check_same_n(A, B)

    def _compute():
        if classify(A).is_normal and classify(B).is_normal:
            return max_pairwise_eig_distance(spectrum_of(A), spectrum_of(B)), "max_pairwise_eig_distance"
        logger.info(f"Non-normal input (n={A.n}); using numerical range sweep for exact side")
        return s_numerical_range(A, B, num_angles), "s_numerical_range"

    return A.cached(f"functional_pair_exact:{B.digest()}:{num_angles}", _compute)


def _functional_result(name, A, B, bound, aux=None, digest=None) -> BoundResult:
    exact, kind = functional_pair_exact(A, B)
    aux = dict(aux or {})
    aux["exact_kind"] = kind
    return make_result(name, bound, exact, LOWER, digest or pair_digest(A, B), aux=aux)


# --- Theorem 2.1 family ---

def bound_thm21(A, B, phi1: PulFunctional, phi2: PulFunctional, name: str = "thm2.1") -> BoundResult:
    """|phi1(A) - phi2(B)| <= s(W(A), W(B))."""
    _check_same_n(A, B)
    bound = abs(apply_functional(phi1, A) - apply_functional(phi2, B))
    return _functional_result(name, A, B, bound, {"phi1": phi1.label(), "phi2": phi2.label()})


def bound_thm21_catalog(A, B) -> BoundResult:
    """Theorem 2.1 maximized over every pair of catalog functionals."""
    _check_same_n(A, B)
    catalog = catalog_functionals(A.n)
    va = np.array([apply_functional(phi, A) for phi in catalog])
    vb = np.array([apply_functional(phi, B) for phi in catalog])
    gaps = np.abs(va[:, None] - vb[None, :])
    i, j = np.unravel_index(int(np.argmax(gaps)), gaps.shape)
    return _functional_result(
        "thm2.1", A, B, gaps[i, j],
        {"phi1": catalog[i].label(), "phi2": catalog[j].label(), "catalog_size": len(catalog)},
    )


def _diag_gap(A, B) -> float:
    da = np.diag(A.entries)
    db = np.diag(B.entries)
    return float(np.max(np.abs(da[:, None] - db[None, :])))


def bound_diag_pair(A, B) -> BoundResult:
    """Eq (2.7): max |a_ii - b_jj| <= s(W(A), W(B))."""
    _check_same_n(A, B)
    return _functional_result("eq2.7", A, B, _diag_gap(A, B))


def bound_diag_refinement(A) -> BoundResult:
    """Eq (2.8): max |lambda_i(A) - lambda_j(D)| >= max |a_ii - a_jj|.

    The chain check records max|lambda_i(A) - lambda_j(D)| <= spd(A) for normal A.
    """
    D = diagonal_part(A)
    exact, kind = functional_pair_exact(A, D)
    aux = {"exact_kind": kind}
    checks = {}
    if classify(A).is_normal:
        spd = spread(spectrum_of(A))
        aux["spread"] = spd
        checks["spread_ge_exact"] = spd - exact
    return make_result("eq2.8", _diag_gap(A, A), exact, LOWER, A.digest(), aux=aux, checks=checks)


def bound_index_sets(A, B, family) -> BoundResult:
    """Eq (2.10): max over (I, J) in family x family of |avg_I(A) - avg_J(B)|.

    Raises:
        ContractError: empty family or empty set in the family
    """
    _check_same_n(A, B)
    family = [tuple(sorted(s)) for s in family]
    if not family:
        raise ContractError("Index-set family must be nonempty")
    if any(len(s) == 0 for s in family):
        raise ContractError("Index-set family contains an empty set")
    functionals = [PulFunctional.index_avg(s, A.n) for s in family]
    va = np.array([apply_functional(phi, A) for phi in functionals])
    vb = np.array([apply_functional(phi, B) for phi in functionals])
    gaps = np.abs(va[:, None] - vb[None, :])
    i, j = np.unravel_index(int(np.argmax(gaps)), gaps.shape)
    return _functional_result(
        "eq2.10", A, B, gaps[i, j],
        {"I": list(family[i]), "J": list(family[j]), "family_size": len(family)},
    )


def default_index_family(n: int, power_set: bool = False) -> list[tuple]:
    """Singletons, pairs and the full set; every nonempty subset when power_set is set."""
    from itertools import combinations

    from config.settings import POWER_SET_MAX_N

    if power_set:
        if n > POWER_SET_MAX_N:
            raise DimensionError(f"Power-set family limited to n <= {POWER_SET_MAX_N}, got n={n}")
        return [c for size in range(1, n + 1) for c in combinations(range(1, n + 1), size)]
    family = [(i,) for i in range(1, n + 1)]
    family += list(combinations(range(1, n + 1), 2))
    if n > 2:
        family.append(tuple(range(1, n + 1)))
    return family


def bound_cor24(A, B) -> BoundResult:
    """Eq (2.11): |(1/(n-1)) sum_{i!=j} a_ij + (1/n) sum (b_ij - a_ij)|."""
    _check_same_n(A, B)
    _require_n_at_least_2(A)
    n = A.n
    a = A.entries
    off_a = np.sum(a) - np.trace(a)
    bound = abs(off_a / (n - 1) + (np.sum(B.entries) - np.sum(a)) / n)
    return _functional_result("eq2.11", A, B, bound)


def _cor25_value(A, B, i: int, j: int, theta):
    """Value at one angle or, for an array of angles, at each of them."""
    a, b = A.entries, B.entries
    i0, j0 = i - 1, j - 1
    rot = np.exp(1j * np.asarray(theta, dtype=float))
    diag_gap = (a[i0, i0] - b[i0, i0]) + (a[j0, j0] - b[j0, j0])
    return 0.5 * np.abs(diag_gap + a[i0, j0] * rot + a[j0, i0] * np.conj(rot))


def bound_cor25(A, B, i: int, j: int, theta: float | None = None) -> BoundResult:
    """Eq (2.12): |theta_pair_{ij}(A) - pair_diag_{ij}(B)|, theta maximized when omitted.

    Raises:
        ContractError: i == j
    """
    _check_same_n(A, B)
    if i == j:
        raise ContractError("Eq (2.12) requires i != j")
    for idx in (i, j):
        if not (1 <= idx <= A.n):
            raise DimensionError(f"Index {idx} out of range 1..{A.n}")

    if theta is None:
        grid = 2.0 * np.pi * np.arange(THETA_GRID) / THETA_GRID
        values = _cor25_value(A, B, i, j, grid)
        best = int(np.argmax(values))
        step = 2.0 * np.pi / THETA_GRID
        t_ref, v_ref = golden_section_max(
            lambda t: float(_cor25_value(A, B, i, j, t)), float(grid[best]) - step, float(grid[best]) + step
        )
        theta, bound = (t_ref, v_ref) if v_ref >= values[best] else (float(grid[best]), float(values[best]))
        theta = math.fmod(theta, 2.0 * math.pi)
    else:
        bound = float(_cor25_value(A, B, i, j, theta))
    return _functional_result("eq2.12", A, B, bound, {"i": i, "j": j, "theta": float(theta)})


def bound_mean_vs_pairdiag(A) -> BoundResult:
    """max_{p != q} |mean_all(A) - (a_pp + a_qq)/2| against the spectra of A and D."""
    _require_n_at_least_2(A)
    n = A.n
    d = np.diag(A.entries)
    mean = np.sum(A.entries) / n
    pair_avgs = (d[:, None] + d[None, :]) / 2
    mask = ~np.eye(n, dtype=bool)
    bound = float(np.max(np.abs(mean - pair_avgs[mask])))
    return _functional_result("cor2.5-mean", A, diagonal_part(A), bound, digest=A.digest())


def bound_reim_split(A) -> BoundResult:
    """max |Re a_ii - Im a_jj| <= max |lambda_i(H) - lambda_j(K)|, A = H + iK."""
    H, K = hermitian_part(A), skew_real_part(A)
    d = np.diag(A.entries)
    bound = float(np.max(np.abs(d.real[:, None] - d.imag[None, :])))
    exact = max_pairwise_eig_distance(spectrum_of(H), spectrum_of(K))
    return make_result("cor2.1-reim", bound, exact, LOWER, A.digest(),
                       aux={"exact_kind": "max_pairwise_eig_distance"})


def bound_offdiag_split(A) -> BoundResult:
    """max |a_ii| <= max |lambda_i(A) - lambda_j(N)| for A = D + N with A, N normal."""
    N = offdiagonal_part(A)
    if not classify(A).is_normal or not classify(N).is_normal:
        return inapplicable("cor2.1-split", "requires normal A and normal off-diagonal part N", A.digest())
    bound = float(np.max(np.abs(np.diag(A.entries))))
    exact = max_pairwise_eig_distance(spectrum_of(A), spectrum_of(N))
    return make_result("cor2.1-split", bound, exact, LOWER, A.digest(),
                       aux={"exact_kind": "max_pairwise_eig_distance"})


# --- Theorem 2.2 family (Hermitian) ---

def bound_thm22(A, B, Phi1: PulMap, Phi2: PulMap) -> BoundResult:
    """||Phi1(A) - Phi2(B)|| <= ||Eig_down(A) - Eig_up(B)||.

    Raises:
        ContractError: non-Hermitian input
        DimensionError: output sizes differ
    """
    _check_same_n(A, B)
    _require_hermitian(A, B)
    if Phi1.n_out != Phi2.n_out:
        raise DimensionError(f"Map outputs differ: {Phi1.n_out} vs {Phi2.n_out}")
    bound = spectral_norm(apply_map(Phi1, A) - apply_map(Phi2, B))
    exact = ordered_eig_distance(A, B, OPPOSED)
    return make_result("thm2.2", bound, exact, LOWER, pair_digest(A, B),
                       aux={"Phi1": Phi1.label(), "Phi2": Phi2.label()})


def thm22_map_pairs(n: int) -> list[tuple[PulMap, PulMap]]:
    pairs = [(PulMap.identity(n), PulMap.identity(n))]
    pairs += [
        (PulMap.diagonal_restriction(n), PulMap.identity(n)),
        (PulMap.identity(n), PulMap.diagonal_restriction(n)),
    ]
    if n >= 2:
        tc, ident = PulMap.trace_complement(n), PulMap.identity(n)
        pairs += [(tc, ident), (ident, tc), (tc, tc)]
    return pairs


def bound_thm22_best(A, B) -> BoundResult:
    """Theorem 2.2 maximized over the standard map pairs."""
    results = [bound_thm22(A, B, p1, p2) for p1, p2 in thm22_map_pairs(A.n)]
    return max(results, key=lambda r: r.bound)


def bound_eq25(A, B) -> BoundResult:
    """(1/(n-1)) ||A - B + n(B - (trA/n) I)|| <= ||Eig_down(A) - Eig_up(B)||."""
    _check_same_n(A, B)
    _require_hermitian(A, B)
    _require_n_at_least_2(A)
    n = A.n
    centered = B.shift(A.trace() / n)
    bound = spectral_norm(A - B + n * centered) / (n - 1)
    exact = ordered_eig_distance(A, B, OPPOSED)
    return make_result("eq2.5", bound, exact, LOWER, pair_digest(A, B))


def _mirsky_value(A, B, i: int, j: int) -> float:
    a, b = A.entries, B.entries
    i0, j0 = i - 1, j - 1
    alpha = (a[i0, i0] - b[j0, j0]).real
    beta = (a[j0, j0] - b[i0, i0]).real
    root = math.sqrt((alpha - beta) ** 2 + 4.0 * abs(a[i0, j0] + b[i0, j0]) ** 2)
    return max(abs(alpha + beta + root), abs(alpha + beta - root)) / 2.0


def bound_mirsky_pair(A, B, i: int, j: int, name: str = "eq2.9", digest: str = None) -> BoundResult:
    """Eq (2.9) for the pair (i, j): compression of A against flipped compression of B.

    Raises:
        ContractError: i == j or non-Hermitian input
    """
    _check_same_n(A, B)
    _require_hermitian(A, B)
    if i == j:
        raise ContractError("Eq (2.9) requires i != j")
    for idx in (i, j):
        if not (1 <= idx <= A.n):
            raise DimensionError(f"Index {idx} out of range 1..{A.n}")
    bound = _mirsky_value(A, B, i, j)
    exact = ordered_eig_distance(A, B, OPPOSED)
    return make_result(name, bound, exact, LOWER, digest or pair_digest(A, B), aux={"i": i, "j": j})


def bound_mirsky_diag(A, i: int, j: int) -> BoundResult:
    """Eq (2.9) with B = D: ||Eig_down(A) - Eig_up(D)|| >= sqrt((a_ii - a_jj)^2 + |a_ij|^2)."""
    return bound_mirsky_pair(A, diagonal_part(A), i, j, name="eq2.9-diag", digest=A.digest())


# --- Weyl ---

def bound_weyl(A, B) -> list[BoundResult]:
    """Eq (1.4): ||Eig_down(A) - Eig_down(B)|| <= ||A - B|| <= ||Eig_down(A) - Eig_up(B)||."""
    _check_same_n(A, B)
    lower, upper = weyl_interval(A, B)
    norm = spectral_norm(A - B)
    digest = pair_digest(A, B)
    return [
        make_result("eq1.4-lower", lower, norm, LOWER, digest),
        make_result("eq1.4-upper", upper, norm, UPPER, digest),
    ]
