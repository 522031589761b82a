"""
Variance-type inequalities for a positive unital Phi and Hermitian A with
spectrum in [m, M], and the spread lower bounds they imply.

Matrix-order statements X <= Y (maps with k > 1) are reported as
"0 is a lower bound for lambda_min(Y - X)". Functional instances keep their
scalar direction.
"""

import logging
import math

import numpy as np

from config.settings import TOL_VERIFY
from core.errors import ContractError
from modules.bounds.result import LOWER, UPPER, BoundResult, inapplicable, make_result
from modules.matrix.matrix import ComplexMatrix, SpectralInterval, classify
from modules.oracle.jacobi import eig_hermitian
from modules.oracle.spectrum import spread
from modules.pulm.functionals import PulFunctional, apply_functional
from modules.pulm.maps import PulMap, apply_map

logger = logging.getLogger(__name__)


def resolve_interval(A: ComplexMatrix, interval: SpectralInterval | None) -> SpectralInterval:
    """Default to [lambda_min, lambda_max]; otherwise check the oracle spectrum lies inside.

    Raises:
        ContractError: A not Hermitian, or spectrum outside the interval
    """
    if not classify(A).is_hermitian:
        raise ContractError("Interval bounds require a Hermitian matrix")
    values = eig_hermitian(A).real_values()
    if interval is None:
        return SpectralInterval(float(values[0]), float(values[-1]))
    if not interval.contains(values, TOL_VERIFY * A.scale()):
        raise ContractError(
            f"Spectrum [{values[0]:.6g}, {values[-1]:.6g}] not inside [{interval.m}, {interval.M}]"
        )
    return interval


def phi_matrix(Phi, X: ComplexMatrix) -> ComplexMatrix:
    """Phi(X) as a matrix; functionals give 1x1."""
    if isinstance(Phi, PulFunctional):
        return ComplexMatrix([[apply_functional(Phi, X)]])
    if isinstance(Phi, PulMap):
        return apply_map(Phi, X)
    raise ContractError(f"Expected PulFunctional or PulMap, got {type(Phi).__name__}")


def _hermitian_extremes(X: ComplexMatrix) -> tuple[float, float]:
    x = X.entries
    target = X if np.array_equal(x, x.conj().T) else ComplexMatrix((x + x.conj().T) / 2)
    values = eig_hermitian(target).real_values()
    return float(values[0]), float(values[-1])


def _label(Phi) -> str:
    return Phi.label()


def bound_bhatia_davis(A: ComplexMatrix, Phi, interval: SpectralInterval | None = None) -> list[BoundResult]:
    """Eq (3.10) Phi(A^2) - Phi(A)^2 <= (M - Phi(A))(Phi(A) - m), and Eq (1.1) with (M - m)^2/4.

    For functionals the aux field carries spread_lower = 2 sqrt(phi(A^2) - phi(A)^2).
    """
    iv = resolve_interval(A, interval)
    m, M = iv.m, iv.M
    digest = A.digest()
    pa = phi_matrix(Phi, A)
    pa2 = phi_matrix(Phi, A.square())
    aux = {"Phi": _label(Phi), "m": m, "M": M}

    if isinstance(Phi, PulFunctional):
        x = pa.entries[0, 0].real
        y = pa2.entries[0, 0].real
        variance = y - x * x
        aux.update({"phi_A": x, "phi_A2": y, "variance": variance,
                    "spread_lower": 2.0 * math.sqrt(max(variance, 0.0))})
        return [
            make_result("eq3.10", (M - x) * (x - m), variance, UPPER, digest, aux=aux),
            make_result("eq1.1", (M - m) ** 2 / 4.0, variance, UPPER, digest, aux=aux),
        ]

    k = pa.n
    eye = ComplexMatrix.identity(k)
    # (M - Phi(A))(Phi(A) - m) - (Phi(A^2) - Phi(A)^2) = (M + m) Phi(A) - Mm I - Phi(A^2)
    gap = (M + m) * pa - (M * m) * eye - pa2
    gap_min, _ = _hermitian_extremes(gap)
    _, var_max = _hermitian_extremes(pa2 - pa @ pa)
    aux["variance_max_eig"] = var_max
    return [
        make_result("eq3.10", 0.0, gap_min, LOWER, digest, aux=aux),
        make_result("eq1.1", (M - m) ** 2 / 4.0, var_max, UPPER, digest, aux=aux),
    ]


def _premise(A: ComplexMatrix, Phi) -> tuple[bool, str, ComplexMatrix, ComplexMatrix]:
    """Phi(A^2) >= 2 Phi(A)^2 and Phi(A) > 0, decided by oracle min-eigenvalues."""
    pa = phi_matrix(Phi, A)
    pa2 = phi_matrix(Phi, A.square())
    tol = TOL_VERIFY * A.scale()
    excess_min, _ = _hermitian_extremes(pa2 - 2.0 * (pa @ pa))
    pa_min, _ = _hermitian_extremes(pa)
    if pa_min <= tol:
        return False, "premise Phi(A) > 0 fails", pa, pa2
    # A^2 terms: compare at the scale of Phi(A^2)
    if excess_min < -TOL_VERIFY * pa2.scale():
        return False, "premise Phi(A^2) >= 2 Phi(A)^2 fails", pa, pa2
    return True, "", pa, pa2


def bound_thm34(A: ComplexMatrix, Phi, interval: SpectralInterval | None = None) -> BoundResult:
    """Thm 3.4: Phi(A^2) >= 2 Phi(A)^2 implies Phi(A^2) <= (M - m) Phi(A).

    Functionals report bound = phi(A^2)/phi(A) against the oracle spread.
    Premise failures give applicable = False.
    """
    digest = A.digest()
    if not classify(A).is_psd:
        return inapplicable("thm3.4", "requires positive semidefinite A", digest)
    iv = resolve_interval(A, interval)
    ok, reason, pa, pa2 = _premise(A, Phi)
    if not ok:
        return inapplicable("thm3.4", reason, digest)

    aux = {"Phi": _label(Phi), "m": iv.m, "M": iv.M}
    if isinstance(Phi, PulFunctional):
        x = pa.entries[0, 0].real
        y = pa2.entries[0, 0].real
        spread_lower = y / x
        spd = spread(eig_hermitian(A))
        aux.update({"phi_A": x, "phi_A2": y, "spread_lower": spread_lower})
        return make_result("thm3.4", spread_lower, spd, LOWER, digest, aux=aux,
                           checks={"width_ge_spread_lower": iv.width - spread_lower})

    gap_min, _ = _hermitian_extremes(iv.width * pa - pa2)
    return make_result("thm3.4", 0.0, gap_min, LOWER, digest, aux=aux)


def bound_cor31(A: ComplexMatrix, phi: PulFunctional, interval: SpectralInterval | None = None) -> BoundResult:
    """Cor 3.1: phi(A^2) - phi(A)^2 <= (phi(A^2)/(2 phi(A)))^2 <= (M - m)^2/4.

    bound is the refined spread lower bound phi(A^2)/phi(A); the baseline
    2 sqrt(variance) and every chain link are recorded.
    """
    if not isinstance(phi, PulFunctional):
        raise ContractError("Cor 3.1 applies to functionals")
    digest = A.digest()
    if not classify(A).is_psd:
        return inapplicable("eq3.15", "requires positive semidefinite A", digest)
    iv = resolve_interval(A, interval)
    ok, reason, pa, pa2 = _premise(A, phi)
    if not ok:
        return inapplicable("eq3.15", reason, digest)

    x = pa.entries[0, 0].real
    y = pa2.entries[0, 0].real
    variance = y - x * x
    refined = y / x
    baseline = 2.0 * math.sqrt(max(variance, 0.0))
    half_sq = (y / (2.0 * x)) ** 2
    spd = spread(eig_hermitian(A))
    logger.debug(f"Cor 3.1: variance={variance:.6g}, refined={refined:.6g}, baseline={baseline:.6g}")
    return make_result(
        "eq3.15", refined, spd, LOWER, digest,
        aux={"phi": phi.label(), "phi_A": x, "phi_A2": y, "variance": variance,
             "refined": refined, "baseline": baseline, "m": iv.m, "M": iv.M},
        checks={
            "refined_ge_baseline": refined - baseline,
            "variance_le_half_square": half_sq - variance,
            "half_square_le_quarter_width": iv.width ** 2 / 4.0 - half_sq,
        },
    )


def variance_functionals(n: int) -> list[PulFunctional]:
    return [PulFunctional.diag(i, n) for i in range(1, n + 1)] + [PulFunctional.mean_all(n)]


def variance_maps(n: int) -> list[PulMap]:
    maps = [PulMap.identity(n)]
    if n >= 2:
        maps += [PulMap.trace_complement(n), PulMap.compression_2x2(1, 2, n)]
    return maps
