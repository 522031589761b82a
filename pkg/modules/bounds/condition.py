"""
Determinant-normalized bounds for positive definite A (ratio spread), and the
condition-number lower bound obtained by inverting them.
"""

import logging
import math

from core.errors import ContractError, DimensionError
from modules.bounds.result import LOWER, UPPER, BoundResult, make_result
from modules.bounds.variance import phi_matrix, resolve_interval
from modules.matrix.matrix import ComplexMatrix, SpectralInterval, classify
from modules.oracle.jacobi import eig_hermitian

logger = logging.getLogger(__name__)


def det_ratio_bounds(A: ComplexMatrix, Phi, interval: SpectralInterval | None = None) -> tuple[list[BoundResult], float]:
    """(m/M)^((n-1)/n) I <= det(A)^(-1/n) Phi(A) <= (M/m)^((n-1)/n) I.

    Returns the lower, upper and inverted (condition-number) results, plus
    condition_lower = max(1, (c lambda_max)^(n/(n-1)), (c lambda_min)^(-n/(n-1)))
    with c = det(A)^(-1/n) and lambda over the spectrum of Phi(A).

    Raises:
        DimensionError: n = 1
        ContractError: A not positive definite, or interval inconsistent with the spectrum
    """
    n = A.n
    if n < 2:
        raise DimensionError("Determinant ratio bounds are undefined for n = 1")
    if not classify(A).is_pd:
        raise ContractError("Determinant ratio bounds require a positive definite matrix")
    iv = resolve_interval(A, interval)
    if iv.m <= 0:
        raise ContractError(f"Interval must satisfy 0 < m, got m = {iv.m}")

    values = eig_hermitian(A).real_values()
    log_det = float(sum(math.log(v) for v in values))
    c = math.exp(-log_det / n)

    pa = phi_matrix(Phi, A).entries
    pa_herm = ComplexMatrix((pa + pa.conj().T) / 2)
    phi_values = eig_hermitian(pa_herm).real_values()
    lam_min, lam_max = float(phi_values[0]), float(phi_values[-1])

    expo = (n - 1) / n
    lower_bound = (iv.m / iv.M) ** expo
    upper_bound = (iv.M / iv.m) ** expo
    scaled_min = c * lam_min
    scaled_max = c * lam_max

    inverse = n / (n - 1)
    from_upper = scaled_max ** inverse
    from_lower = scaled_min ** (-inverse) if scaled_min > 0 else 1.0
    condition_lower = max(1.0, from_upper, from_lower)
    true_condition = float(values[-1] / values[0])

    aux = {"Phi": Phi.label(), "det_scale": c, "m": iv.m, "M": iv.M, "condition_lower": condition_lower}
    digest = A.digest()
    results = [
        make_result("eq3.7-lower", lower_bound, scaled_min, LOWER, digest, aux=aux),
        make_result("eq3.7-upper", upper_bound, scaled_max, UPPER, digest, aux=aux),
        make_result(
            "eq3.7-cond", condition_lower, true_condition, LOWER, digest,
            aux={**aux, "from_upper": from_upper, "from_lower": from_lower},
        ),
    ]
    logger.debug(f"det ratio: c={c:.6g}, condition_lower={condition_lower:.6g}, true={true_condition:.6g}")
    return results, condition_lower
