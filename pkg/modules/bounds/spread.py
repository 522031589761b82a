"""
Lower bounds on the spread spd(A) = max |lambda_i - lambda_j| of a normal matrix.
"""

import logging

import numpy as np

from core.errors import ContractError, DimensionError
from modules.bounds.result import LOWER, BoundResult, make_result
from modules.matrix.matrix import ComplexMatrix, classify
from modules.oracle.spectrum import spectral_norm, spectrum_of, spread
from modules.pulm.functionals import PulFunctional, apply_functional

logger = logging.getLogger(__name__)


def _require_normal(A: ComplexMatrix):
    if A.n < 2:
        raise DimensionError("Spread bounds are undefined for n = 1")
    if not classify(A).is_normal:
        raise ContractError("Spread bounds require a normal matrix")


def oracle_spread(A: ComplexMatrix) -> float:
    return spread(spectrum_of(A))


def spread_lower_normal(A: ComplexMatrix) -> BoundResult:
    """Thm 3.1: spd(A) >= (n/(n-1)) ||A - (trA/n) I||."""
    _require_normal(A)
    n = A.n
    centered_norm = spectral_norm(A.shift(A.trace() / n))
    bound = n / (n - 1) * centered_norm
    return make_result("thm3.1", bound, oracle_spread(A), LOWER, A.digest(),
                       aux={"centered_norm": centered_norm})


def spread_lower_functional(A: ComplexMatrix, phi: PulFunctional) -> BoundResult:
    """Eq (3.4): spd(A) >= (n/(n-1)) |phi(A) - trA/n|."""
    _require_normal(A)
    n = A.n
    bound = n / (n - 1) * abs(apply_functional(phi, A) - A.trace() / n)
    return make_result("eq3.4", bound, oracle_spread(A), LOWER, A.digest(), aux={"phi": phi.label()})


def spread_refined_thm32(A: ComplexMatrix) -> BoundResult:
    """Thm 3.2: spd >= max_{i,j} |lambda_i - (1/(n-1)) sum_{k!=j} lambda_k| >= (1/(n-1)) |sum_{i!=j} a_ij|.

    bound is the middle quantity; the right-hand side is carried in aux and
    both links of the chain are recorded as checks.
    """
    _require_normal(A)
    n = A.n
    values = spectrum_of(A).as_array()
    complement_avg = (np.sum(values) - values) / (n - 1)
    middle = float(np.max(np.abs(values[:, None] - complement_avg[None, :])))
    a = A.entries
    right = float(abs(np.sum(a) - np.trace(a)) / (n - 1))
    spd = oracle_spread(A)
    logger.debug(f"Thm 3.2 chain: spd={spd:.6g}, middle={middle:.6g}, right={right:.6g}")
    return make_result(
        "thm3.2", middle, spd, LOWER, A.digest(),
        aux={"middle": middle, "right": right},
        checks={"middle_ge_right": middle - right},
    )
