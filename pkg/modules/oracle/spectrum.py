"""
Spectrum-level reference quantities: ordered eigenvalue lists, spectral norm,
spread, pairwise and ordered eigenvalue distances, Weyl interval.
"""

import logging

import numpy as np

from core.errors import ContractError, DimensionError
from modules.matrix.matrix import ComplexMatrix, classify
from modules.oracle.jacobi import eig_hermitian
from modules.oracle.models import Spectrum
from modules.oracle.qr import eig_general

logger = logging.getLogger(__name__)

SAME = "same"
OPPOSED = "opposed"


def spectrum_of(A: ComplexMatrix) -> Spectrum:
    """Hermitian oracle when certified Hermitian, general QR oracle otherwise."""
    if classify(A).is_hermitian:
        return eig_hermitian(A)
    return eig_general(A)


def _require_real(s: Spectrum):
    if not s.is_real:
        raise ContractError("Ordered eigenvalue lists require a real (Hermitian) spectrum")


def eig_down(s: Spectrum) -> list[float]:
    """Eigenvalues in decreasing order; ties keep original index order."""
    _require_real(s)
    re = s.real_values()
    order = sorted(range(len(re)), key=lambda k: (-re[k], k))
    return [float(re[k]) for k in order]


def eig_up(s: Spectrum) -> list[float]:
    """Eigenvalues in increasing order; ties keep original index order."""
    _require_real(s)
    re = s.real_values()
    order = sorted(range(len(re)), key=lambda k: (re[k], k))
    return [float(re[k]) for k in order]


def spectral_norm(A: ComplexMatrix, method: str = "auto") -> float:
    """Largest singular value.

    Args:
        A: input matrix
        method: "gram" (sqrt of lambda_max(A*A)), "hermitian" (max |lambda| of A,
            Hermitian A only) or "auto" (hermitian path when certified, gram otherwise)

    Raises:
        ContractError: method="hermitian" on a non-Hermitian matrix, or unknown method
    """
    if method == "auto":
        method = "hermitian" if classify(A).is_hermitian else "gram"

    if method == "gram":
        def _gram():
            gram = A.H @ A
            top = eig_hermitian(gram).real_values()[-1]
            return float(np.sqrt(max(top, 0.0)))
        return A.cached("spectral_norm:gram", _gram)

    if method == "hermitian":
        if not classify(A).is_hermitian:
            raise ContractError("Hermitian spectral-norm path requires a Hermitian matrix")
        return A.cached(
            "spectral_norm:hermitian",
            lambda: float(np.max(np.abs(eig_hermitian(A).real_values()))),
        )

    raise ContractError(f"Unknown spectral norm method: {method}")


def spectral_norm_agreement(A: ComplexMatrix) -> float:
    """|gram path - hermitian path| for a Hermitian matrix."""
    return abs(spectral_norm(A, "gram") - spectral_norm(A, "hermitian"))


def spread(s: Spectrum) -> float:
    """max |lambda_i - lambda_j|."""
    v = s.as_array()
    return float(np.max(np.abs(v[:, None] - v[None, :])))


def max_pairwise_eig_distance(sA: Spectrum, sB: Spectrum) -> float:
    """max over i, j of |lambda_i(A) - lambda_j(B)|."""
    a = sA.as_array()
    b = sB.as_array()
    return float(np.max(np.abs(a[:, None] - b[None, :])))


def _check_hermitian_pair(A: ComplexMatrix, B: ComplexMatrix):
    if A.n != B.n:
        raise DimensionError(f"Dimension mismatch: {A.n} vs {B.n}")
    if not classify(A).is_hermitian or not classify(B).is_hermitian:
        raise ContractError("Ordered eigenvalue distance requires Hermitian A and B")


def ordered_eig_distance(A: ComplexMatrix, B: ComplexMatrix, mode: str) -> float:
    """max_j |lambda_j_down(A) - lambda_j(B)| with B ordered down (same) or up (opposed)."""
    _check_hermitian_pair(A, B)
    down_a = np.asarray(eig_down(eig_hermitian(A)))
    if mode == SAME:
        other = np.asarray(eig_down(eig_hermitian(B)))
    elif mode == OPPOSED:
        other = np.asarray(eig_up(eig_hermitian(B)))
    else:
        raise ContractError(f"Unknown ordering mode: {mode}")
    return float(np.max(np.abs(down_a - other)))


def weyl_interval(A: ComplexMatrix, B: ComplexMatrix) -> tuple[float, float]:
    """(same-order distance, opposed-order distance); ||A - B|| lies between them."""
    lower = ordered_eig_distance(A, B, SAME)
    upper = ordered_eig_distance(A, B, OPPOSED)
    logger.debug(f"Weyl interval [{lower:.6g}, {upper:.6g}] for n={A.n}")
    return lower, upper

