"""
General complex eigensolver for small dense matrices (n <= QR_MAX_N).

Householder reduction to upper Hessenberg form, then explicit single-shift
complex QR iteration with Wilkinson shifts and periodic exceptional shifts.
The accumulated unitary gives a Schur form A Q = Q T whose residual is the
certificate stored on the Spectrum.
"""

import cmath
import logging

import numpy as np

from config.settings import QR_ITERATIONS_PER_N, QR_MAX_N, TOL_EIG
from core.errors import ConvergenceError, DimensionError
from modules.matrix.matrix import ComplexMatrix
from modules.oracle.models import RE_DESC_IM_DESC, Spectrum

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps
EXCEPTIONAL_EVERY = 10
EXCEPTIONAL_ANGLE = 0.7853981633974483 + 0.3


def hessenberg(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a to upper Hessenberg form H with a = Q H Q^H."""
    n = a.shape[0]
    h = np.array(a, dtype=np.complex128)
    q = np.eye(n, dtype=np.complex128)
    for k in range(n - 2):
        x = h[k + 1:, k].copy()
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0 or np.linalg.norm(x[1:]) == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * norm_x
        v /= np.linalg.norm(v)
        h[k + 1:, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, :])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        q[:, k + 1:] -= 2.0 * np.outer(q[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h, q


def _wilkinson_shift(h: np.ndarray, hi: int) -> complex:
    """Eigenvalue of the trailing 2x2 block closer to its last diagonal entry."""
    a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
    c, d = h[hi, hi - 1], h[hi, hi]
    half_tr = (a + d) / 2
    disc = cmath.sqrt(((a - d) / 2) ** 2 + b * c)
    mu1, mu2 = half_tr + disc, half_tr - disc
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def _givens(x: complex, y: complex) -> np.ndarray:
    """Unitary G with G @ [x, y] = [r, 0]."""
    r = np.hypot(abs(x), abs(y))
    if r == 0.0:
        return np.eye(2, dtype=np.complex128)
    return np.array([[x.conjugate(), y.conjugate()], [-y, x]], dtype=np.complex128) / r


def schur(a: np.ndarray, max_iterations: int) -> tuple[np.ndarray, np.ndarray]:
    """Complex Schur form (T upper triangular, Q unitary) with a Q = Q T.

    Raises:
        ConvergenceError: more than ``max_iterations`` steps without a deflation
    """
    n = a.shape[0]
    h, q = hessenberg(a)
    scale = max(float(np.linalg.norm(h, "fro")), np.finfo(float).tiny)

    hi = n - 1
    since_deflation = 0
    total = 0
    while hi > 0:
        low = hi
        while low > 0:
            ref = abs(h[low - 1, low - 1]) + abs(h[low, low])
            if ref == 0.0:
                ref = scale
            if abs(h[low, low - 1]) <= EPS * ref:
                h[low, low - 1] = 0.0
                break
            low -= 1

        if low == hi:
            hi -= 1
            since_deflation = 0
            continue

        since_deflation += 1
        total += 1
        if since_deflation > max_iterations:
            logger.error(f"QR iteration stalled at index {hi} after {since_deflation} steps")
            raise ConvergenceError(
                f"QR iteration did not deflate within {max_iterations} iterations (n={n})"
            )

        if since_deflation % EXCEPTIONAL_EVERY == 0:
            mu = h[hi, hi] + abs(h[hi, hi - 1]) * cmath.exp(1j * EXCEPTIONAL_ANGLE * since_deflation)
        else:
            mu = _wilkinson_shift(h, hi)

        block = range(low, hi + 1)
        for k in block:
            h[k, k] -= mu
        rotations = []
        for k in range(low, hi):
            g = _givens(h[k, k], h[k + 1, k])
            h[k:k + 2, k:] = g @ h[k:k + 2, k:]
            h[k + 1, k] = 0.0
            rotations.append(g)
        for k, g in zip(range(low, hi), rotations):
            gh = g.conj().T
            h[:hi + 1, k:k + 2] = h[:hi + 1, k:k + 2] @ gh
            q[:, k:k + 2] = q[:, k:k + 2] @ gh
        for k in block:
            h[k, k] += mu

    logger.debug(f"QR converged: n={n}, iterations={total}")
    return np.triu(h), q


def eig_general(A: ComplexMatrix) -> Spectrum:
    """Complex spectrum ordered by (Re desc, Im desc), certified by the Schur residual.

    Raises:
        DimensionError: n > QR_MAX_N
        ConvergenceError: stalled iteration or residual above tol_eig
    """
    if A.n > QR_MAX_N:
        raise DimensionError(f"eig_general supports n <= {QR_MAX_N}, got n={A.n}")
    return A.cached("eig_general", lambda: _eig_general(A))


def _eig_general(A: ComplexMatrix) -> Spectrum:
    a = A.entries
    t, q = schur(a, QR_ITERATIONS_PER_N * A.n)
    residual = float(np.linalg.norm(a @ q - q @ t, "fro"))
    limit = TOL_EIG * A.scale()
    if residual > limit:
        logger.error(f"Schur residual {residual:.3e} exceeds {limit:.3e} (n={A.n})")
        raise ConvergenceError(f"Schur residual certificate {residual:.3e} exceeds {limit:.3e}")

    values = sorted((complex(v) for v in np.diag(t)), key=lambda z: (-z.real, -z.imag))
    return Spectrum(values=tuple(values), max_residual=residual, ordering_key=RE_DESC_IM_DESC)
