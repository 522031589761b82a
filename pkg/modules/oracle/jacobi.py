"""
Cyclic complex Jacobi eigensolver for Hermitian matrices.

Each rotation zeroes one off-diagonal pair (p, q) with a unitary that first
removes the phase of a_pq and then applies a real Jacobi rotation. Sweeps run
in row-cyclic order, so results are deterministic.
"""

import logging
import math

import numpy as np

from config.settings import JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL, TOL_CLASS, TOL_EIG
from core.errors import ContractError, ConvergenceError
from modules.matrix.matrix import ComplexMatrix
from modules.oracle.models import ASCENDING, Spectrum

logger = logging.getLogger(__name__)


def _offdiag_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotation(a_pp: float, a_qq: float, a_pq: complex) -> np.ndarray:
    """2x2 unitary G with G^H [[a_pp, a_pq], [conj(a_pq), a_qq]] G diagonal."""
    b = abs(a_pq)
    phase = a_pq / b
    zeta = (a_qq - a_pp) / (2.0 * b)
    if zeta == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    conj_phase = phase.conjugate()
    return np.array([[c, s], [-s * conj_phase, c * conj_phase]], dtype=np.complex128)


def jacobi_diagonalize(a: np.ndarray, basis: np.ndarray | None = None):
    """Diagonalize a Hermitian array in place of a copy.

    Args:
        a: Hermitian n x n array
        basis: optional unitary warm start; the iteration starts from basis^H a basis

    Returns:
        (eigenvalues ascending, eigenvectors as columns, sweeps used)

    Raises:
        ConvergenceError: off-diagonal mass still above tolerance after the sweep limit
    """
    n = a.shape[0]
    if basis is None:
        work = np.array(a, dtype=np.complex128)
        vectors = np.eye(n, dtype=np.complex128)
    else:
        vectors = np.array(basis, dtype=np.complex128)
        work = vectors.conj().T @ a @ vectors
        work = (work + work.conj().T) / 2

    fro = float(np.linalg.norm(a, "fro"))
    target = JACOBI_OFF_TOL * fro
    skip = 0.1 * target / max(n, 1)

    sweeps = 0
    off = _offdiag_norm(work)
    while off > target:
        if sweeps >= JACOBI_MAX_SWEEPS:
            logger.error(
                f"Jacobi did not converge: n={n}, sweeps={sweeps}, off={off:.3e}, target={target:.3e}"
            )
            raise ConvergenceError(
                f"Jacobi failed to converge in {JACOBI_MAX_SWEEPS} sweeps "
                f"(off-diagonal mass {off:.3e} > {target:.3e})"
            )
        sweeps += 1
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                a_pq = work[p, q]
                if abs(a_pq) <= skip:
                    continue
                g = _rotation(work[p, p].real, work[q, q].real, a_pq)
                idx = [p, q]
                work[:, idx] = work[:, idx] @ g
                work[idx, :] = g.conj().T @ work[idx, :]
                work[p, q] = 0.0
                work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
                vectors[:, idx] = vectors[:, idx] @ g
                rotations += 1
        off = _offdiag_norm(work)
        if rotations == 0:
            break

    values = np.diag(work).real.copy()
    order = np.argsort(values, kind="stable")
    logger.debug(f"Jacobi converged: n={n}, sweeps={sweeps}, off={off:.3e}")
    return values[order], vectors[:, order], sweeps


def eig_hermitian(A: ComplexMatrix, basis: np.ndarray | None = None) -> Spectrum:
    """Real spectrum of a Hermitian matrix, ascending, with residual certificate.

    Results without a warm start are memoized on the matrix.

    Raises:
        ContractError: A is not Hermitian within tol_class
        ConvergenceError: sweep limit exceeded or residual above tol_eig
    """
    if basis is None:
        return A.cached("eig_hermitian", lambda: _eig_hermitian(A, None))
    return _eig_hermitian(A, basis)


def _eig_hermitian(A: ComplexMatrix, basis) -> Spectrum:
    a = A.entries
    defect = float(np.linalg.norm(a - a.conj().T, "fro"))
    if defect > TOL_CLASS * A.scale():
        raise ContractError(
            f"eig_hermitian requires a Hermitian matrix (hermiticity defect {defect:.3e})"
        )

    herm = (a + a.conj().T) / 2
    values, vectors, _ = jacobi_diagonalize(herm, basis)

    residuals = np.linalg.norm(a @ vectors - vectors * values, axis=0)
    max_residual = float(np.max(residuals)) if residuals.size else 0.0
    limit = TOL_EIG * A.scale()
    if max_residual > limit:
        logger.error(f"Jacobi residual {max_residual:.3e} exceeds {limit:.3e} (n={A.n})")
        raise ConvergenceError(
            f"Jacobi residual certificate {max_residual:.3e} exceeds {limit:.3e}"
        )

    vectors.setflags(write=False)
    return Spectrum(
        values=tuple(complex(v, 0.0) for v in values),
        max_residual=max_residual,
        ordering_key=ASCENDING,
        vectors=vectors,
    )
