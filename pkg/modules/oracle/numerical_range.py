"""
Numerical range W(A) = {<x, Ax> : ||x|| = 1} by support-function sweep.

For each angle theta the Hermitian matrix H(theta) = (e^{i theta} A + e^{-i theta} A*)/2
is diagonalized; its top eigenvector x gives the boundary point <x, Ax>, and its
extreme eigenvalues give the support values of W(A) in direction e^{-i theta}.
Neighbouring angles warm-start the Jacobi solver from the previous eigenbasis.
"""

import logging
import math

import numpy as np

from config.settings import MIN_ANGLES, NUM_ANGLES, TOL_HULL
from core.errors import ContractError, DimensionError
from modules.matrix.matrix import ComplexMatrix
from modules.oracle.hull import max_distance
from modules.oracle.jacobi import eig_hermitian
from modules.oracle.models import NumericalRangeBoundary

logger = logging.getLogger(__name__)

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
REFINE_STEPS = 40


def _rotated_hermitian(a: np.ndarray, theta: float) -> np.ndarray:
    rotated = np.exp(1j * theta) * a
    return (rotated + rotated.conj().T) / 2


class _Sweep:
    """Per-angle support data for one matrix, with a warm-start eigenbasis."""

    def __init__(self, A: ComplexMatrix):
        self.A = A
        self._basis = None

    def at(self, theta: float) -> tuple[complex, float, float]:
        """(boundary point, lambda_max(H), lambda_min(H)) at angle theta."""
        a = self.A.entries
        h = _rotated_hermitian(a, theta)
        spectrum = eig_hermitian(ComplexMatrix(h), self._basis)
        self._basis = spectrum.vectors
        x = spectrum.vectors[:, -1]
        point = complex(np.vdot(x, a @ x))
        values = spectrum.real_values()
        return point, float(values[-1]), float(values[0])


def _angles(num_angles: int) -> np.ndarray:
    if num_angles < MIN_ANGLES:
        raise ContractError(f"num_angles must be >= {MIN_ANGLES}, got {num_angles}")
    return 2.0 * np.pi * np.arange(num_angles) / num_angles


def numerical_range_boundary(A: ComplexMatrix, num_angles: int = NUM_ANGLES) -> NumericalRangeBoundary:
    """Boundary points of W(A) at num_angles equally spaced support angles."""
    angles = _angles(num_angles)

    def _compute():
        sweep = _Sweep(A)
        points = tuple(sweep.at(float(theta))[0] for theta in angles)
        logger.debug(f"Numerical range sweep: n={A.n}, angles={num_angles}")
        return NumericalRangeBoundary(points=points, support_angles=tuple(float(t) for t in angles))

    return A.cached(f"numerical_range:{num_angles}", _compute)


def is_convex(boundary: NumericalRangeBoundary, tol: float = TOL_HULL) -> bool:
    """Cross-product test on consecutive edges; all turns must share one orientation."""
    pts = []
    for p in boundary.points:
        if not pts or abs(p - pts[-1]) > tol:
            pts.append(p)
    if len(pts) > 1 and abs(pts[0] - pts[-1]) <= tol:
        pts.pop()
    if len(pts) < 3:
        return True
    crosses = []
    for k in range(len(pts)):
        o, a, b = pts[k - 2], pts[k - 1], pts[k]
        crosses.append((a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real))
    crosses = np.asarray(crosses)
    return bool(np.all(crosses <= tol) or np.all(crosses >= -tol))


def golden_section_max(f, lo: float, hi: float, steps: int = REFINE_STEPS) -> tuple[float, float]:
    """Maximize f on [lo, hi] by golden-section search. Returns (argmax, max)."""
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(steps):
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def s_numerical_range(A: ComplexMatrix, B: ComplexMatrix, num_angles: int = NUM_ANGLES) -> float:
    """Max distance between a point of W(A) and a point of W(B).

    Taken as the larger of the boundary-point max distance and the support form
    max_theta [lambda_max(H_A(theta)) - lambda_min(H_B(theta))], the latter
    refined by one golden-section pass around the best grid angle.
    """
    if A.n != B.n:
        raise DimensionError(f"Dimension mismatch: {A.n} vs {B.n}")
    angles = _angles(num_angles)

    sweep_a = _Sweep(A)
    sweep_b = _Sweep(B)
    points_a, points_b, support = [], [], []
    for theta in angles:
        pa, top_a, _ = sweep_a.at(float(theta))
        pb, _, bottom_b = sweep_b.at(float(theta))
        points_a.append(pa)
        points_b.append(pb)
        support.append(top_a - bottom_b)

    best = int(np.argmax(support))
    step = 2.0 * np.pi / num_angles
    refine_a, refine_b = _Sweep(A), _Sweep(B)

    def _support(theta: float) -> float:
        return refine_a.at(theta)[1] - refine_b.at(theta)[2]

    center = float(angles[best])
    _, refined = golden_section_max(_support, center - step, center + step)

    value = max(max_distance(points_a, points_b), float(support[best]), refined)
    logger.debug(f"s(W(A), W(B)) = {value:.10g} (n={A.n}, angles={num_angles})")
    return value


def diam_numerical_range(A: ComplexMatrix, num_angles: int = NUM_ANGLES) -> float:
    """diam W(A) = s(W(A), W(A))."""
    return A.cached(f"diam_numerical_range:{num_angles}", lambda: s_numerical_range(A, A, num_angles))
