"""
Numeric validation that a map or functional is positive, unital and linear.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import ContractError
from modules.matrix.matrix import ComplexMatrix
from modules.oracle.jacobi import eig_hermitian
from modules.oracle.spectrum import spectral_norm
from modules.pulm.functionals import PulFunctional, apply_functional
from modules.pulm.maps import CallableMap, PulMap, apply_map

logger = logging.getLogger(__name__)

PASS_TOL = 1e-10


@dataclass(frozen=True)
class ValidationReport:
    label: str
    n_in: int
    n_out: int
    trials: int
    seed: int
    unitality_defect: float
    positivity_violation: float
    linearity_defect: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "n_in": self.n_in,
            "n_out": self.n_out,
            "trials": self.trials,
            "seed": self.seed,
            "unitality_defect": self.unitality_defect,
            "positivity_violation": self.positivity_violation,
            "linearity_defect": self.linearity_defect,
            "passed": self.passed,
        }


def _evaluator(x):
    """(label, n_in, n_out, A -> ComplexMatrix) for any supported descriptor."""
    if isinstance(x, PulFunctional):
        return x.label(), x.n, 1, lambda A: ComplexMatrix([[apply_functional(x, A)]])
    if isinstance(x, PulMap):
        return x.label(), x.n_in, x.n_out, lambda A: apply_map(x, A)
    if isinstance(x, CallableMap):
        return x.label(), x.n_in, x.n_out, x
    raise ContractError(f"Cannot validate object of type {type(x).__name__}")


def _complex_gaussian(rng: np.random.Generator, n: int) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def validate_pulm(x, trials: int = 100, seed: int = 0) -> ValidationReport:
    """Check unitality, positivity on random psd inputs and linearity on random pairs.

    Args:
        x: PulFunctional, PulMap or CallableMap
        trials: number of random psd samples and linearity pairs
        seed: RNG seed

    Returns:
        ValidationReport; passed iff every defect is <= 1e-10 (relative)
    """
    if trials < 1:
        raise ContractError(f"trials must be >= 1, got {trials}")
    label, n_in, n_out, evaluate = _evaluator(x)
    rng = np.random.Generator(np.random.Philox(key=seed))

    unit_out = evaluate(ComplexMatrix.identity(n_in))
    unitality = spectral_norm(unit_out - ComplexMatrix.identity(n_out), "gram")

    positivity = 0.0
    linearity = 0.0
    for _ in range(trials):
        g = _complex_gaussian(rng, n_in)
        P = ComplexMatrix(g.conj().T @ g)
        out = evaluate(P).entries
        herm = ComplexMatrix((out + out.conj().T) / 2)
        skew = float(np.linalg.norm(out - out.conj().T, "fro"))
        lam_min = eig_hermitian(herm).real_values()[0]
        violation = (max(0.0, -lam_min) + skew) / P.scale()
        positivity = max(positivity, violation)

        A = ComplexMatrix(_complex_gaussian(rng, n_in))
        B = ComplexMatrix(_complex_gaussian(rng, n_in))
        alpha, beta = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
        lhs = evaluate(alpha * A + beta * B).entries
        rhs = alpha * evaluate(A).entries + beta * evaluate(B).entries
        ref = max(1.0, abs(alpha) * A.frobenius_norm() + abs(beta) * B.frobenius_norm())
        linearity = max(linearity, float(np.linalg.norm(lhs - rhs, "fro")) / ref)

    passed = unitality <= PASS_TOL and positivity <= PASS_TOL and linearity <= PASS_TOL
    report = ValidationReport(
        label=label,
        n_in=n_in,
        n_out=n_out,
        trials=trials,
        seed=seed,
        unitality_defect=float(unitality),
        positivity_violation=float(positivity),
        linearity_defect=float(linearity),
        passed=passed,
    )
    logger.info(
        f"validate_pulm {label}: unitality={unitality:.2e}, positivity={positivity:.2e}, "
        f"linearity={linearity:.2e}, passed={passed}"
    )
    return report
