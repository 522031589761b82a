"""
Golden check on the worked example of the spread section: A = [[2,2,1],[2,2,1],[1,1,1]], phi = diag(1).
"""

import logging
from dataclasses import dataclass

import numpy as np

from config.catalog import (
    WORKED_EXAMPLE_MATRIX,
    WORKED_EXAMPLE_SQUARE,
    WORKED_EXAMPLE_TOLERANCE,
    WORKED_EXAMPLE_VALUES,
)
from modules.bounds.variance import bound_bhatia_davis, bound_cor31
from modules.matrix.matrix import ComplexMatrix
from modules.oracle.jacobi import eig_hermitian
from modules.oracle.spectrum import spread
from modules.pulm.functionals import PulFunctional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExampleCheck:
    name: str
    expected: float
    actual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _check(name: str, actual: float) -> ExampleCheck:
    expected = WORKED_EXAMPLE_VALUES[name]
    return ExampleCheck(
        name=name,
        expected=expected,
        actual=float(actual),
        tolerance=WORKED_EXAMPLE_TOLERANCE,
        passed=abs(actual - expected) <= WORKED_EXAMPLE_TOLERANCE,
    )


def run_worked_example() -> dict:
    """Reproduce the three-number chain and the printed square.

    Returns:
        Dict with "checks" (list), "chain" (the three values), "square_matches" and "passed"
    """
    A = ComplexMatrix(WORKED_EXAMPLE_MATRIX)
    phi = PulFunctional.diag(1, A.n)

    eq11 = next(r for r in bound_bhatia_davis(A, phi) if r.name == "eq1.1")
    variance_lower = eq11.aux["spread_lower"]
    refined = bound_cor31(A, phi).bound
    spd = spread(eig_hermitian(A))

    checks = [
        _check("variance_spread_lower", variance_lower),
        _check("refined_spread_lower", refined),
        _check("oracle_spread", spd),
    ]
    square_matches = bool(np.array_equal((A @ A).entries, np.asarray(WORKED_EXAMPLE_SQUARE, dtype=np.complex128)))
    chain_ordered = variance_lower <= refined <= spd

    passed = all(c.passed for c in checks) and square_matches and chain_ordered
    logger.info(
        f"Worked example: {variance_lower:.4f} <= {refined:.4f} <= {spd:.4f}, "
        f"square_matches={square_matches}, passed={passed}"
    )
    return {
        "checks": [c.to_dict() for c in checks],
        "chain": [variance_lower, refined, spd],
        "chain_ordered": chain_ordered,
        "square_matches": square_matches,
        "passed": passed,
    }
