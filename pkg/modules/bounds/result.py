"""
BoundResult: one inequality instance, pairing a cheap bound with the exact
oracle quantity it bounds.
"""

import math
from dataclasses import dataclass, field

from config.catalog import BOUNDS
from config.settings import TOL_VERIFY

LOWER = "lower"
UPPER = "upper"

# Fixed JSON field order
FIELD_ORDER = (
    "name",
    "bound",
    "exact",
    "slack",
    "direction",
    "applicable",
    "citation",
    "inputs_digest",
    "reason",
    "aux",
    "checks",
)


@dataclass(frozen=True)
class BoundResult:
    name: str
    bound: float
    exact: float
    slack: float
    direction: str
    applicable: bool
    citation: str
    inputs_digest: str
    reason: str = ""
    aux: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def holds(self, tol: float = None) -> bool:
        """True when inapplicable, or the inequality and every chain check hold within tol."""
        if not self.applicable:
            return True
        tol = TOL_VERIFY if tol is None else tol
        allowed = -tol * max(1.0, abs(self.exact))
        if self.slack < allowed:
            return False
        return all(v >= allowed for v in self.checks.values())

    @property
    def slack_ratio(self) -> float:
        """slack / max(1, |exact|)."""
        return self.slack / max(1.0, abs(self.exact))

    def to_dict(self) -> dict:
        values = {
            "name": self.name,
            "bound": self.bound,
            "exact": self.exact,
            "slack": self.slack,
            "direction": self.direction,
            "applicable": self.applicable,
            "citation": self.citation,
            "inputs_digest": self.inputs_digest,
            "reason": self.reason,
            "aux": dict(self.aux),
            "checks": dict(self.checks),
        }
        return {key: values[key] for key in FIELD_ORDER}


def make_result(
    name: str,
    bound: float,
    exact: float,
    direction: str,
    inputs_digest: str,
    aux: dict = None,
    checks: dict = None,
) -> BoundResult:
    """Applicable result; slack follows from the direction."""
    bound = float(bound)
    exact = float(exact)
    if not (math.isfinite(bound) and math.isfinite(exact)):
        raise ValueError(f"{name}: bound and exact must be finite, got {bound}, {exact}")
    slack = exact - bound if direction == LOWER else bound - exact
    return BoundResult(
        name=name,
        bound=bound,
        exact=exact,
        slack=slack,
        direction=direction,
        applicable=True,
        citation=BOUNDS[name]["citation"],
        inputs_digest=inputs_digest,
        aux=dict(aux or {}),
        checks={k: float(v) for k, v in (checks or {}).items()},
    )


def inapplicable(name: str, reason: str, inputs_digest: str, direction: str = LOWER) -> BoundResult:
    """Placeholder result for an instance outside the theorem's hypotheses."""
    return BoundResult(
        name=name,
        bound=0.0,
        exact=0.0,
        slack=0.0,
        direction=direction,
        applicable=False,
        citation=BOUNDS[name]["citation"],
        inputs_digest=inputs_digest,
        reason=reason,
    )


def pair_digest(A, B=None) -> str:
    if B is None:
        return A.digest()
    return f"{A.digest()}+{B.digest()}"
