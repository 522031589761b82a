"""
BoundReport assembly and export (versioned JSON, CSV via pandas).
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd

from config.settings import TOL_VERIFY, TOOL_VERSION
from modules.bounds.registry import resolve_selection, run_bounds
from modules.bounds.result import FIELD_ORDER, BoundResult
from modules.matrix.matrix import ComplexMatrix, classify
from modules.oracle.spectrum import spectral_norm, spectrum_of, spread

logger = logging.getLogger(__name__)


@dataclass
class BoundReport:
    matrix_a_digest: str
    matrix_b_digest: str
    classes: tuple
    results: list[BoundResult]
    oracle_summary: dict
    tool_version: str = TOOL_VERSION
    selection: list[str] = field(default_factory=list)

    def violations(self, tol: float = None) -> list[BoundResult]:
        return [r for r in self.results if not r.holds(tol)]

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "matrix_a_digest": self.matrix_a_digest,
            "matrix_b_digest": self.matrix_b_digest,
            "classes": {"A": self.classes[0].to_dict(), "B": self.classes[1].to_dict()},
            "oracle_summary": self.oracle_summary,
            "selection": list(self.selection),
            "tol_verify": TOL_VERIFY,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def oracle_summary(M: ComplexMatrix) -> dict:
    s = spectrum_of(M)
    return {
        "n": M.n,
        "spectrum": s.to_dict(),
        "spread": spread(s),
        "spectral_norm": spectral_norm(M),
    }


def build_report(A: ComplexMatrix, B: ComplexMatrix | None = None, selection="all", power_set: bool = False) -> BoundReport:
    """Run the selected bounds on (A, B) and collect classes and oracle data.

    Raises:
        DimensionError: A and B differ in size
        ContractError: unknown selection
    """
    keys = resolve_selection(selection)
    results = run_bounds(A, B, keys, power_set=power_set)
    other = A if B is None else B
    summary = {"A": oracle_summary(A)}
    if B is not None:
        summary["B"] = oracle_summary(B)
    report = BoundReport(
        matrix_a_digest=A.digest(),
        matrix_b_digest=other.digest(),
        classes=(classify(A), classify(other)),
        results=results,
        oracle_summary=summary,
        selection=keys,
    )
    logger.info(
        f"Report for {A.digest()}: {len(results)} results, "
        f"{sum(r.applicable for r in results)} applicable, {len(report.violations())} violations"
    )
    return report


def results_frame(results: list[BoundResult]) -> pd.DataFrame:
    """One row per BoundResult; aux and checks are JSON-encoded."""
    rows = []
    for r in results:
        row = r.to_dict()
        row["aux"] = json.dumps(row["aux"], sort_keys=True)
        row["checks"] = json.dumps(row["checks"], sort_keys=True)
        rows.append(row)
    return pd.DataFrame(rows, columns=list(FIELD_ORDER))


def write_json(report: BoundReport, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.to_json() + "\n", encoding="utf-8")
    logger.info(f"Wrote report JSON to {path}")
    return path


def write_csv(results: list[BoundResult], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    results_frame(results).to_csv(path, index=False)
    logger.info(f"Wrote {len(results)} results to {path}")
    return path
