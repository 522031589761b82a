"""
Soundness sweep: evaluate the selected bounds on every trial of a seeded
ensemble and summarize slack per bound.

Trials may run in worker processes; records are merged in trial order, so the
summary does not depend on the worker count.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from config.settings import TOL_VERIFY, TOOL_VERSION
from modules.bounds.registry import resolve_selection, run_bounds
from modules.harness.ensembles import EnsembleSpec, generate_trial

logger = logging.getLogger(__name__)

RECORD_COLUMNS = ["trial", "name", "applicable", "slack", "slack_ratio", "violated"]


def trial_records(spec: EnsembleSpec, trial: int, keys: list[str]) -> list[dict]:
    """Flat records for every result of one trial."""
    A, B = generate_trial(spec, trial)
    records = []
    for r in run_bounds(A, B, keys):
        records.append({
            "trial": trial,
            "name": r.name,
            "applicable": r.applicable,
            "slack": r.slack,
            "slack_ratio": r.slack_ratio,
            "violated": not r.holds(),
        })
    return records


def _trial_records_job(args) -> list[dict]:
    return trial_records(*args)


def summarize(records: list[dict]) -> dict:
    """Per-bound {count, applicable_count, max_negative_slack, mean_slack_ratio, violations}."""
    frame = pd.DataFrame(records, columns=RECORD_COLUMNS)
    summary = {}
    for name, group in frame.groupby("name", sort=False):
        applicable = group[group["applicable"]]
        if len(applicable):
            max_negative = max(0.0, -float(applicable["slack"].min()))
            mean_ratio = float(applicable["slack_ratio"].mean())
        else:
            max_negative = 0.0
            mean_ratio = 0.0
        summary[name] = {
            "count": int(len(group)),
            "applicable_count": int(len(applicable)),
            "max_negative_slack": max_negative,
            "mean_slack_ratio": mean_ratio,
            "violations": int(group["violated"].sum()),
        }
    return summary


def run_verify(spec: EnsembleSpec, selection="all", workers: int = 1) -> dict:
    """Evaluate the selected bounds over the ensemble.

    Returns:
        Summary dict with tool_version, spec, selection, per-bound statistics and total_violations
    """
    keys = resolve_selection(selection)
    jobs = [(spec, t, keys) for t in range(spec.trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_trial_records_job, jobs))
    else:
        batches = [_trial_records_job(job) for job in jobs]
    records = [rec for batch in batches for rec in batch]

    bounds = summarize(records)
    total = sum(b["violations"] for b in bounds.values())
    logger.info(f"Verify {spec.kind} n={spec.n} trials={spec.trials}: {total} violation(s)")
    return {
        "tool_version": TOOL_VERSION,
        "ensemble": spec.to_dict(),
        "selection": keys,
        "tol_verify": TOL_VERIFY,
        "bounds": bounds,
        "total_violations": total,
    }


def summary_json(summary: dict) -> str:
    return json.dumps(summary, indent=2)
