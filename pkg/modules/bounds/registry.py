"""
Bound registry: maps selection keys to runners producing BoundResults.

Runners never raise for instances outside a theorem's hypotheses; those are
reported with applicable = False and a reason.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations

from config.catalog import SELECTION_ALIASES
from core.errors import ContractError, DimensionError
from modules.bounds.condition import det_ratio_bounds
from modules.bounds.perturbation import (
    bound_cor24,
    bound_cor25,
    bound_diag_pair,
    bound_diag_refinement,
    bound_eq25,
    bound_index_sets,
    bound_mean_vs_pairdiag,
    bound_mirsky_diag,
    bound_mirsky_pair,
    bound_offdiag_split,
    bound_reim_split,
    bound_thm21_catalog,
    bound_thm22_best,
    bound_weyl,
    default_index_family,
)
from modules.bounds.result import UPPER, BoundResult, inapplicable, pair_digest
from modules.bounds.spread import spread_lower_functional, spread_lower_normal, spread_refined_thm32
from modules.bounds.variance import (
    bound_bhatia_davis,
    bound_cor31,
    bound_thm34,
    variance_functionals,
    variance_maps,
)
from modules.matrix.matrix import ComplexMatrix, SpectralInterval, classify
from modules.pulm.functionals import PulFunctional
from modules.pulm.maps import PulMap

logger = logging.getLogger(__name__)


@dataclass
class BoundContext:
    A: ComplexMatrix
    B: ComplexMatrix
    power_set: bool = False
    interval: SpectralInterval | None = None
    memo: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.A.n

    @property
    def class_a(self):
        return classify(self.A)

    @property
    def class_b(self):
        return classify(self.B)

    @property
    def pair_digest(self) -> str:
        return pair_digest(self.A, self.B)


def _hermitian_pair(ctx: BoundContext) -> str:
    if not (ctx.class_a.is_hermitian and ctx.class_b.is_hermitian):
        return "requires Hermitian A and B"
    return ""


def _needs_n2(ctx: BoundContext) -> str:
    return "requires n >= 2" if ctx.n < 2 else ""


def _pairs(n: int):
    return list(combinations(range(1, n + 1), 2))


# --- Runners ---

def _run_eq11(ctx):
    return _run_bhatia_davis(ctx, "eq1.1")


def _run_eq310(ctx):
    return _run_bhatia_davis(ctx, "eq3.10")


def _run_bhatia_davis(ctx, name):
    if not ctx.class_a.is_hermitian:
        return [inapplicable(name, "requires Hermitian A", ctx.A.digest(), UPPER)]
    if "bhatia_davis" not in ctx.memo:
        ctx.memo["bhatia_davis"] = [
            r for Phi in variance_functionals(ctx.n) + variance_maps(ctx.n)
            for r in bound_bhatia_davis(ctx.A, Phi, ctx.interval)
        ]
    return [r for r in ctx.memo["bhatia_davis"] if r.name == name]


def _run_eq14(ctx):
    reason = _hermitian_pair(ctx)
    if reason:
        return [inapplicable("eq1.4-lower", reason, ctx.pair_digest),
                inapplicable("eq1.4-upper", reason, ctx.pair_digest, UPPER)]
    return bound_weyl(ctx.A, ctx.B)


def _run_thm21(ctx):
    return [bound_thm21_catalog(ctx.A, ctx.B)]


def _run_eq27(ctx):
    return [bound_diag_pair(ctx.A, ctx.B)]


def _run_eq28(ctx):
    return [bound_diag_refinement(ctx.A)]


def _run_thm22(ctx):
    reason = _hermitian_pair(ctx)
    if reason:
        return [inapplicable("thm2.2", reason, ctx.pair_digest)]
    return [bound_thm22_best(ctx.A, ctx.B)]


def _run_eq25(ctx):
    reason = _hermitian_pair(ctx) or _needs_n2(ctx)
    if reason:
        return [inapplicable("eq2.5", reason, ctx.pair_digest)]
    return [bound_eq25(ctx.A, ctx.B)]


def _run_eq29(ctx):
    reason = _hermitian_pair(ctx) or _needs_n2(ctx)
    if reason:
        return [inapplicable("eq2.9", reason, ctx.pair_digest)]
    return [bound_mirsky_pair(ctx.A, ctx.B, i, j) for i, j in _pairs(ctx.n)]


def _run_eq29_diag(ctx):
    reason = ("requires Hermitian A" if not ctx.class_a.is_hermitian else "") or _needs_n2(ctx)
    if reason:
        return [inapplicable("eq2.9-diag", reason, ctx.A.digest())]
    return [bound_mirsky_diag(ctx.A, i, j) for i, j in _pairs(ctx.n)]


def _run_eq210(ctx):
    family = default_index_family(ctx.n, ctx.power_set)
    return [bound_index_sets(ctx.A, ctx.B, family)]


def _run_eq211(ctx):
    reason = _needs_n2(ctx)
    if reason:
        return [inapplicable("eq2.11", reason, ctx.pair_digest)]
    return [bound_cor24(ctx.A, ctx.B)]


def _run_eq212(ctx):
    reason = _needs_n2(ctx)
    if reason:
        return [inapplicable("eq2.12", reason, ctx.pair_digest)]
    return [bound_cor25(ctx.A, ctx.B, i, j) for i, j in _pairs(ctx.n)]


def _run_cor25_mean(ctx):
    reason = _needs_n2(ctx)
    if reason:
        return [inapplicable("cor2.5-mean", reason, ctx.A.digest())]
    return [bound_mean_vs_pairdiag(ctx.A)]


def _run_reim(ctx):
    return [bound_reim_split(ctx.A)]


def _run_split(ctx):
    return [bound_offdiag_split(ctx.A)]


def _normal_single(ctx) -> str:
    if ctx.n < 2:
        return "requires n >= 2"
    if not ctx.class_a.is_normal:
        return "requires normal A"
    return ""


def _run_thm31(ctx):
    reason = _normal_single(ctx)
    if reason:
        return [inapplicable("thm3.1", reason, ctx.A.digest())]
    return [spread_lower_normal(ctx.A)]


def _run_eq34(ctx):
    reason = _normal_single(ctx)
    if reason:
        return [inapplicable("eq3.4", reason, ctx.A.digest())]
    functionals = [PulFunctional.mean_all(ctx.n)] + [PulFunctional.diag(i, ctx.n) for i in range(1, ctx.n + 1)]
    return [spread_lower_functional(ctx.A, phi) for phi in functionals]


def _run_thm32(ctx):
    reason = _normal_single(ctx)
    if reason:
        return [inapplicable("thm3.2", reason, ctx.A.digest())]
    return [spread_refined_thm32(ctx.A)]


def _run_eq37(ctx):
    reason = ""
    if ctx.n < 2:
        reason = "requires n >= 2"
    elif not ctx.class_a.is_pd:
        reason = "requires positive definite A"
    if reason:
        digest = ctx.A.digest()
        return [inapplicable("eq3.7-lower", reason, digest),
                inapplicable("eq3.7-upper", reason, digest, UPPER),
                inapplicable("eq3.7-cond", reason, digest)]
    results = []
    maps = [PulMap.identity(ctx.n), PulMap.trace_complement(ctx.n), PulMap.diagonal_restriction(ctx.n),
            PulMap.functional_lift(PulFunctional.mean_all(ctx.n))]
    for Phi in maps:
        triple, _ = det_ratio_bounds(ctx.A, Phi, ctx.interval)
        results += triple
    return results


def _run_thm34(ctx):
    return [bound_thm34(ctx.A, Phi, ctx.interval)
            for Phi in variance_functionals(ctx.n) + variance_maps(ctx.n)]


def _run_eq315(ctx):
    return [bound_cor31(ctx.A, phi, ctx.interval) for phi in variance_functionals(ctx.n)]


REGISTRY = {
    "eq1.1": _run_eq11,
    "eq1.4": _run_eq14,
    "thm2.1": _run_thm21,
    "eq2.7": _run_eq27,
    "eq2.8": _run_eq28,
    "thm2.2": _run_thm22,
    "eq2.5": _run_eq25,
    "eq2.9": _run_eq29,
    "eq2.9-diag": _run_eq29_diag,
    "eq2.10": _run_eq210,
    "eq2.11": _run_eq211,
    "eq2.12": _run_eq212,
    "cor2.5-mean": _run_cor25_mean,
    "cor2.1-reim": _run_reim,
    "cor2.1-split": _run_split,
    "thm3.1": _run_thm31,
    "eq3.4": _run_eq34,
    "thm3.2": _run_thm32,
    "eq3.7": _run_eq37,
    "eq3.10": _run_eq310,
    "thm3.4": _run_thm34,
    "eq3.15": _run_eq315,
}


def resolve_selection(selection) -> list[str]:
    """Registry keys for "all", a comma-separated string, or a list of names/aliases.

    Raises:
        ContractError: unknown bound name
    """
    if selection is None or selection == "all":
        return list(REGISTRY)
    if isinstance(selection, str):
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    keys = []
    for name in selection:
        if name == "all":
            return list(REGISTRY)
        key = name if name in REGISTRY else SELECTION_ALIASES.get(name)
        if key is None:
            raise ContractError(f"Unknown bound '{name}'. Known: {', '.join(REGISTRY)}")
        if key not in keys:
            keys.append(key)
    return keys


def run_bounds(
    A: ComplexMatrix,
    B: ComplexMatrix | None = None,
    selection="all",
    power_set: bool = False,
    interval: SpectralInterval | None = None,
) -> list[BoundResult]:
    """Evaluate the selected bounds on (A, B); B defaults to A.

    Raises:
        DimensionError: A and B differ in size
        ContractError: unknown selection
    """
    if B is None:
        B = A
    if A.n != B.n:
        raise DimensionError(f"Dimension mismatch: {A.n} vs {B.n}")
    keys = resolve_selection(selection)
    ctx = BoundContext(A=A, B=B, power_set=power_set, interval=interval)

    results = []
    for key in keys:
        produced = REGISTRY[key](ctx)
        logger.debug(f"{key}: {len(produced)} result(s)")
        results.extend(produced)
    return results
