"""
SpectralBounds: spectral perturbation and spread bounds with a certified eigen oracle.
CLI entry point.

Exit codes: 0 = every applicable inequality holds, 1 = usage/parse/contract error,
2 = an inequality (or golden check) was violated.
"""

import json
import logging
import sys

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


def setup_logging(level: str = "INFO"):
    """Configure logging with Rich handler on stderr, keeping stdout for JSON."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, rich_tracebacks=True)],
        force=True,
    )


class BoundsGroup(click.Group):
    """Click group that maps usage errors to exit code 1."""

    def main(self, *args, standalone_mode=True, **kwargs):
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.exceptions.Abort:
            err_console.print("[yellow]Aborted.[/yellow]")
            sys.exit(EXIT_USAGE)


def _fail(command: str, error: Exception):
    from core.audit import log_action

    err_console.print(f"[bold red]Error:[/bold red] {error}")
    log_action("harness", f"{command}_failed", {"error": str(error)}, severity="error")
    sys.exit(EXIT_USAGE)


def _load(path: str):
    from modules.matrix.market import read_matrix_market

    return read_matrix_market(path)


@click.group(cls=BoundsGroup)
@click.option("--log-level", default=None, help="Override log level (DEBUG, INFO, WARNING, ERROR)")
def cli(log_level):
    """SpectralBounds: bounds on eigenvalue distances and spread, certified by an exact oracle."""
    from config.settings import LOG_LEVEL
    setup_logging(log_level or LOG_LEVEL)


@cli.command()
@click.option("--matrix", "matrix_a", required=True, type=click.Path(), help="Matrix Market file for A")
@click.option("--matrix-b", "matrix_b", default=None, type=click.Path(), help="Matrix Market file for B (default: B = A)")
@click.option("--bounds", "selection", default="all", show_default=True, help="Comma-separated bound names or 'all'")
@click.option("--json", "json_path", default=None, type=click.Path(), help="Write the report JSON here instead of stdout")
@click.option("--csv", "csv_path", default=None, type=click.Path(), help="Also write one CSV row per result")
@click.option("--power-set", is_flag=True, help="Use every nonempty index subset for eq2.10 (n <= 12)")
def report(matrix_a, matrix_b, selection, json_path, csv_path, power_set):
    """Run the selected bounds on A (and B) and report bound, exact value and slack."""
    from core.audit import log_action
    from core.errors import SpectralBoundsError
    from modules.harness.report import build_report, write_csv, write_json

    try:
        A = _load(matrix_a)
        B = _load(matrix_b) if matrix_b else None
        result = build_report(A, B, selection, power_set=power_set)
    except (SpectralBoundsError, OSError) as e:
        _fail("report", e)

    if json_path:
        write_json(result, json_path)
        _print_results_table(result.results)
        console.print(f"[green]Report written:[/green] {json_path}")
    else:
        click.echo(result.to_json())
    if csv_path:
        write_csv(result.results, csv_path)

    violations = result.violations()
    detail = {"matrix_a": result.matrix_a_digest, "matrix_b": result.matrix_b_digest,
              "results": len(result.results), "violations": len(violations)}
    if violations:
        log_action("harness", "report_violation", detail, severity="error")
        for v in violations:
            err_console.print(f"[bold red]VIOLATED[/bold red] {v.name}: bound={v.bound:.10g} exact={v.exact:.10g}")
        sys.exit(EXIT_VIOLATION)
    log_action("harness", "report_completed", detail)


def _print_results_table(results):
    table = Table(title="Bounds")
    table.add_column("name")
    table.add_column("dir")
    table.add_column("bound", justify="right")
    table.add_column("exact", justify="right")
    table.add_column("slack", justify="right")
    table.add_column("status")
    for r in results:
        if not r.applicable:
            status = f"[dim]n/a ({r.reason})[/dim]"
        elif r.holds():
            status = "[green]holds[/green]"
        else:
            status = "[red]VIOLATED[/red]"
        table.add_row(r.name, r.direction, f"{r.bound:.6g}", f"{r.exact:.6g}", f"{r.slack:.3g}", status)
    console.print(table)


@cli.command()
@click.option("--ensemble", "kind", required=True, help="hermitian_gaussian | normal_unitary_conjugated | psd | circulant")
@click.option("--n", "n", required=True, type=int, help="Matrix dimension (>= 2)")
@click.option("--trials", default=100, show_default=True, type=int, help="Number of (A, B) pairs")
@click.option("--seed", default=0, show_default=True, type=int, help="64-bit seed")
@click.option("--bounds", "selection", default="all", show_default=True, help="Comma-separated bound names or 'all'")
@click.option("--workers", default=1, show_default=True, type=int, help="Worker processes for trials")
@click.option("--json", "json_path", default=None, type=click.Path(), help="Write the summary JSON here instead of stdout")
def verify(kind, n, trials, seed, selection, workers, json_path):
    """Soundness sweep over a seeded random ensemble."""
    from pathlib import Path

    from core.audit import log_action
    from core.errors import SpectralBoundsError
    from modules.harness.ensembles import EnsembleSpec
    from modules.harness.verify import run_verify, summary_json

    try:
        spec = EnsembleSpec(kind=kind, n=n, trials=trials, seed=seed)
        summary = run_verify(spec, selection, workers=workers)
    except SpectralBoundsError as e:
        _fail("verify", e)

    text = summary_json(summary)
    if json_path:
        path = Path(json_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        console.print(f"[green]Summary written:[/green] {json_path}")
    else:
        click.echo(text)

    detail = {**spec.to_dict(), "violations": summary["total_violations"]}
    if summary["total_violations"]:
        log_action("harness", "verify_violation", detail, severity="error")
        sys.exit(EXIT_VIOLATION)
    log_action("harness", "verify_completed", detail)


@cli.command("paper-example")
@click.option("--json", "as_json", is_flag=True, help="Print machine-readable assertions")
def worked_example(as_json):
    """Reproduce the worked spread example (4.4721 <= 4.5 <= 4.5616)."""
    from core.audit import log_action
    from modules.harness.worked_example import run_worked_example

    outcome = run_worked_example()
    if as_json:
        click.echo(json.dumps(outcome, indent=2))
    else:
        low, refined, spd = outcome["chain"]
        console.print(f"{low:.4f} <= {refined:.4f} <= {spd:.4f}")
        for check in outcome["checks"]:
            mark = "[green]pass[/green]" if check["passed"] else "[red]FAIL[/red]"
            console.print(f"  {check['name']}: {check['actual']:.4f} (expected {check['expected']}) {mark}")
        mark = "[green]pass[/green]" if outcome["square_matches"] else "[red]FAIL[/red]"
        console.print(f"  A^2 matches printed matrix: {mark}")

    if not outcome["passed"]:
        log_action("harness", "worked_example_failed", {"chain": outcome["chain"]}, severity="error")
        sys.exit(EXIT_VIOLATION)
    log_action("harness", "worked_example_passed", {"chain": outcome["chain"]})


@cli.command()
@click.option("--matrix", "matrix_path", required=True, type=click.Path(), help="Matrix Market file")
@click.option("--json", "as_json", is_flag=True, help="Print JSON instead of a summary")
def classify(matrix_path, as_json):
    """Show structural class flags and the oracle spectrum."""
    from core.audit import log_action
    from core.errors import SpectralBoundsError
    from modules.harness.report import oracle_summary
    from modules.matrix.matrix import classify as classify_matrix

    try:
        A = _load(matrix_path)
        flags = classify_matrix(A)
        summary = oracle_summary(A)
    except (SpectralBoundsError, OSError) as e:
        _fail("classify", e)

    if as_json:
        click.echo(json.dumps({"digest": A.digest(), "classes": flags.to_dict(), "oracle": summary}, indent=2))
    else:
        console.print(f"\n[bold]Matrix {A.digest()}[/bold] (n={A.n})")
        for key, value in flags.to_dict().items():
            console.print(f"  {key:20s} {value}")
        console.print(f"  {'spread':20s} {summary['spread']:.10g}")
        console.print(f"  {'spectral_norm':20s} {summary['spectral_norm']:.10g}")
        console.print(f"  {'max_residual':20s} {summary['spectrum']['max_residual']:.3e}")
    log_action("harness", "classify_completed", {"digest": A.digest(), **flags.to_dict()})


@cli.command("validate-pulm")
@click.option("--descriptor", required=True, help='JSON tag, e.g. \'{"kind": "trace_complement"}\'')
@click.option("--n", "n", required=True, type=int, help="Input dimension")
@click.option("--trials", default=500, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
def validate_pulm(descriptor, n, trials, seed):
    """Check that a catalog map or functional is positive, unital and linear."""
    from core.audit import log_action
    from core.errors import SpectralBoundsError
    from modules.pulm.maps import descriptor_from_json
    from modules.pulm.validation import validate_pulm as run_validation

    try:
        data = json.loads(descriptor)
        x = descriptor_from_json(data, n)
        outcome = run_validation(x, trials=trials, seed=seed)
    except json.JSONDecodeError as e:
        _fail("validate_pulm", ValueError(f"Descriptor is not valid JSON: {e}"))
    except SpectralBoundsError as e:
        _fail("validate_pulm", e)

    click.echo(json.dumps(outcome.to_dict(), indent=2))
    if not outcome.passed:
        log_action("harness", "validate_pulm_failed", outcome.to_dict(), severity="warning")
        sys.exit(EXIT_VIOLATION)
    log_action("harness", "validate_pulm_passed", {"label": outcome.label, "n": n})


if __name__ == "__main__":
    cli()
