"""Command-line interface for rigid-quiver."""

import json
import logging
import shutil
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from . import __version__
from .config import Config, setup_logging
from .linalg import FieldConfig, format_representation, read_representation, write_representation
from .models import DecompositionReport, RankCriterionReport, RootListing, VerificationReport
from .quiver import Quiver, as_dim_vector, load_quiver, parse_quiver
from .rigid import generic_hom_from_decomposition, hom_root_to, rigid_multiplicities, subquot_sets
from .roots import positive_roots
from .typea import (
    build_rigid_rep,
    composite_rank_tuple,
    rank_targets,
    sink_source_data,
    verify_rank_criterion,
)
from .verification import VerificationRunner, compare_decomposition, decomposition_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3

app = typer.Typer(
    name="rigidq",
    help="Rigid representations of Dynkin quivers: decompositions, closed forms, rank checks",
    add_completion=False,
)
typea_app = typer.Typer(help="Type A: rank tuples, explicit rigid modules, rank criterion")
app.add_typer(typea_app, name="typea")

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    table = "table"
    json = "json"


class Mode(str, Enum):
    verbatim = "verbatim"
    corrected = "corrected"


# =============================================================================
# Shared option handling
# =============================================================================

QuiverFile = typer.Option(None, "--quiver", "-q", help="Quiver file (vertices/arrow lines)")
Dynkin = typer.Option(None, "--dynkin", "-D", help="Builtin quiver, e.g. A3:>< or E6")
DimOption = typer.Option(..., "-d", "--dim", help="Dimension vector, comma separated")
FormatOption = typer.Option(OutputFormat.table, "--format", "-f", help="table or json")
ConfigOption = typer.Option(None, "--config", "-c", help="Path to configuration file")
VerboseOption = typer.Option(False, "--verbose", "-v", help="Enable verbose logging")
FieldOption = typer.Option(None, "--field", help="Prime p or Q (default from config)")


@contextmanager
def _input_errors() -> Iterator[None]:
    """Turn invalid quivers, vectors and files into exit code 2."""
    try:
        yield
    except (ValueError, OverflowError, FileNotFoundError) as e:
        err_console.print(f"[red]Error: {e}[/red]")
        logger.debug("Input error", exc_info=True)
        raise typer.Exit(EXIT_INPUT)


def _setup(config_path: Optional[Path], verbose: bool) -> Config:
    with _input_errors():
        cfg = Config.load(config_path)
    if verbose:
        cfg.logging.level = "DEBUG"
    setup_logging(cfg)
    return cfg


def _resolve_quiver(quiver: Optional[Path], dynkin: Optional[str]) -> Quiver:
    if (quiver is None) == (dynkin is None):
        raise typer.BadParameter("give exactly one of --quiver and --dynkin")
    if quiver is not None:
        return load_quiver(quiver)
    return parse_quiver(dynkin)


def _parse_dims(text: str, q: Quiver) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return as_dim_vector(parts, q.n)


def _resolve_field(text: Optional[str], cfg: Config) -> FieldConfig:
    if text is not None:
        return FieldConfig.parse(text)
    if cfg.field.default == "rationals":
        return FieldConfig.rationals()
    return FieldConfig.prime(cfg.field.prime)


def _fmt(vector) -> str:
    return "(" + ",".join(str(x) for x in vector) + ")"


# =============================================================================
# Commands
# =============================================================================


@app.command()
def roots(
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    output_format: OutputFormat = FormatOption,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """List the positive roots of a Dynkin quiver.

    Examples:
        rigidq roots -D A3
        rigidq roots -q my_quiver.txt --format json
    """
    _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        system = positive_roots(q)
    listing = RootListing(
        quiver=q.descriptor,
        types=[t.name for t in q.dynkin_types],
        count=len(system),
        roots=[list(alpha) for alpha in system],
    )
    if output_format == OutputFormat.json:
        typer.echo(listing.model_dump_json(indent=2))
        return

    table = Table(title=f"{listing.count} positive roots of {q.descriptor}", show_header=True)
    table.add_column("#", justify="right")
    table.add_column("root")
    for k, alpha in enumerate(system, start=1):
        table.add_row(str(k), _fmt(alpha))
    console.print(f"Type: {' + '.join(listing.types)}")
    console.print(table)


@app.command()
def decompose(
    dim: str = DimOption,
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    mode: Mode = typer.Option(
        Mode.corrected, "--mode", help="Single-sink quivers: literal branches or general formula"
    ),
    output_format: OutputFormat = FormatOption,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Decompose the rigid representation of dimension vector d.

    Exits with 3 if the decomposition fails its own checks (only possible in
    verbatim mode).

    Examples:
        rigidq decompose -D A2 -d 2,1
        rigidq decompose -D 'A3:><' -d 1,1,1 --mode verbatim --format json
    """
    _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        d = _parse_dims(dim, q)
        report = decomposition_report(q, d, mode=mode.value)

    if output_format == OutputFormat.json:
        typer.echo(report.model_dump_json(indent=2))
    else:
        _print_decomposition(report)

    if not (report.checks.sum and report.checks.ext_free):
        raise typer.Exit(EXIT_VERIFY)


def _print_decomposition(report: DecompositionReport) -> None:
    table = Table(title=f"{report.quiver}, d = {_fmt(report.d)}", show_header=True)
    table.add_column("root")
    table.add_column("mult", justify="right")
    for summand in report.summands:
        table.add_row(_fmt(summand.root), str(summand.mult))
    console.print(table)
    if not report.summands:
        console.print("[dim]No summands (d = 0)[/dim]")

    def mark(ok: bool) -> str:
        return "[green]OK[/green]" if ok else "[red]FAIL[/red]"

    console.print(f"Sum of summands equals d: {mark(report.checks.sum)}")
    console.print(f"Ext-free support: {mark(report.checks.ext_free)}")
    if not report.support_within_bound:
        console.print("[yellow]Support has more than n roots[/yellow]")
    for witness in report.ext_witnesses:
        console.print(
            f"  Ext^1({_fmt(witness.source)}, {_fmt(witness.target)}) = {witness.ext}"
        )
    if report.discrepancies:
        table = Table(title="Literal single-sink branches vs general formula")
        for column in ("i", "j", "branch", "verbatim", "corrected"):
            table.add_column(column)
        for record in report.discrepancies:
            table.add_row(
                str(record.i), str(record.j), record.branch,
                str(record.verbatim), str(record.corrected),
            )
        console.print(table)


@app.command()
def verify(
    max_total_dim: Optional[int] = typer.Option(
        None, "--max-total-dim", min=0, help="Oracle sweep bound (overrides config)"
    ),
    samples: Optional[int] = typer.Option(
        None, "--samples", min=0, help="Random representations per semicontinuity case"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Seed (default RIGIDQ_SEED)"),
    suite: Optional[list[str]] = typer.Option(
        None, "--suite", "-s", help="Run only these suites (repeatable)"
    ),
    compare: Optional[Path] = typer.Option(
        None, "--compare", help="Re-check a 'decompose --format json' report instead"
    ),
    inject_fault: bool = typer.Option(False, "--inject-fault", hidden=True),
    output_format: OutputFormat = FormatOption,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Run the verification battery; exit 3 if any suite fails.

    Examples:
        rigidq verify
        rigidq verify --max-total-dim 10 --samples 200 --seed 7
        rigidq verify --compare report.json
    """
    cfg = _setup(config, verbose)

    if compare is not None:
        with _input_errors():
            result = compare_decomposition(compare.read_text(encoding="utf-8"))
        if output_format == OutputFormat.json:
            typer.echo(result.model_dump_json(indent=2))
        else:
            status = "[green]match[/green]" if result.passed else "[red]mismatch[/red]"
            console.print(f"{compare}: {status}")
            for witness in result.witnesses:
                console.print(f"  {witness}")
        if not result.passed:
            raise typer.Exit(EXIT_VERIFY)
        return

    with _input_errors():
        runner = VerificationRunner(
            cfg,
            seed=seed,
            max_total_dim=max_total_dim,
            samples=samples,
            inject_fault=inject_fault,
            suites=suite or None,
            show_progress=output_format == OutputFormat.table,
        )
    report = runner.run()

    if output_format == OutputFormat.json:
        typer.echo(report.model_dump_json(indent=2))
    else:
        _print_verification(report)

    if not report.passed:
        raise typer.Exit(EXIT_VERIFY)


def _print_verification(report: VerificationReport) -> None:
    console.print(
        Panel(
            f"[bold]rigidq verify[/bold]  seed={report.seed}  "
            f"max_total_dim={report.max_total_dim}  samples={report.samples}"
            + ("  [red]fault injected[/red]" if report.fault_injected else "")
        )
    )
    table = Table(show_header=True, header_style="bold")
    table.add_column("Suite")
    table.add_column("Status")
    table.add_column("Cases", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Time (s)", justify="right")
    for suite in report.suites:
        status = "[green]PASS[/green]" if suite.passed else "[red]FAIL[/red]"
        table.add_row(
            suite.name, status, str(suite.cases), str(suite.failures),
            f"{suite.elapsed_seconds:.2f}",
        )
    console.print(table)
    for suite in report.suites:
        for note in suite.notes:
            console.print(f"[dim]{suite.name}: {note}[/dim]")
        for witness in suite.witnesses:
            console.print(f"[red]{suite.name}[/red]: {witness}")
    if report.passed:
        console.print("\n[bold green]All suites passed[/bold green]")
    else:
        console.print("\n[bold red]Verification failed[/bold red]")


@app.command("sub-quot")
def sub_quot(
    root: str = typer.Option(..., "--root", "-a", help="Positive root, comma separated"),
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Show the sub and quotient dimension vectors of one indecomposable."""
    _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        alpha = _parse_dims(root, q)
        sets = subquot_sets(q, alpha)

    console.print(f"U_{_fmt(alpha)} on {q.descriptor}")
    console.print(f"Subs ({len(sets.subs)}): " + " ".join(_fmt(e) for e in sorted(sets.subs)))
    console.print(
        f"Quotients ({len(sets.quots)}): " + " ".join(_fmt(e) for e in sorted(sets.quots))
    )


@app.command()
def hom(
    dim: str = DimOption,
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Generic hom(alpha, d) for every root, by Schofield's formula and from the decomposition."""
    _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        d = _parse_dims(dim, q)
        m = rigid_multiplicities(q, d)

    table = Table(title=f"hom(alpha, {_fmt(d)}) on {q.descriptor}", show_header=True)
    table.add_column("root")
    table.add_column("formula", justify="right")
    table.add_column("from m", justify="right")
    mismatches = 0
    for alpha in positive_roots(q):
        formula = hom_root_to(q, alpha, d)
        summed = generic_hom_from_decomposition(q, alpha, m)
        mismatches += formula != summed
        style = "" if formula == summed else "[red]"
        table.add_row(_fmt(alpha), f"{style}{formula}", f"{style}{summed}")
    console.print(table)
    if mismatches:
        raise typer.Exit(EXIT_VERIFY)


# =============================================================================
# Type A
# =============================================================================


@typea_app.command("ranks")
def typea_ranks(
    dim: str = DimOption,
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    output_format: OutputFormat = FormatOption,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Rank tuple of the rigid representation of dimension d.

    'target' is rank A_ij (sources of Q(i,j) into Q^si(i,j)); 'composite' is
    the rank of the map from the sources of Q(i,j) to its sinks.
    """
    cfg = _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        d = _parse_dims(dim, q)
        data = sink_source_data(q)
        targets = rank_targets(q, d)
        rigid = build_rigid_rep(q, rigid_multiplicities(q, d), FieldConfig.prime(cfg.field.prime))
        composite = composite_rank_tuple(rigid)

    rows = [
        {
            "i": entry.i,
            "j": entry.j,
            "sources": list(entry.sources),
            "sinks": list(entry.sinks),
            "target": targets[(entry.i, entry.j)],
            "composite": composite[(entry.i, entry.j)],
        }
        for entry in data
    ]
    if output_format == OutputFormat.json:
        typer.echo(json.dumps({"quiver": q.descriptor, "d": list(d), "ranks": rows}, indent=2))
        return

    table = Table(title=f"Rank tuple for d = {_fmt(d)} on {q.descriptor}", show_header=True)
    for column in ("i", "j", "Q^so", "Q^si", "target", "composite"):
        table.add_column(column)
    for row in rows:
        table.add_row(
            str(row["i"]), str(row["j"]), _fmt(row["sources"]), _fmt(row["sinks"]),
            str(row["target"]), str(row["composite"]),
        )
    console.print(table)


@typea_app.command("build")
def typea_build(
    dim: str = DimOption,
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    field: Optional[str] = FieldOption,
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Representation file to write (default: stdout)"
    ),
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Build the rigid representation of dimension d as explicit matrices."""
    cfg = _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        d = _parse_dims(dim, q)
        rep = build_rigid_rep(q, rigid_multiplicities(q, d), _resolve_field(field, cfg))
        if output is None:
            typer.echo(format_representation(rep), nl=False)
            return
        write_representation(rep, output)
    err_console.print(f"[green]Wrote {output}[/green]")


@typea_app.command("check")
def typea_check(
    rep_file: Path = typer.Argument(..., help="Representation file ('map' blocks)"),
    dim: str = DimOption,
    quiver: Optional[Path] = QuiverFile,
    dynkin: Optional[str] = Dynkin,
    field: Optional[str] = FieldOption,
    output_format: OutputFormat = FormatOption,
    config: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
):
    """Check a representation against the rank criterion; exit 3 if it is not rigid."""
    cfg = _setup(config, verbose)
    with _input_errors():
        q = _resolve_quiver(quiver, dynkin)
        d = _parse_dims(dim, q)
        rep = read_representation(rep_file, q, d, _resolve_field(field, cfg))
        report = verify_rank_criterion(q, rep, d)

    if output_format == OutputFormat.json:
        typer.echo(report.model_dump_json(indent=2))
    else:
        _print_rank_report(report)
    if not report.passed:
        raise typer.Exit(EXIT_VERIFY)


def _print_rank_report(report: RankCriterionReport) -> None:
    table = Table(title=f"Rank criterion over {report.field}", show_header=True)
    for column in ("i", "j", "rank", "target", ""):
        table.add_column(column)
    for entry in report.entries:
        mark = "[green]ok[/green]" if entry.ok else "[red]differs[/red]"
        table.add_row(str(entry.i), str(entry.j), str(entry.rank), str(entry.target), mark)
    console.print(table)
    if report.passed:
        console.print("[bold green]Rigid: every rank matches[/bold green]")
    else:
        failures = ", ".join(f"({e.i},{e.j})" for e in report.failures)
        console.print(f"[bold red]Not rigid: ranks differ at {failures}[/bold red]")


# =============================================================================
# Housekeeping
# =============================================================================


@app.command()
def init(
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite existing config file"),
):
    """Write rigidq.yaml with the default settings."""
    config_path = Path("rigidq.yaml")
    example_path = Path(__file__).parent.parent.parent / "config.example.yaml"

    if config_path.exists() and not force:
        console.print(f"[yellow]Config file already exists: {config_path}[/yellow]")
        console.print("Use --force to overwrite.")
        raise typer.Exit(EXIT_USAGE)

    if example_path.exists():
        shutil.copy(example_path, config_path)
    else:
        config_path.write_text(_DEFAULT_CONFIG, encoding="utf-8")
    console.print(f"[green]Created config file: {config_path}[/green]")


_DEFAULT_CONFIG = """# rigid-quiver configuration

seed: 20240601

field:
  default: "prime"
  prime: 32003

oracle:
  max_total_dim: 14

verification:
  max_total_dim: 6
  samples: 200
  random_cases: 100
  closed_form_cases: 500
  single_sink_cases: 200
  structural_cases: 100
  max_rank: 8

logging:
  level: "WARNING"
"""


@app.command()
def version():
    """Show version information."""
    console.print(f"rigid-quiver v{__version__}")


def _is_click_error(error: BaseException, name: str) -> bool:
    # newer typer releases vendor click, so match the class by name
    return any(cls.__name__ == name for cls in type(error).__mro__)


def main():
    """Entry point for the CLI.

    Click reports usage errors with exit code 2, which this tool reserves for
    invalid input, so they are remapped to 1 here.
    """
    try:
        code = app(standalone_mode=False)
    except Exception as e:
        if _is_click_error(e, "UsageError"):
            e.show()
        elif _is_click_error(e, "Abort"):
            err_console.print("Aborted")
        else:
            raise
        sys.exit(EXIT_USAGE)
    sys.exit(code or EXIT_OK)


if __name__ == "__main__":
    main()
