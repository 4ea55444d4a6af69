"""
knotclock command line.

Exit codes: 0 on success, 1 when a verification suite records failures,
2 on bad input (unreadable file, malformed code, invalid stars), 3 when a
runtime clock-theorem check fails.
"""
import functools
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from typer import Argument, Option, Typer

from knotclock.alexpoly import alexander_det
from knotclock.clocknum import clock_number_of_diagram
from knotclock.config import get_table_path, get_workers
from knotclock.constants import (
    DEFAULT_SEED,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    FORMAT_DOT,
    SUITE_ALL,
    VERDICT_PASS,
)
from knotclock.diagram_core import (
    Diagram,
    format_diagram,
    parse_diagram,
    parse_stars,
    universe_summary,
)
from knotclock.error_handling import ClockTheoremViolation, KnotClockError, log_error
from knotclock.generators import (
    TwoBridgeSpec,
    connected_sum,
    gen_closed_braid,
    gen_montesinos,
    gen_two_bridge,
    parse_tangle,
)
from knotclock.kc_types import StarPlacement
from knotclock.knot_table import load_table
from knotclock.lattice import build_lattice, export_lattice
from knotclock.states import enumerate_states
from knotclock.verify import run_suites

app = Typer(help="Kauffman state lattices and clock numbers of knot diagrams.", no_args_is_help=True)
gen_app = Typer(help="Generate diagrams.", no_args_is_help=True)
app.add_typer(gen_app, name="gen")

console = Console()
logger = logging.getLogger("knotclock")


def handle_errors(command: Callable) -> Callable:
    """Map library and I/O errors to the input-error exit code, clock-theorem violations to their own."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ClockTheoremViolation as exc:
            log_error(f"Internal error: {exc}", include_trace=True, exception=exc)
            raise typer.Exit(EXIT_INTERNAL_ERROR)
        except (KnotClockError, OSError) as exc:
            log_error(str(exc), include_trace=logger.isEnabledFor(logging.DEBUG), exception=exc)
            raise typer.Exit(EXIT_INPUT_ERROR)

    return wrapper


@app.callback()
def configure(verbose: bool = Option(False, "--verbose", help="Log debug output")):
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _read_diagram(path: Path) -> Diagram:
    return parse_diagram(path.read_text())


def _emit(text: str, output: Optional[Path] = None) -> None:
    if output is None:
        typer.echo(text, nl=not text.endswith("\n"))
        return
    output.write_text(text if text.endswith("\n") else text + "\n")
    console.print(f"Wrote {output}")


def _echo_json(data) -> None:
    typer.echo(json.dumps(data, indent=2))


def _stars_or_first(diagram: Diagram, stars: Optional[str]) -> StarPlacement:
    if stars:
        return parse_stars(stars)
    pairs = diagram.universe.adjacent_pairs
    if not pairs:
        raise KnotClockError("Diagram has no adjacent face pair")
    return pairs[0]


@app.command()
@handle_errors
def parse(
    file: Path = Argument(..., help="Diagram code file"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Summarize vertices, edges, faces and properness of a diagram."""
    summary = universe_summary(_read_diagram(file).universe)
    if as_json:
        _echo_json(summary)
        return
    console.print(f"{summary['vertices']} vertices, {summary['edges']} edges, {len(summary['faces'])} faces")
    table = Table("face", "r", "corners")
    for face in summary["faces"]:
        table.add_row(face["id"], str(face["r"]), str(face["corners"]))
    console.print(table)
    if summary["proper"]:
        console.print("proper")
    else:
        console.print(f"not proper (splitting edges {summary['witness']})")


@app.command()
@handle_errors
def states(
    file: Path = Argument(..., help="Diagram code file"),
    stars: str = Option(..., "--stars", help="Starred faces, e.g. F0,F1"),
    list_states: bool = Option(False, "--list", help="Print every state"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Count (and optionally list) the states of a star placement."""
    universe = _read_diagram(file).universe
    found = enumerate_states(universe, parse_stars(stars))
    if as_json:
        data = {"stars": parse_stars(stars).label(), "count": len(found)}
        if list_states:
            data["states"] = [list(state.slots) for state in found]
        _echo_json(data)
        return
    typer.echo(f"{len(found)} states")
    if list_states:
        for state in found:
            typer.echo(state.describe())


@app.command()
@handle_errors
def lattice(
    file: Path = Argument(..., help="Diagram code file"),
    stars: str = Option(..., "--stars", help="Starred faces, e.g. F0,F1"),
    fmt: str = Option(FORMAT_DOT, "--format", help="dot or json"),
    output: Optional[Path] = Option(None, "--output", "-o", help="Output file (default: stdout)"),
):
    """Export the lattice of a star placement."""
    built = build_lattice(_read_diagram(file).universe, parse_stars(stars))
    _emit(export_lattice(built, fmt), output)


@app.command()
@handle_errors
def clocknum(
    file: Path = Argument(..., help="Diagram code file"),
    stars: Optional[str] = Option(None, "--stars", help="Single star placement"),
    all_stars: bool = Option(False, "--all-stars", help="Sweep every adjacent placement (the default without --stars)"),
    name: Optional[str] = Option(None, "--name", help="Knot name for the report"),
    known_c: Optional[int] = Option(None, "--crossing-number", help="Known crossing number c(K)"),
    composite: bool = Option(False, "--composite", help="The knot is not prime"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Lattice heights over star placements and their minimum."""
    if stars and all_stars:
        raise KnotClockError("--stars and --all-stars are mutually exclusive")
    diagram = _read_diagram(file)
    placement = parse_stars(stars) if stars else None
    report = clock_number_of_diagram(
        diagram, name=name, known_c=known_c, prime=not composite, stars=placement,
    )
    if as_json:
        typer.echo(report.model_dump_json(indent=2))
        return
    table = Table("stars", "states", "height", "directed")
    for p in report.placements:
        table.add_row(p.stars, str(p.state_count), str(p.height), str(p.directed_height))
    console.print(table)
    console.print(f"min_over_stars = {report.min_over_stars}")
    if report.interval is not None:
        console.print(f"clock number in [{report.interval.lower}, {report.interval.upper}]")
    for record in report.verdicts:
        console.print(f"{record.suite}: {record.verdict} {record.detail}".rstrip())


@app.command()
@handle_errors
def verify(
    suites: List[str] = Argument(..., help=f"Suites to run, or '{SUITE_ALL}'"),
    table: Optional[Path] = Option(None, "--table", help="Knot table file (overrides KNOTCLOCK_TABLE)"),
    seed: int = Option(DEFAULT_SEED, "--seed", help="Seed for randomized start states"),
    workers: Optional[int] = Option(None, "--workers", help="Worker processes (default: KNOTCLOCK_WORKERS or 1)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Run verification suites; exit 1 if any check fails."""
    table_path = get_table_path(table) if table else None
    summary = run_suites(suites, table_path, seed, get_workers(workers))
    if as_json:
        typer.echo(summary.model_dump_json(indent=2))
    else:
        console.print(f"seed {summary.seed}")
        for record in summary.records:
            if record.verdict != VERDICT_PASS:
                console.print(f"[{record.verdict}] {record.suite} {record.target} {record.detail}")
        console.print(f"{summary.passed} passed, {summary.failed} failed, {summary.unmet} hypothesis-unmet")
    if summary.failed:
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


@app.command()
@handle_errors
def alex(
    file: Path = Argument(..., help="Diagram code file with over/under marks"),
    stars: Optional[str] = Option(None, "--stars", help="Starred faces (default: first adjacent pair)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Alexander polynomial from the crossing/face determinant."""
    diagram = _read_diagram(file)
    placement = _stars_or_first(diagram, stars)
    polynomial = alexander_det(diagram, placement)
    if as_json:
        _echo_json({"stars": placement.label(), "coefficients": list(polynomial.coefficients)})
        return
    typer.echo(str(polynomial))


@app.command(name="table")
@handle_errors
def show_table(
    table: Optional[Path] = Option(None, "--table", help="Knot table file (overrides KNOTCLOCK_TABLE)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """List the knot table; every entry shown has passed load validation."""
    entries = load_table(table)
    if as_json:
        _echo_json([
            {"name": e.name, "c": e.c, "bridge": e.bridge, "alexander": list(e.alexander), "pd": e.pd_code}
            for e in entries
        ])
        return
    listing = Table("name", "c", "bridge", "alexander", "source")
    for e in entries:
        listing.add_row(e.name, str(e.c), str(e.bridge), ",".join(map(str, e.alexander)), e.pd_code)
    console.print(listing)
    console.print(f"{len(entries)} entries from {get_table_path(table)}")


def _emit_generated(diagram: Diagram, output: Optional[Path], as_json: bool, extra: Optional[dict] = None) -> None:
    code = format_diagram(diagram)
    if as_json:
        _echo_json({"code": code, **(extra or {})})
        return
    _emit(code, output)


@gen_app.command("two-bridge")
@handle_errors
def gen_two_bridge_command(
    boxes: str = Argument(..., help="Box twist counts, e.g. 2,3"),
    odd_form: bool = Option(False, "--odd-form", help="Rewrite to an odd number of boxes"),
    even_form: bool = Option(False, "--even-form", help="Rewrite to an even number of boxes"),
    output: Optional[Path] = Option(None, "--output", "-o", help="Output file (default: stdout)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Standard 4-plat diagram of a two-bridge knot."""
    form = "odd" if odd_form else "even" if even_form else "auto"
    generated = gen_two_bridge(TwoBridgeSpec.parse(boxes), form)
    extra = {
        "boxes": list(generated.spec.box_twists),
        "fraction": list(generated.fraction),
        "knotted": generated.knotted,
        "recommended_stars": generated.recommended_stars.label() if generated.recommended_stars else None,
    }
    _emit_generated(generated.diagram, output, as_json, extra)
    if not as_json and generated.recommended_stars is not None:
        console.print(f"recommended stars: {generated.recommended_stars.label()}", style="dim", highlight=False)


@gen_app.command("sum")
@handle_errors
def gen_sum_command(
    first: Path = Argument(..., help="First summand"),
    second: Path = Argument(..., help="Second summand"),
    output: Optional[Path] = Option(None, "--output", "-o", help="Output file (default: stdout)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Connected sum of two diagrams."""
    summed = connected_sum(_read_diagram(first), _read_diagram(second))
    _emit_generated(summed.diagram, output, as_json, {"splice_edges": list(summed.splice_edges)})


@gen_app.command("braid")
@handle_errors
def gen_braid_command(
    word: str = Argument(..., help="Signed generators, e.g. 1,-2,1,-2"),
    strands: int = Option(3, "--strands", help="Number of strands"),
    output: Optional[Path] = Option(None, "--output", "-o", help="Output file (default: stdout)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Closure of a braid word."""
    try:
        letters = [int(part) for part in word.split(",") if part.strip()]
    except ValueError as exc:
        raise KnotClockError(f"Invalid braid word '{word}'") from exc
    _emit_generated(gen_closed_braid(letters, strands), output, as_json)


@gen_app.command("montesinos")
@handle_errors
def gen_montesinos_command(
    tangles: str = Argument(..., help="Tangles separated by ';', e.g. 3;21;2"),
    flip: Optional[str] = Option(None, "--flip", help="1-based tangles to switch, e.g. 3"),
    output: Optional[Path] = Option(None, "--output", "-o", help="Output file (default: stdout)"),
    as_json: bool = Option(False, "--json", help="Emit JSON"),
):
    """Montesinos diagram from rational tangles."""
    try:
        flipped = frozenset(int(part) for part in (flip or "").split(",") if part.strip())
    except ValueError as exc:
        raise KnotClockError(f"Invalid --flip '{flip}'") from exc
    diagram = gen_montesinos([parse_tangle(part) for part in tangles.split(";")], flipped)
    _emit_generated(diagram, output, as_json)


def run(argv: Optional[List[str]] = None) -> int:
    """Dispatch a command line and return its exit code instead of exiting."""
    try:
        app(args=argv, prog_name="knotclock")
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
