"""
Verification suites over the embedded table and generated diagrams.

Each suite yields VerdictRecords; a check that raises is recorded as a
failure (or hypothesis-unmet) instead of stopping the sweep. Work is split
into one task per (suite, knot) and may run in a process pool; records are
sorted by (suite, target) before they are returned, so output does not
depend on scheduling.
"""
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Optional

from knotclock.alexpoly import alexander_det, permutation_term_count
from knotclock.clocknum import (
    clock_number_of_diagram,
    granny_diagram,
    two_bridge_specs,
    unmet,
    verify_example_nonprime,
    verify_lemma42,
    verify_lemma43,
    verify_lemma51,
    verify_lemma52,
    verify_main_theorem,
    verify_prop53,
    verify_two_bridge_spec,
)
from knotclock.constants import (
    DEFAULT_SEED,
    GREEDY_SAMPLES,
    SUITE_ALEXANDER,
    SUITE_ALL,
    SUITE_CLOCK_THEOREM,
    SUITE_EXAMPLE_NONPRIME,
    SUITE_LEMMA42,
    SUITE_LEMMA43,
    SUITE_LEMMA51,
    SUITE_LEMMA52,
    SUITE_MAIN,
    SUITE_ORACLE,
    SUITE_PROP53,
    SUITE_THM41,
    SUITES,
    VERDICT_FAIL,
    VERDICT_HYPOTHESIS_UNMET,
    VERDICT_PASS,
)
from knotclock.diagram_core import Universe
from knotclock.error_handling import HypothesisNotMetError, KnotClockError, NotProperError
from knotclock.generators import TwoBridgeSpec, connected_sum, gen_two_bridge
from knotclock.kc_types import StarPlacement
from knotclock.knot_table import KnotTableEntry, load_table
from knotclock.lattice import build_lattice
from knotclock.schemas import VerdictRecord, VerifySummary
from knotclock.states import find_clocked, find_counterclocked

logger = logging.getLogger(__name__)

# Largest box-list total swept by the two-bridge direction of the main suite
TWO_BRIDGE_SWEEP_CROSSINGS = 8


def _record(suite: str, target: str, ok: bool, detail: str = "", **payload) -> VerdictRecord:
    return VerdictRecord(
        suite=suite,
        target=target,
        verdict=VERDICT_PASS if ok else VERDICT_FAIL,
        detail=detail,
        payload=payload,
    )


def _guarded(suite: str, target: str, check: Callable[[], VerdictRecord]) -> VerdictRecord:
    """Run one check, turning library errors into records."""
    try:
        return check()
    except (HypothesisNotMetError, NotProperError) as exc:
        return unmet(suite, target, str(exc))
    except KnotClockError as exc:
        logger.warning("%s on %s raised %s: %s", suite, target, type(exc).__name__, exc)
        return _record(suite, target, False, f"{type(exc).__name__}: {exc}")


def _placements(entry: KnotTableEntry) -> tuple[StarPlacement, ...]:
    return entry.diagram.universe.adjacent_pairs


# ============================================================================
# Per-knot checks
# ============================================================================


def check_clock_theorem(entry: KnotTableEntry, seed: int = DEFAULT_SEED) -> list[VerdictRecord]:
    """Unique clocked/counterclocked states, full reachability, and greedy agreement from random starts."""
    universe = entry.diagram.universe
    records = []
    for stars in _placements(entry):
        target = f"{entry.name}@{stars.label()}"

        def check() -> VerdictRecord:
            lattice = build_lattice(universe, stars)
            rng = random.Random(f"{seed}:{target}")
            starts = rng.sample(lattice.states, min(GREEDY_SAMPLES, len(lattice.states)))
            for start in starts:
                if find_clocked(universe, stars, start) != lattice.clocked:
                    return _record(SUITE_CLOCK_THEOREM, target, False, f"greedy ascent from {start.describe()} missed")
                if find_counterclocked(universe, stars, start) != lattice.counterclocked:
                    return _record(SUITE_CLOCK_THEOREM, target, False, f"greedy descent from {start.describe()} missed")
            return _record(
                SUITE_CLOCK_THEOREM, target, True,
                states=len(lattice.states), arrows=len(lattice.arrows),
                height=lattice.height, directed_height=lattice.directed_height,
            )

        records.append(_guarded(SUITE_CLOCK_THEOREM, target, check))
    return records


def check_oracle(entry: KnotTableEntry) -> list[VerdictRecord]:
    """State count equals the number of nonzero permutation terms."""
    universe = entry.diagram.universe
    records = []
    for stars in _placements(entry):
        target = f"{entry.name}@{stars.label()}"

        def check() -> VerdictRecord:
            states = len(build_lattice(universe, stars).states)
            terms = permutation_term_count(universe, stars)
            return _record(
                SUITE_ORACLE, target, states == terms,
                "" if states == terms else f"{states} states vs {terms} terms",
                states=states, terms=terms,
            )

        records.append(_guarded(SUITE_ORACLE, target, check))
    return records


def check_alexander(entry: KnotTableEntry) -> list[VerdictRecord]:
    """Determinant agrees with the table at every placement."""

    def check() -> VerdictRecord:
        expected = entry.alexander
        mismatches = []
        for stars in _placements(entry):
            found = alexander_det(entry.diagram, stars).coefficients
            if found != expected:
                mismatches.append(f"{stars.label()}: {list(found)}")
        return _record(
            SUITE_ALEXANDER, entry.name, not mismatches,
            "; ".join(mismatches[:3]),
            expected=list(expected), placements=len(_placements(entry)),
        )

    return [_guarded(SUITE_ALEXANDER, entry.name, check)]


def check_thm41(entry: KnotTableEntry) -> list[VerdictRecord]:
    def check() -> VerdictRecord:
        report = clock_number_of_diagram(entry.diagram, entry.name, entry.c, entry.bridge, entry.prime)
        return report.verdicts[0]

    return [_guarded(SUITE_THM41, entry.name, check)]


def _per_placement(
    suite: str,
    entry: KnotTableEntry,
    check: Callable[[Universe, StarPlacement, str], VerdictRecord],
) -> list[VerdictRecord]:
    universe = entry.diagram.universe
    return [
        _guarded(suite, f"{entry.name}@{stars.label()}", lambda stars=stars: check(universe, stars, entry.name))
        for stars in _placements(entry)
    ]


def check_lemma42(entry: KnotTableEntry) -> list[VerdictRecord]:
    return _per_placement(SUITE_LEMMA42, entry, verify_lemma42)


def check_lemma51(entry: KnotTableEntry) -> list[VerdictRecord]:
    return _per_placement(SUITE_LEMMA51, entry, verify_lemma51)


def check_lemma52(entry: KnotTableEntry) -> list[VerdictRecord]:
    return _per_placement(
        SUITE_LEMMA52, entry,
        lambda universe, stars, name: verify_lemma52(universe, stars, entry.c, name),
    )


def check_prop53(entry: KnotTableEntry) -> list[VerdictRecord]:
    return [_guarded(SUITE_PROP53, entry.name, lambda: verify_prop53(entry.diagram.universe, entry.bridge, entry.name))]


def check_main(entry: KnotTableEntry) -> list[VerdictRecord]:
    return [_guarded(SUITE_MAIN, entry.name, lambda: verify_main_theorem([entry])[0])]


ENTRY_CHECKS: dict[str, Callable[[KnotTableEntry], list[VerdictRecord]]] = {
    SUITE_ORACLE: check_oracle,
    SUITE_ALEXANDER: check_alexander,
    SUITE_THM41: check_thm41,
    SUITE_LEMMA42: check_lemma42,
    SUITE_LEMMA51: check_lemma51,
    SUITE_LEMMA52: check_lemma52,
    SUITE_PROP53: check_prop53,
    SUITE_MAIN: check_main,
}


# ============================================================================
# Checks on generated diagrams
# ============================================================================


def check_lemma43() -> list[VerdictRecord]:
    """Connected sums keep their moves on one side; a prime diagram is outside the hypothesis."""
    trefoil = gen_two_bridge(TwoBridgeSpec((3,))).diagram
    figure_eight = gen_two_bridge(TwoBridgeSpec((2, 2))).diagram
    records = []
    for name, first, second in (("3_1#3_1", trefoil, trefoil), ("3_1#4_1", trefoil, figure_eight)):
        universe = connected_sum(first, second).diagram.universe
        for stars in universe.adjacent_pairs:
            target = f"{name}@{stars.label()}"
            records.append(_guarded(SUITE_LEMMA43, target, lambda u=universe, s=stars, n=name: verify_lemma43(u, s, n)))
    universe = trefoil.universe
    stars = universe.adjacent_pairs[0]
    records.append(_guarded(SUITE_LEMMA43, f"3_1@{stars.label()}", lambda: verify_lemma43(universe, stars, "3_1")))
    return records


def check_two_bridge_sweep(max_crossings: int = TWO_BRIDGE_SWEEP_CROSSINGS) -> list[VerdictRecord]:
    """Every box list up to `max_crossings`, in both closure parities."""
    records: dict[str, VerdictRecord] = {}
    for spec in two_bridge_specs(max_crossings):
        for form in ("odd", "even"):
            record = _guarded(SUITE_MAIN, f"{spec.label()}/{form}", lambda spec=spec, form=form: verify_two_bridge_spec(spec, form))
            # Parity rewrites map several inputs onto one box list
            records.setdefault(record.target, record)
    return list(records.values())


def check_example_nonprime() -> list[VerdictRecord]:
    records = [_guarded(SUITE_EXAMPLE_NONPRIME, "3_1#3_1", verify_example_nonprime)]

    def thm41_on_granny() -> VerdictRecord:
        summed = granny_diagram()
        report = clock_number_of_diagram(summed.diagram, "3_1#3_1", 6, prime=False)
        return report.verdicts[0]

    records.append(_guarded(SUITE_THM41, "3_1#3_1", thm41_on_granny))
    return records


# ============================================================================
# Running suites
# ============================================================================


def expand_suites(names: Iterable[str]) -> list[str]:
    selected: list[str] = []
    for name in names:
        if name == SUITE_ALL:
            return list(SUITES)
        if name not in SUITES:
            raise KnotClockError(f"Unknown suite '{name}'; expected one of {', '.join(SUITES + [SUITE_ALL])}")
        if name not in selected:
            selected.append(name)
    return selected


def _run_entry_task(task: tuple[str, str, Optional[str], int]) -> list[VerdictRecord]:
    suite, name, table_path, seed = task
    entries = load_table(Path(table_path) if table_path else None)
    entry = next(e for e in entries if e.name == name)
    if suite == SUITE_CLOCK_THEOREM:
        return check_clock_theorem(entry, seed)
    return ENTRY_CHECKS[suite](entry)


def _run_global_task(task: tuple[str, int]) -> list[VerdictRecord]:
    suite, _ = task
    if suite == SUITE_LEMMA43:
        return check_lemma43()
    if suite == SUITE_MAIN:
        return check_two_bridge_sweep()
    if suite == SUITE_EXAMPLE_NONPRIME:
        return check_example_nonprime()
    return []


def run_suites(
    names: Iterable[str],
    table_path: Optional[Path] = None,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> VerifySummary:
    """Run the named suites and return every record, sorted."""
    suites = expand_suites(names)
    entries = load_table(table_path)
    path = str(table_path) if table_path else None
    entry_tasks = [
        (suite, entry.name, path, seed)
        for suite in suites
        if suite == SUITE_CLOCK_THEOREM or suite in ENTRY_CHECKS
        for entry in entries
    ]
    global_tasks = [(suite, seed) for suite in suites if suite in (SUITE_LEMMA43, SUITE_MAIN, SUITE_EXAMPLE_NONPRIME)]
    logger.info("Running %s with seed %d (%d tasks, %d workers)", ", ".join(suites), seed,
                len(entry_tasks) + len(global_tasks), workers)

    results: list[list[VerdictRecord]]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_entry_task, entry_tasks))
            results += list(pool.map(_run_global_task, global_tasks))
    else:
        results = [_run_entry_task(task) for task in entry_tasks]
        results += [_run_global_task(task) for task in global_tasks]

    records = sorted((r for batch in results for r in batch), key=lambda r: (r.suite, r.target))
    return VerifySummary(
        seed=seed,
        records=records,
        passed=sum(r.verdict == VERDICT_PASS for r in records),
        failed=sum(r.verdict == VERDICT_FAIL for r in records),
        unmet=sum(r.verdict == VERDICT_HYPOTHESIS_UNMET for r in records),
    )
