"""
Clock numbers of diagrams and the checks that compare them with crossing
numbers, boundary counts and face sizes.

Verifiers never raise on a failed check; they return a VerdictRecord so a
sweep can continue past a bad diagram. They do raise when called outside
their hypothesis, and sweeps turn that into a hypothesis-unmet record.
"""
import logging
from typing import TYPE_CHECKING, Optional, Sequence

from knotclock.constants import (
    SUITE_LEMMA42,
    SUITE_LEMMA43,
    SUITE_LEMMA51,
    SUITE_LEMMA52,
    SUITE_MAIN,
    SUITE_EXAMPLE_NONPRIME,
    SUITE_PROP53,
    SUITE_THM41,
    VERDICT_FAIL,
    VERDICT_HYPOTHESIS_UNMET,
    VERDICT_PASS,
)
from knotclock.diagram_core import (
    Diagram,
    Universe,
    classify_boundary,
    face_stats,
    require_proper,
    shared_vertices,
    splittable_parts,
)
from knotclock.error_handling import HypothesisNotMetError
from knotclock.generators import (
    ClosureForm,
    ConnectedSum,
    TwoBridgeSpec,
    connected_sum,
    continued_fraction,
    gen_two_bridge,
)
from knotclock.kc_types import StarPlacement
from knotclock.lattice import Lattice, build_lattice, minimal_path
from knotclock.schemas import ClockInterval, ClockReport, PlacementHeight, VerdictRecord
from knotclock.states import available_moves

if TYPE_CHECKING:
    from knotclock.knot_table import KnotTableEntry

logger = logging.getLogger(__name__)


def _verdict(suite: str, target: str, ok: bool, detail: str = "", **payload) -> VerdictRecord:
    record = VerdictRecord(
        suite=suite,
        target=target,
        verdict=VERDICT_PASS if ok else VERDICT_FAIL,
        detail=detail,
        payload=payload,
    )
    if not ok:
        logger.warning("%s failed on %s: %s", suite, target, detail)
    return record


def unmet(suite: str, target: str, detail: str, **payload) -> VerdictRecord:
    return VerdictRecord(suite=suite, target=target, verdict=VERDICT_HYPOTHESIS_UNMET, detail=detail, payload=payload)


def _target(name: Optional[str], stars: Optional[StarPlacement] = None) -> str:
    base = name or "diagram"
    return f"{base}@{stars.label()}" if stars is not None else base


def placement_lattices(universe: Universe) -> list[Lattice]:
    return [build_lattice(universe, stars) for stars in universe.adjacent_pairs]


def clock_number_of_diagram(
    diagram: Diagram,
    name: Optional[str] = None,
    known_c: Optional[int] = None,
    bridge: Optional[int] = None,
    prime: bool = True,
    stars: Optional[StarPlacement] = None,
) -> ClockReport:
    """
    Lattice height for every adjacent star placement (or just `stars`) and
    their minimum, an upper bound for the clock number of the knot. With a
    known crossing number the report carries the inequality verdict too.
    """
    universe = diagram.universe
    pairs = [stars] if stars is not None else list(universe.adjacent_pairs)
    placements = []
    for pair in pairs:
        lattice = build_lattice(universe, pair)
        placements.append(PlacementHeight(
            stars=pair.label(),
            star_a=pair.star_a,
            star_b=pair.star_b,
            state_count=len(lattice.states),
            height=lattice.height,
            directed_height=lattice.directed_height,
        ))
    report = ClockReport(
        name=name,
        crossing_count=universe.n,
        known_c=known_c,
        bridge=bridge,
        prime=prime,
        placements=placements,
        min_over_stars=min((p.height for p in placements), default=None),
    )
    report.interval = clock_interval(report)
    if known_c is not None:
        report.verdicts.append(verify_inequality_thm41(report))
    logger.debug("%s: min height %s over %d placements", name or "diagram", report.min_over_stars, len(placements))
    return report


def clock_interval(report: ClockReport) -> Optional[ClockInterval]:
    """Bounds on the clock number: c(K) below for prime knots (else 1), the observed minimum above."""
    if report.min_over_stars is None:
        return None
    lower = report.known_c if report.prime and report.known_c is not None else 1
    return ClockInterval(lower=lower, upper=report.min_over_stars)


def verify_inequality_thm41(report: ClockReport) -> VerdictRecord:
    """Every placement height is at least the crossing number."""
    target = _target(report.name)
    if not report.prime or report.known_c is None:
        return unmet(
            SUITE_THM41, target, "hypothesis not met: knot is not a prime table knot",
            min_over_stars=report.min_over_stars, known_c=report.known_c,
        )
    low = [p for p in report.placements if p.height < report.known_c]
    detail = f"placement {low[0].stars} has height {low[0].height} < {report.known_c}" if low else ""
    return _verdict(
        SUITE_THM41, target, not low, detail,
        min_over_stars=report.min_over_stars, known_c=report.known_c,
    )


def verify_lemma42(universe: Universe, stars: StarPlacement, name: Optional[str] = None) -> VerdictRecord:
    """
    Participation counts along a minimal path: input and output points at
    least 1, other boundary points at least 2, interior points at least 4.

    Raises:
        NotProperError: the universe has a splittable part
    """
    boundary = classify_boundary(universe, stars)
    lattice = build_lattice(universe, stars)
    path = minimal_path(lattice)
    counts = path.participation
    ends = {boundary.input_point, boundary.output_point}

    problems = []
    for vertex, count in counts.items():
        if vertex in ends:
            needed = 1
        elif vertex in boundary.boundary_points:
            needed = 2
        else:
            needed = 4
        if count < needed:
            problems.append(f"vertex {vertex} moved {count} < {needed}")
    total = sum(counts.values())
    if total != 2 * (lattice.height - 1):
        problems.append(f"count sum {total} != 2(height-1) = {2 * (lattice.height - 1)}")

    # Lower bound on the height from the same accounting
    others = len(boundary.boundary_points - ends)
    bound = 1 + (len(ends) + 2 * others + 4 * len(boundary.interior_points)) // 2
    if universe.n >= 2 and lattice.height < bound:
        problems.append(f"height {lattice.height} below accounting bound {bound}")

    exact = all(
        counts[v] == (1 if v in ends else 2)
        for v in counts
        if v in boundary.boundary_points
    ) and not boundary.interior_points
    return _verdict(
        SUITE_LEMMA42, _target(name, stars), not problems, "; ".join(problems),
        counts={str(v): c for v, c in counts.items()},
        height=lattice.height,
        input_point=boundary.input_point,
        output_point=boundary.output_point,
        interior=sorted(boundary.interior_points),
        exact=exact,
    )


def verify_lemma43(universe: Universe, stars: StarPlacement, name: Optional[str] = None) -> VerdictRecord:
    """
    No state of the lattice admits a move joining the two sides of any
    splitting cut.

    Raises:
        HypothesisNotMetError: the universe is proper
    """
    cuts = splittable_parts(universe)
    if not cuts:
        raise HypothesisNotMetError("universe has no splittable part")
    lattice = build_lattice(universe, stars)
    crossings = []
    for index, state in enumerate(lattice.states):
        for move in available_moves(universe, state):
            for cut in cuts:
                side = cut.sides[0]
                if (move.u in side) != (move.v in side):
                    crossings.append(f"state {index} moves across edge {move.edge} over cut {cut.edges}")
    return _verdict(
        SUITE_LEMMA43, _target(name, stars), not crossings, "; ".join(crossings[:3]),
        cuts=[list(cut.edges) for cut in cuts],
        states=len(lattice.states),
    )


def verify_lemma51(universe: Universe, stars: StarPlacement, name: Optional[str] = None) -> VerdictRecord:
    """Adjacent faces of a proper universe share exactly two vertices."""
    require_proper(universe)
    shared = shared_vertices(universe, stars.star_a, stars.star_b)
    return _verdict(
        SUITE_LEMMA51, _target(name, stars), len(shared) == 2,
        f"faces share {len(shared)} vertices" if len(shared) != 2 else "",
        shared=sorted(shared),
    )


def verify_lemma52(
    universe: Universe,
    stars: StarPlacement,
    known_c: int,
    name: Optional[str] = None,
    lattice: Optional[Lattice] = None,
) -> VerdictRecord:
    """height + r_i + r_j >= 2c + 2, together with r_i + r_j - 2 <= c."""
    require_proper(universe)
    lattice = lattice or build_lattice(universe, stars)
    r_a = face_stats(universe, stars.star_a).r
    r_b = face_stats(universe, stars.star_b).r
    problems = []
    if lattice.height + r_a + r_b < 2 * known_c + 2:
        problems.append(f"{lattice.height} + {r_a} + {r_b} < {2 * known_c + 2}")
    if r_a + r_b - 2 > universe.n:
        problems.append(f"r_i + r_j - 2 = {r_a + r_b - 2} exceeds {universe.n} crossings")
    return _verdict(
        SUITE_LEMMA52, _target(name, stars), not problems, "; ".join(problems),
        height=lattice.height, r_i=r_a, r_j=r_b, c=known_c,
    )


def verify_lemma51_lemma52(
    universe: Universe,
    stars: StarPlacement,
    known_c: int,
    name: Optional[str] = None,
) -> tuple[VerdictRecord, VerdictRecord]:
    return verify_lemma51(universe, stars, name), verify_lemma52(universe, stars, known_c, name)


def two_bridge_condition(universe: Universe) -> tuple[bool, Optional[StarPlacement]]:
    """
    Whether some adjacent pair has r_i + r_j = c + 2, with the first such pair.

    Raises:
        NotProperError: the universe has a splittable part
    """
    require_proper(universe)
    for pair in universe.adjacent_pairs:
        if face_stats(universe, pair.star_a).r + face_stats(universe, pair.star_b).r == universe.n + 2:
            return True, pair
    return False, None


def verify_prop53(universe: Universe, bridge: int, name: Optional[str] = None) -> VerdictRecord:
    """The face-size condition holds exactly on the bridge-number-2 diagrams."""
    holds, witness = two_bridge_condition(universe)
    expected = bridge == 2
    detail = "" if holds == expected else f"condition is {holds} for bridge number {bridge}"
    return _verdict(
        SUITE_PROP53, _target(name), holds == expected, detail,
        holds=holds, witness=witness.label() if witness else None, bridge=bridge,
    )


def verify_main_theorem(entries: Sequence["KnotTableEntry"]) -> list[VerdictRecord]:
    """
    Clock number against crossing number on table knots.

    Two-bridge knots (standard diagrams) must reach c at their best
    placement; three-bridge knots must stay above c at every placement.
    """
    records = []
    for entry in entries:
        if not entry.prime:
            records.append(unmet(SUITE_MAIN, entry.name, "not prime"))
            continue
        report = clock_number_of_diagram(entry.diagram, entry.name, entry.c, entry.bridge)
        heights = [p.height for p in report.placements]
        if entry.bridge == 2:
            if entry.two_bridge is None:
                records.append(unmet(SUITE_MAIN, entry.name, "no standard two-bridge diagram"))
                continue
            ok = report.min_over_stars == entry.c
            detail = "" if ok else f"min height {report.min_over_stars} != c = {entry.c}"
        else:
            ok = min(heights) >= entry.c + 1
            detail = "" if ok else f"min height {min(heights)} <= c = {entry.c}"
        records.append(_verdict(
            SUITE_MAIN, entry.name, ok, detail,
            min_over_stars=report.min_over_stars, c=entry.c, bridge=entry.bridge,
        ))
    return records


def two_bridge_specs(max_crossings: int) -> list[TwoBridgeSpec]:
    """Every box list with total twist count 3..max_crossings that closes to a knot."""
    specs = []

    def extend(prefix: list[int], remaining: int) -> None:
        if prefix and sum(prefix) >= 3 and continued_fraction(prefix)[0] % 2 == 1:
            specs.append(TwoBridgeSpec(tuple(prefix)))
        for a in range(1, remaining + 1):
            extend(prefix + [a], remaining - a)

    extend([], max_crossings)
    return specs


def verify_two_bridge_spec(spec: TwoBridgeSpec, form: ClosureForm = "auto") -> VerdictRecord:
    """Standard 4-plat: the recommended placement and the best placement both give height c."""
    generated = gen_two_bridge(spec, form)
    target = f"{generated.spec.label()}/{form}"
    c = generated.spec.crossing_count
    if not generated.knotted:
        return unmet(SUITE_MAIN, target, "diagram is unknotted")
    universe = generated.diagram.universe
    holds, witness = two_bridge_condition(universe)
    if not holds or witness is None:
        return _verdict(SUITE_MAIN, target, False, "no pair with r_i + r_j = c + 2")
    recommended = build_lattice(universe, witness).height
    report = clock_number_of_diagram(generated.diagram, target, c, 2)
    ok = recommended == c and report.min_over_stars == c
    detail = "" if ok else f"recommended height {recommended}, min {report.min_over_stars}, c = {c}"
    return _verdict(
        SUITE_MAIN, target, ok, detail,
        recommended_stars=witness.label(), recommended_height=recommended,
        min_over_stars=report.min_over_stars, c=c,
    )


def granny_diagram() -> ConnectedSum:
    """Trefoil spliced with a copy of itself."""
    trefoil = gen_two_bridge(TwoBridgeSpec((3,))).diagram
    return connected_sum(trefoil, trefoil)


def nonprime_stars(summed: ConnectedSum) -> StarPlacement:
    """The two faces on either side of the lowest splice edge."""
    left, right = summed.diagram.universe.edge_faces(min(summed.splice_edges))
    return StarPlacement.of(left, right)


def verify_example_nonprime() -> VerdictRecord:
    """The granny shadow has a placement of height 5 although its crossing number is 6."""
    summed = granny_diagram()
    universe = summed.diagram.universe
    stars = nonprime_stars(summed)
    lattice = build_lattice(universe, stars)
    report = clock_number_of_diagram(summed.diagram, "3_1#3_1", 6, prime=False)
    ok = lattice.height == 5 and report.min_over_stars is not None and report.min_over_stars < 6
    return _verdict(
        SUITE_EXAMPLE_NONPRIME, "3_1#3_1", ok,
        "" if ok else f"height {lattice.height} at {stars.label()}, min {report.min_over_stars}",
        stars=stars.label(), height=lattice.height, states=len(lattice.states),
        arrows=len(lattice.arrows), min_over_stars=report.min_over_stars, c=6,
    )
