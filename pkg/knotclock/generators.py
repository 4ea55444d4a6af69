"""
Diagram families: two-bridge 4-plats, closed 3-braids, Montesinos knots,
and the connected sum of two diagrams.
"""
import logging
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

from knotclock.diagram_core import Diagram, face_stats
from knotclock.error_handling import GeneratorError
from knotclock.kc_types import Dart, StarPlacement
from knotclock.planar_builder import NW_SE_OVER, SW_NE_OVER, End, PlanarBuilder

logger = logging.getLogger(__name__)

ClosureForm = Literal["auto", "odd", "even"]


# ============================================================================
# Two-bridge knots
# ============================================================================


@dataclass(frozen=True)
class TwoBridgeSpec:
    """Twist counts a_1..a_m of the boxes of a 4-plat, left to right."""
    box_twists: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.box_twists:
            raise GeneratorError("A two-bridge spec needs at least one box")
        for a in self.box_twists:
            if a < 1:
                raise GeneratorError(f"Box twist counts must be positive (got {a})")

    @classmethod
    def parse(cls, text: str) -> "TwoBridgeSpec":
        try:
            return cls(tuple(int(part) for part in text.replace(" ", "").strip("[]").split(",") if part))
        except ValueError as exc:
            raise GeneratorError(f"Invalid box list '{text}'") from exc

    @property
    def crossing_count(self) -> int:
        return sum(self.box_twists)

    def label(self) -> str:
        return "[" + ",".join(str(a) for a in self.box_twists) + "]"


@dataclass(frozen=True)
class TwoBridgeDiagram:
    spec: TwoBridgeSpec
    diagram: Diagram
    fraction: tuple[int, int]
    # Adjacent faces whose distinct vertex counts sum to c + 2, if any
    recommended_stars: Optional[StarPlacement]

    @property
    def knotted(self) -> bool:
        return self.fraction[0] != 1


def continued_fraction(box_twists: Sequence[int]) -> tuple[int, int]:
    """(p, q) with p/q = a_1 + 1/(a_2 + 1/(... + 1/a_m))."""
    num, den = 1, 0
    for a in reversed(box_twists):
        num, den = den + num * a, num
    return num, den


def closure_form(spec: TwoBridgeSpec, form: ClosureForm) -> TwoBridgeSpec:
    """
    Rewrite a box list to the requested parity without changing the knot.

    The last box trades one twist for a new box of one twist, or a final
    one-twist box merges into its neighbour.
    """
    boxes = list(spec.box_twists)
    wants_odd = {"odd": True, "even": False}.get(form)
    if wants_odd is None or (len(boxes) % 2 == 1) == wants_odd:
        return spec
    if boxes[-1] == 1 and len(boxes) > 1:
        boxes = boxes[:-2] + [boxes[-2] + 1]
    elif boxes[-1] >= 2:
        boxes = boxes[:-1] + [boxes[-1] - 1, 1]
    else:
        raise GeneratorError(f"Box list {spec.label()} has no {form} form")
    return TwoBridgeSpec(tuple(boxes))


def _twist(builder: PlanarBuilder, open_end: dict[int, End], upper: int, over: Optional[int] = None) -> int:
    """One crossing between levels `upper` and `upper + 1`, appended on the right."""
    vertex = builder.crossing(over)
    builder.wire(open_end[upper], builder.port(vertex, "NW"))
    builder.wire(open_end[upper + 1], builder.port(vertex, "SW"))
    open_end[upper] = builder.port(vertex, "NE")
    open_end[upper + 1] = builder.port(vertex, "SE")
    return vertex


def recommended_stars(diagram: Diagram) -> Optional[StarPlacement]:
    """First adjacent pair whose faces together touch every crossing twice over: r_i + r_j = c + 2."""
    universe = diagram.universe
    for pair in universe.adjacent_pairs:
        if face_stats(universe, pair.star_a).r + face_stats(universe, pair.star_b).r == universe.n + 2:
            return pair
    return None


def gen_two_bridge(spec: TwoBridgeSpec, form: ClosureForm = "auto") -> TwoBridgeDiagram:
    """
    Standard 4-plat diagram of a box list.

    Levels run 1 (top) to 4. Odd-numbered boxes twist levels 2 and 3, even
    ones levels 1 and 2. The left end is capped (1,2),(3,4); the right end
    the same way for an odd box count, otherwise (2,3) inside (1,4).
    """
    spec = closure_form(spec, form)
    p, q = continued_fraction(spec.box_twists)
    if p % 2 == 0:
        raise GeneratorError(f"Box list {spec.label()} closes to a two-component link (p={p})")

    builder = PlanarBuilder()
    left = {level: builder.point() for level in range(1, 5)}
    open_end: dict[int, End] = dict(left)
    for index, twists in enumerate(spec.box_twists):
        upper = 2 if index % 2 == 0 else 1
        for _ in range(twists):
            _twist(builder, open_end, upper)
    right = {level: builder.point() for level in range(1, 5)}
    for level in range(1, 5):
        builder.wire(open_end[level], right[level])

    builder.wire(left[1], left[2])
    builder.wire(left[3], left[4])
    if len(spec.box_twists) % 2 == 1:
        builder.wire(right[1], right[2])
        builder.wire(right[3], right[4])
    else:
        builder.wire(right[2], right[3])
        builder.wire(right[1], right[4])

    diagram = builder.build(alternating=True)
    stars = recommended_stars(diagram)
    if p == 1:
        logger.info("Box list %s gives an unknotted diagram", spec.label())
    return TwoBridgeDiagram(spec, diagram, (p, q), stars)


# ============================================================================
# Closed braids
# ============================================================================


def gen_closed_braid(word: Sequence[int], strands: int = 3) -> Diagram:
    """
    Closure of a braid word; letter +i / -i crosses strands i and i+1.

    Positive letters put the NW->SE strand over.
    """
    if not word:
        raise GeneratorError("Braid word is empty")
    builder = PlanarBuilder()
    left = {level: builder.point() for level in range(1, strands + 1)}
    open_end: dict[int, End] = dict(left)
    for letter in word:
        generator = abs(letter)
        if letter == 0 or generator >= strands:
            raise GeneratorError(f"Braid letter {letter} out of range for {strands} strands")
        _twist(builder, open_end, generator, NW_SE_OVER if letter > 0 else SW_NE_OVER)
    for level in range(1, strands + 1):
        if open_end[level] == left[level]:
            raise GeneratorError(f"Strand {level} never crosses; the closure splits off a circle")
        builder.wire(open_end[level], left[level])
    return builder.build()


# ============================================================================
# Montesinos knots
# ============================================================================


@dataclass
class Tangle:
    """Four boundary ends of a tangle and the crossings inside it."""
    nw: End
    ne: End
    sw: End
    se: End
    crossings: list[int]


def _integer_tangle(builder: PlanarBuilder, twists: int, vertical: bool) -> Tangle:
    chain = [builder.crossing() for _ in range(twists)]
    for first, second in zip(chain, chain[1:]):
        if vertical:
            builder.wire(builder.port(first, "SW"), builder.port(second, "NW"))
            builder.wire(builder.port(first, "SE"), builder.port(second, "NE"))
        else:
            builder.wire(builder.port(first, "NE"), builder.port(second, "NW"))
            builder.wire(builder.port(first, "SE"), builder.port(second, "SW"))
    head, tail = chain[0], chain[-1]
    if vertical:
        return Tangle(builder.port(head, "NW"), builder.port(head, "NE"),
                      builder.port(tail, "SW"), builder.port(tail, "SE"), chain)
    return Tangle(builder.port(head, "NW"), builder.port(tail, "NE"),
                  builder.port(head, "SW"), builder.port(tail, "SE"), chain)


def _tangle_sum(builder: PlanarBuilder, left: Tangle, right: Tangle) -> Tangle:
    builder.wire(left.ne, right.nw)
    builder.wire(left.se, right.sw)
    return Tangle(left.nw, right.ne, left.sw, right.se, left.crossings + right.crossings)


def _tangle_stack(builder: PlanarBuilder, top: Tangle, bottom: Tangle) -> Tangle:
    builder.wire(top.sw, bottom.nw)
    builder.wire(top.se, bottom.ne)
    return Tangle(top.nw, top.ne, bottom.sw, bottom.se, top.crossings + bottom.crossings)


def rational_tangle(builder: PlanarBuilder, digits: Sequence[int]) -> Tangle:
    """
    Rational tangle from Conway digits, oriented as a Montesinos summand.

    The last digit is a vertical twist; earlier digits alternate between
    horizontal twists added on the right and vertical twists stacked below.
    """
    if not digits or any(d < 1 for d in digits):
        raise GeneratorError(f"Invalid tangle digits {list(digits)}")
    last = len(digits) - 1

    def vertical(i: int) -> bool:
        return (last - i) % 2 == 0

    tangle = _integer_tangle(builder, digits[0], vertical(0))
    for i in range(1, len(digits)):
        twist = _integer_tangle(builder, digits[i], vertical(i))
        tangle = _tangle_stack(builder, tangle, twist) if vertical(i) else _tangle_sum(builder, tangle, twist)
    return tangle


def parse_tangle(text: str) -> tuple[int, ...]:
    """Tangle digits written as a digit string ('21') or dotted ('2.1')."""
    text = text.strip()
    parts = text.split(".") if "." in text else list(text)
    try:
        return tuple(int(part) for part in parts)
    except ValueError as exc:
        raise GeneratorError(f"Invalid tangle '{text}'") from exc


def gen_montesinos(tangles: Sequence[Sequence[int]], flipped: frozenset[int] = frozenset()) -> Diagram:
    """
    Numerator closure of a row of rational tangles.

    Over-strands start alternating; tangles listed in `flipped` (1-based)
    have every crossing switched.
    """
    if len(tangles) < 2:
        raise GeneratorError("A Montesinos diagram needs at least two tangles")
    builder = PlanarBuilder()
    parts = [rational_tangle(builder, digits) for digits in tangles]
    row = parts[0]
    for part in parts[1:]:
        row = _tangle_sum(builder, row, part)
    builder.wire(row.nw, row.ne)
    builder.wire(row.sw, row.se)
    for index in flipped:
        if not 1 <= index <= len(parts):
            raise GeneratorError(f"Flipped tangle {index} out of range 1..{len(parts)}")
    flips = frozenset(vertex for index in flipped for vertex in parts[index - 1].crossings)
    return builder.build(alternating=True, flips=flips)


# ============================================================================
# Connected sum
# ============================================================================


@dataclass(frozen=True)
class ConnectedSum:
    diagram: Diagram
    # Vertex ids of the two summands inside the sum
    parts: tuple[frozenset[int], frozenset[int]]
    splice_edges: tuple[int, ...]


def _outer_edge(diagram: Diagram) -> int:
    universe = diagram.universe
    return min(universe.face_edges(0))


def connected_sum(first: Diagram, second: Diagram) -> ConnectedSum:
    """
    Splice two diagrams along an edge of each one's face F0.

    The lowest-labelled edge on F0 of each summand is cut and the ends are
    reconnected crosswise. A 0-crossing summand leaves the other unchanged.
    """
    n1, n2 = first.universe.n, second.universe.n
    if n2 == 0:
        return ConnectedSum(first, (frozenset(range(n1)), frozenset()), ())
    if n1 == 0:
        return ConnectedSum(second, (frozenset(), frozenset(range(n2))), ())

    builder = PlanarBuilder()
    cut = (_outer_edge(first), _outer_edge(second))
    ends: list[tuple[Dart, Dart]] = []
    for offset, summand, cut_label in ((0, first, cut[0]), (n1, second, cut[1])):
        universe = summand.universe
        for vertex in universe.vertices:
            over = summand.over_strand[vertex] if summand.over_strand else None
            builder.crossing(over)
        for label in universe.edges:
            tail = universe.tails[label - 1]
            head = universe.heads[label - 1]
            tail = Dart(tail.vertex + offset, tail.slot)
            head = Dart(head.vertex + offset, head.slot)
            if label == cut_label:
                ends.append((tail, head))
            else:
                builder.wire(tail, head)
    (tail1, head1), (tail2, head2) = ends
    builder.wire(tail1, head2)
    builder.wire(tail2, head1)

    has_over = first.has_over_data and second.has_over_data
    if has_over:
        diagram = builder.build()
    else:
        diagram = _build_shadow(builder)

    universe = diagram.universe
    parts = (frozenset(range(n1)), frozenset(range(n1, n1 + n2)))
    splice = tuple(
        label for label in universe.edges
        if (universe.endpoints(label)[0] in parts[0]) != (universe.endpoints(label)[1] in parts[0])
    )
    logger.debug("Connected sum spliced along edges %s", splice)
    return ConnectedSum(diagram, parts, splice)


def _build_shadow(builder: PlanarBuilder) -> Diagram:
    """Build without over/under data by borrowing a dummy assignment."""
    for vertex in range(builder.crossing_count):
        builder.set_over(vertex, 0)
    built = builder.build()
    return Diagram(built.universe, None)
