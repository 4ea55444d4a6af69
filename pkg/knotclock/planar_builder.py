"""
Assemble knot diagrams from crossings and wires.

A crossing has four ports NE, NW, SW, SE in counterclockwise order, which
become rotation slots 0..3. Wires join ports directly or pass through
auxiliary points (cap ends, closure arcs). `build` resolves the wires into
edges, orients the knot starting from slot 0 of crossing 0, labels the
edges 1..2n along that orientation and hands the result to the crossing
code validator, so a builder can never emit a non-planar code.
"""
import logging
from typing import NamedTuple, Optional, Union

from knotclock.constants import SLOTS_PER_VERTEX
from knotclock.diagram_core import Diagram, alternating_over_strands, universe_from_crossings
from knotclock.error_handling import DiagramParseError, GeneratorError
from knotclock.kc_types import Dart

logger = logging.getLogger(__name__)

PORTS = {"NE": 0, "NW": 1, "SW": 2, "SE": 3}

# Over-strand parity for a crossing whose NW->SE strand goes over
NW_SE_OVER = 1
SW_NE_OVER = 0


class Point(NamedTuple):
    id: int


End = Union[Dart, Point]


class PlanarBuilder:
    def __init__(self) -> None:
        self._crossing_count = 0
        self._points = 0
        self._links: dict[End, list[End]] = {}
        self._over: dict[int, int] = {}

    @property
    def crossing_count(self) -> int:
        return self._crossing_count

    def crossing(self, over: Optional[int] = None) -> int:
        """Add a crossing; `over` is the parity of its over-strand, if known."""
        vertex = self._crossing_count
        self._crossing_count += 1
        if over is not None:
            self._over[vertex] = over
        return vertex

    def port(self, vertex: int, name: Union[str, int]) -> Dart:
        slot = PORTS[name] if isinstance(name, str) else name % SLOTS_PER_VERTEX
        return Dart(vertex, slot)

    def point(self) -> Point:
        point = Point(self._points)
        self._points += 1
        return point

    def wire(self, a: End, b: End) -> None:
        self._links.setdefault(a, []).append(b)
        self._links.setdefault(b, []).append(a)

    def set_over(self, vertex: int, parity: int) -> None:
        self._over[vertex] = parity

    def _resolve(self) -> dict[Dart, Dart]:
        """Follow each wire from a port through auxiliary points to the port at its far end."""
        for end, links in self._links.items():
            expected = 1 if isinstance(end, Dart) else 2
            if len(links) != expected:
                raise GeneratorError(f"{end} has {len(links)} wire(s), expected {expected}")
        partner: dict[Dart, Dart] = {}
        visited_points: set[Point] = set()
        for vertex in range(self._crossing_count):
            for slot in range(SLOTS_PER_VERTEX):
                start = Dart(vertex, slot)
                if start not in self._links:
                    raise GeneratorError(f"Port {slot} of crossing {vertex} is not wired")
                if start in partner:
                    continue
                previous: End = start
                current = self._links[start][0]
                while isinstance(current, Point):
                    visited_points.add(current)
                    links = self._links[current]
                    following = links[1] if links[0] == previous else links[0]
                    previous, current = current, following
                partner[start] = current
                partner[current] = start
        if len(visited_points) != self._points:
            raise GeneratorError("Wires close into a circle with no crossing")
        return partner

    def build(self, alternating: bool = False, flips: frozenset[int] = frozenset()) -> Diagram:
        """
        Produce the validated diagram.

        With `alternating`, over-strands come from the alternating assignment;
        `flips` then lists crossings whose over-strand is switched.
        """
        n = self._crossing_count
        if n == 0:
            if self._points:
                return Diagram(universe_from_crossings([]), ())
            raise GeneratorError("Nothing to build")
        partner = self._resolve()

        label_of: dict[Dart, int] = {}
        start = Dart(0, 0)
        current = start
        label = 0
        while True:
            label += 1
            if label > 2 * n:
                raise GeneratorError("Strand walk does not close")
            head = partner[current]
            label_of[current] = label
            label_of[head] = label
            current = Dart(head.vertex, (head.slot + 2) % SLOTS_PER_VERTEX)
            if current == start:
                break
        if label != 2 * n:
            raise GeneratorError(f"Diagram has more than one component ({label} of {2 * n} edges on the first)")

        crossings = [
            tuple(label_of[Dart(vertex, slot)] for slot in range(SLOTS_PER_VERTEX))
            for vertex in range(n)
        ]
        try:
            universe = universe_from_crossings(crossings)
        except DiagramParseError as exc:
            raise GeneratorError(f"Generated code is invalid: {exc}") from exc

        if alternating:
            over = list(alternating_over_strands(universe))
        else:
            missing = [vertex for vertex in range(n) if vertex not in self._over]
            if missing:
                raise GeneratorError(f"No over-strand given for crossings {missing}")
            over = [self._over[vertex] for vertex in range(n)]
        for vertex in flips:
            over[vertex] = 1 - over[vertex]
        logger.debug("Built diagram with %d crossings", n)
        return Diagram(universe, tuple(over))
