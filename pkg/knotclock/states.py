"""
States of a universe with fixed stars, and clock transpositions between them.

A state puts one marker in a corner of every vertex so that each
non-starred face holds exactly one marker. A state is stored as the vector
of corner slots indexed by vertex id; that vector is also its sort key.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from knotclock.constants import ERROR_NO_STATES, SLOTS_PER_VERTEX
from knotclock.diagram_core import Universe, validate_stars
from knotclock.error_handling import (
    ClockTheoremViolation,
    InvalidStateError,
    MoveNotAvailableError,
    NoStatesError,
)
from knotclock.kc_types import ClockMove, Corner, Direction, StarPlacement

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class State:
    slots: tuple[int, ...]

    @property
    def markers(self) -> tuple[Corner, ...]:
        return tuple(Corner(vertex, slot) for vertex, slot in enumerate(self.slots))

    def describe(self) -> str:
        return " ".join(f"{vertex}:{slot}" for vertex, slot in enumerate(self.slots))


def enumerate_states(universe: Universe, stars: StarPlacement) -> tuple[State, ...]:
    """
    All states for a star placement, in lexicographic slot order.

    Vertices are assigned in id order, each to a corner whose face is neither
    starred nor already taken. An empty result is a legal outcome.
    """
    validate_stars(universe, stars)
    n = universe.n
    taken: set[int] = {stars.star_a, stars.star_b}
    slots = [0] * n
    found: list[State] = []

    def place(vertex: int) -> None:
        if vertex == n:
            found.append(State(tuple(slots)))
            return
        for slot in range(SLOTS_PER_VERTEX):
            face = universe.face_of(Corner(vertex, slot))
            if face in taken:
                continue
            taken.add(face)
            slots[vertex] = slot
            place(vertex + 1)
            taken.discard(face)

    place(0)
    logger.debug("%d states for stars %s", len(found), stars.label())
    return tuple(found)


def validate_state(universe: Universe, stars: StarPlacement, state: State) -> None:
    """Raise InvalidStateError unless the markers biject onto the non-starred faces."""
    if len(state.slots) != universe.n:
        raise InvalidStateError(f"State has {len(state.slots)} markers for {universe.n} vertices")
    faces = []
    for corner in state.markers:
        if not 0 <= corner.slot < SLOTS_PER_VERTEX:
            raise InvalidStateError(f"Vertex {corner.vertex} has marker slot {corner.slot}")
        faces.append(universe.face_of(corner))
    if len(set(faces)) != len(faces):
        raise InvalidStateError("Two markers share a face")
    if stars.star_a in faces or stars.star_b in faces:
        raise InvalidStateError(f"A marker sits in a starred face ({stars.label()})")


def _step(universe: Universe, vertex: int, slot: int, direction: Direction) -> tuple[int, int]:
    """(edge crossed, face entered) when the marker at `slot` rotates one corner in `direction`."""
    if direction is Direction.CLOCKWISE:
        return universe.label_at(vertex, slot), universe.face_of(Corner(vertex, slot - 1))
    return universe.label_at(vertex, slot + 1), universe.face_of(Corner(vertex, slot + 1))


def available_moves(universe: Universe, state: State) -> list[ClockMove]:
    """
    Transpositions the state admits, ordered by edge label.

    A marker in face A that can rotate across a non-loop edge into face B
    pairs with the marker of B when that one can rotate, in the same sense,
    across a non-loop edge back into A. Both edges border A and B. On a
    proper universe they are one edge, whose endpoints carry the two markers.
    """
    if len(state.slots) != universe.n:
        raise InvalidStateError(f"State has {len(state.slots)} markers for {universe.n} vertices")
    holder = {universe.face_of(corner): corner.vertex for corner in state.markers}
    found: dict[tuple, ClockMove] = {}
    for u, u_slot in enumerate(state.slots):
        home = universe.face_of(Corner(u, u_slot))
        for direction in Direction:
            edge, entered = _step(universe, u, u_slot, direction)
            if universe.is_loop(edge) or entered == home or entered not in holder:
                continue
            v = holder[entered]
            for sense in Direction:
                other, back = _step(universe, v, state.slots[v], sense)
                if universe.is_loop(other) or back != home:
                    continue
                if sense is not direction:
                    if other == edge:
                        raise ClockTheoremViolation(
                            f"Rotation senses disagree across edge {edge}: {direction.value} at vertex "
                            f"{u}, {sense.value} at vertex {v}"
                        )
                    continue
                move = _normalized_move(universe, direction, (u, edge), (v, other))
                found.setdefault((move.edge, move.edges[1], move.direction.value), move)
    return [found[key] for key in sorted(found)]


def _normalized_move(
    universe: Universe,
    direction: Direction,
    first: tuple[int, int],
    second: tuple[int, int],
) -> ClockMove:
    (u, u_edge), (v, v_edge) = sorted((first, second), key=lambda marker: marker[1])
    if u_edge == v_edge:
        tail, head = universe.endpoints(u_edge)
        return ClockMove(u_edge, direction, tail, head)
    return ClockMove(u_edge, direction, u, v, v_edge)


def apply_move(universe: Universe, state: State, move: ClockMove) -> State:
    """Rotate the two markers of the move one corner each; every other marker stays put."""
    if move not in available_moves(universe, state):
        raise MoveNotAvailableError(f"Move across edge {move.edge} ({move.direction.value}) is not available")
    step = -1 if move.direction is Direction.CLOCKWISE else 1
    slots = list(state.slots)
    slots[move.u] = (slots[move.u] + step) % SLOTS_PER_VERTEX
    slots[move.v] = (slots[move.v] + step) % SLOTS_PER_VERTEX
    return State(tuple(slots))


def _admits(universe: Universe, state: State, direction: Direction) -> bool:
    return any(move.direction is direction for move in available_moves(universe, state))


def _sink_by_filter(universe: Universe, states: tuple[State, ...], forbidden: Direction) -> State:
    sinks = [state for state in states if not _admits(universe, state, forbidden)]
    if len(sinks) != 1:
        raise ClockTheoremViolation(
            f"Expected exactly one state without {forbidden.value} moves, found {len(sinks)}"
        )
    return sinks[0]


def _sink_by_ascent(universe: Universe, start: State, forbidden: Direction, limit: int) -> State:
    """Apply `forbidden`-sense moves (lowest edge first) until none remain."""
    state = start
    for _ in range(limit + 1):
        moves = [move for move in available_moves(universe, state) if move.direction is forbidden]
        if not moves:
            return state
        state = apply_move(universe, state, moves[0])
    raise ClockTheoremViolation(f"Greedy {forbidden.value} ascent did not terminate within {limit} moves")


def _find_sink(
    universe: Universe,
    stars: StarPlacement,
    forbidden: Direction,
    start: Optional[State],
) -> State:
    states = enumerate_states(universe, stars)
    if not states:
        raise NoStatesError(f"{ERROR_NO_STATES} ({stars.label()})")
    by_filter = _sink_by_filter(universe, states, forbidden)
    origin = start if start is not None else states[0]
    validate_state(universe, stars, origin)
    # Each move changes two markers by one slot; the rank is bounded by 2n per vertex
    by_ascent = _sink_by_ascent(universe, origin, forbidden, limit=len(states) * max(universe.n, 1))
    if by_filter != by_ascent:
        raise ClockTheoremViolation(
            f"Filter and greedy ascent disagree: {by_filter.describe()} vs {by_ascent.describe()}"
        )
    return by_filter


def find_clocked(universe: Universe, stars: StarPlacement, start: Optional[State] = None) -> State:
    """The unique state admitting no counterclockwise transposition."""
    return _find_sink(universe, stars, Direction.COUNTERCLOCKWISE, start)


def find_counterclocked(universe: Universe, stars: StarPlacement, start: Optional[State] = None) -> State:
    """The unique state admitting no clockwise transposition."""
    return _find_sink(universe, stars, Direction.CLOCKWISE, start)
