"""
The clock lattice of a star placement: states as nodes, clockwise
transpositions as arrows from the clocked state down to the counterclocked
state.
"""
import logging
from collections import Counter, deque
from dataclasses import dataclass

import networkx as nx
from pydantic import ValidationError

from knotclock.constants import ERROR_NO_STATES, EXPORT_FORMATS, FORMAT_DOT, FORMAT_JSON
from knotclock.diagram_core import Universe
from knotclock.error_handling import (
    ClockTheoremViolation,
    LatticeFormatError,
    NoStatesError,
    UnknownFormatError,
)
from knotclock.kc_types import ClockMove, Direction, LatticeArrow, StarPlacement
from knotclock.schemas import LatticeArrowModel, LatticeModel, LatticeStateModel
from knotclock.states import (
    State,
    apply_move,
    available_moves,
    enumerate_states,
    find_clocked,
    find_counterclocked,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lattice:
    stars: StarPlacement
    states: tuple[State, ...]
    arrows: tuple[LatticeArrow, ...]
    clocked_index: int
    counterclocked_index: int
    # Node count of a shortest clocked-to-counterclocked path, ignoring arrow direction
    height: int
    directed_height: int

    @property
    def clocked(self) -> State:
        return self.states[self.clocked_index]

    @property
    def counterclocked(self) -> State:
        return self.states[self.counterclocked_index]

    def to_graph(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(range(len(self.states)))
        for arrow in self.arrows:
            G.add_edge(arrow.source, arrow.target, edge=arrow.label())
        return G


@dataclass(frozen=True)
class MinimalPath:
    """A shortest clocked-to-counterclocked walk and how often each vertex moves on it."""
    moves: tuple[ClockMove, ...]
    states: tuple[State, ...]
    participation: dict[int, int]

    @property
    def length(self) -> int:
        return len(self.moves)


def _heights(G: nx.DiGraph, source: int, target: int) -> tuple[int, int]:
    undirected = nx.shortest_path_length(G.to_undirected(as_view=True), source, target) + 1
    try:
        directed = nx.shortest_path_length(G, source, target) + 1
    except nx.NetworkXNoPath as exc:
        raise ClockTheoremViolation("Counterclocked state is not reachable along arrows") from exc
    return undirected, directed


def build_lattice(universe: Universe, stars: StarPlacement) -> Lattice:
    """
    Enumerate states, connect them by clockwise transpositions, and check
    that everything is reachable from the clocked state.
    """
    states = enumerate_states(universe, stars)
    if not states:
        raise NoStatesError(f"{ERROR_NO_STATES} ({stars.label()})")
    index = {state: i for i, state in enumerate(states)}
    clocked = find_clocked(universe, stars)
    counterclocked = find_counterclocked(universe, stars)

    arrows: list[LatticeArrow] = []
    seen = {index[clocked]}
    queue = deque([clocked])
    while queue:
        state = queue.popleft()
        for move in available_moves(universe, state):
            if move.direction is not Direction.CLOCKWISE:
                continue
            target = apply_move(universe, state, move)
            if target not in index:
                raise ClockTheoremViolation(f"Move across edge {move.edge} leaves the state set")
            arrows.append(LatticeArrow(index[state], index[target], move.edge, move.other_edge))
            if index[target] not in seen:
                seen.add(index[target])
                queue.append(target)
    if len(seen) != len(states):
        raise ClockTheoremViolation(
            f"{len(states) - len(seen)} of {len(states)} states unreachable from the clocked state"
        )

    arrows.sort()
    G = nx.DiGraph()
    G.add_nodes_from(range(len(states)))
    G.add_edges_from((arrow.source, arrow.target) for arrow in arrows)
    sources = [node for node in G if G.in_degree(node) == 0]
    sinks = [node for node in G if G.out_degree(node) == 0]
    if sources != [index[clocked]] or sinks != [index[counterclocked]]:
        raise ClockTheoremViolation(f"Lattice has sources {sources} and sinks {sinks}")

    height, directed_height = _heights(G, index[clocked], index[counterclocked])
    if height != directed_height:
        logger.warning(
            "Stars %s: undirected height %d differs from directed height %d",
            stars.label(), height, directed_height,
        )
    logger.debug("Stars %s: %d states, %d arrows, height %d", stars.label(), len(states), len(arrows), height)
    return Lattice(
        stars=stars,
        states=states,
        arrows=tuple(arrows),
        clocked_index=index[clocked],
        counterclocked_index=index[counterclocked],
        height=height,
        directed_height=directed_height,
    )


def lattice_height(lattice: Lattice) -> int:
    return lattice.height


def _move_between(lattice: Lattice, source: int, target: int, arrow: LatticeArrow, direction: Direction) -> ClockMove:
    a, b = lattice.states[source].slots, lattice.states[target].slots
    moved = [vertex for vertex in range(len(a)) if a[vertex] != b[vertex]]
    if len(moved) != 2:
        raise ClockTheoremViolation(f"States {source} and {target} differ in {len(moved)} markers")
    return ClockMove(arrow.edge, direction, moved[0], moved[1], arrow.other_edge)


def minimal_path(lattice: Lattice) -> MinimalPath:
    """
    Shortest path from clocked to counterclocked, arrows usable both ways.

    Ties between equally short paths go to the lowest state index, then the
    lowest edge label. Steps taken against an arrow are counterclockwise.
    """
    neighbours: dict[int, list[tuple[int, LatticeArrow, Direction]]] = {i: [] for i in range(len(lattice.states))}
    for arrow in lattice.arrows:
        neighbours[arrow.source].append((arrow.target, arrow, Direction.CLOCKWISE))
        neighbours[arrow.target].append((arrow.source, arrow, Direction.COUNTERCLOCKWISE))
    for options in neighbours.values():
        options.sort(key=lambda option: (option[0], option[1].edge))

    start, goal = lattice.clocked_index, lattice.counterclocked_index
    parent: dict[int, tuple[int, LatticeArrow, Direction]] = {}
    visited = {start}
    queue = deque([start])
    while queue and goal not in visited:
        node = queue.popleft()
        for target, arrow, direction in neighbours[node]:
            if target in visited:
                continue
            visited.add(target)
            parent[target] = (node, arrow, direction)
            queue.append(target)

    steps: list[ClockMove] = []
    nodes = [goal]
    node = goal
    while node != start:
        previous, arrow, direction = parent[node]
        steps.append(_move_between(lattice, previous, node, arrow, direction))
        nodes.append(previous)
        node = previous
    steps.reverse()
    nodes.reverse()

    counts = Counter({vertex: 0 for vertex in range(len(lattice.clocked.slots))})
    for step in steps:
        counts[step.u] += 1
        counts[step.v] += 1
    return MinimalPath(
        moves=tuple(steps),
        states=tuple(lattice.states[i] for i in nodes),
        participation=dict(sorted(counts.items())),
    )


def lattice_to_model(lattice: Lattice) -> LatticeModel:
    return LatticeModel(
        stars=(lattice.stars.star_a, lattice.stars.star_b),
        states=[LatticeStateModel(index=i, slots=list(state.slots)) for i, state in enumerate(lattice.states)],
        arrows=[
            LatticeArrowModel(source=a.source, target=a.target, edge=a.edge, other_edge=a.other_edge)
            for a in lattice.arrows
        ],
        clocked=lattice.clocked_index,
        counterclocked=lattice.counterclocked_index,
        height=lattice.height,
        directed_height=lattice.directed_height,
    )


def _export_dot(lattice: Lattice) -> str:
    lines = ["digraph lattice {", "\trankdir=TB;", "\tnode [shape=box];"]
    for i, state in enumerate(lattice.states):
        lines.append(f'\t"s{i}" [label="{state.describe()}"];')
    lines.append(f'\t{{ rank = min; "s{lattice.clocked_index}"; }}')
    lines.append(f'\t{{ rank = max; "s{lattice.counterclocked_index}"; }}')
    for arrow in lattice.arrows:
        lines.append(f'\t"s{arrow.source}" -> "s{arrow.target}" [label="{arrow.label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_lattice(lattice: Lattice, fmt: str = FORMAT_DOT) -> str:
    """Render the lattice as Graphviz DOT or JSON."""
    if fmt == FORMAT_DOT:
        return _export_dot(lattice)
    if fmt == FORMAT_JSON:
        return lattice_to_model(lattice).model_dump_json(indent=2) + "\n"
    raise UnknownFormatError(f"Unknown lattice format '{fmt}'; expected one of {', '.join(EXPORT_FORMATS)}")


def lattice_from_json(text: str) -> Lattice:
    """
    Rebuild a lattice from its JSON export.

    Raises:
        LatticeFormatError: the text is not a lattice export, state indices
            are not 0..len(states)-1, or an arrow or the clocked and
            counterclocked indices point outside the state list
    """
    try:
        model = LatticeModel.model_validate_json(text)
    except ValidationError as exc:
        raise LatticeFormatError(f"Not a lattice export: {exc.error_count()} validation errors") from exc
    count = len(model.states)
    indices = sorted(s.index for s in model.states)
    if indices != list(range(count)):
        raise LatticeFormatError(f"State indices must be 0..{count - 1}, got {indices}")
    for field, value in (("clocked", model.clocked), ("counterclocked", model.counterclocked)):
        if not 0 <= value < count:
            raise LatticeFormatError(f"{field} index {value} is outside 0..{count - 1}")
    for arrow in model.arrows:
        if not (0 <= arrow.source < count and 0 <= arrow.target < count):
            raise LatticeFormatError(f"Arrow {arrow.source} -> {arrow.target} is outside 0..{count - 1}")
    return Lattice(
        stars=StarPlacement.of(*model.stars),
        states=tuple(State(tuple(s.slots)) for s in sorted(model.states, key=lambda s: s.index)),
        arrows=tuple(LatticeArrow(a.source, a.target, a.edge, a.other_edge) for a in model.arrows),
        clocked_index=model.clocked,
        counterclocked_index=model.counterclocked,
        height=model.height,
        directed_height=model.directed_height,
    )


def lattice_isomorphic(first: Lattice, second: Lattice) -> bool:
    """Structural comparison of two lattices as directed graphs."""
    return nx.is_isomorphic(first.to_graph(), second.to_graph())
