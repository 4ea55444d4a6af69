"""
Oriented four-valent planar maps built from crossing codes.

A crossing code lists, for every crossing, the four incident edge labels in
counterclockwise order. Labels run 1..2n along the knot orientation, so the
label sequence fixes the traversal and the rotation order fixes the planar
embedding. Everything else (faces, properness, boundary classification) is
derived from those two pieces of data.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional

import networkx as nx

from knotclock.constants import (
    COMMENT_CHAR,
    CROSSING_REGEX,
    ERROR_NON_PLANAR,
    ERROR_NOT_PROPER,
    ERROR_NOT_SINGLE_KNOT,
    ERROR_STARS_NOT_ADJACENT,
    FACE_ID_REGEX,
    SLOTS_PER_VERTEX,
)
from knotclock.error_handling import (
    DiagramParseError,
    NotProperError,
    StarPlacementError,
    UnknownFaceError,
)
from knotclock.kc_types import (
    BoundaryClassification,
    Corner,
    Dart,
    FaceStats,
    StarPlacement,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    """A region of the universe: its corners in boundary-walk order."""
    id: int
    corners: tuple[Corner, ...]

    @property
    def name(self) -> str:
        return f"F{self.id}"


@dataclass(frozen=True)
class Universe:
    """
    Oriented 4-valent planar combinatorial map.

    crossings[v][s] is the edge label occupying rotation slot s at vertex v
    (slots counterclockwise). tails[k-1] / heads[k-1] are the darts where
    edge k leaves and enters a vertex.
    """
    crossings: tuple[tuple[int, int, int, int], ...]
    tails: tuple[Dart, ...]
    heads: tuple[Dart, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> range:
        return range(1, 2 * self.n + 1)

    @cached_property
    def traversal(self) -> tuple[Dart, ...]:
        """Darts in strand order: tail of edge 1, head of edge 1, tail of edge 2, ..."""
        walk: list[Dart] = []
        for label in self.edges:
            walk.append(self.tails[label - 1])
            walk.append(self.heads[label - 1])
        return tuple(walk)

    def label_at(self, vertex: int, slot: int) -> int:
        return self.crossings[vertex][slot % SLOTS_PER_VERTEX]

    def twin(self, dart: Dart) -> Dart:
        label = self.label_at(dart.vertex, dart.slot)
        tail = self.tails[label - 1]
        if tail == dart:
            return self.heads[label - 1]
        return tail

    def is_loop(self, label: int) -> bool:
        return self.tails[label - 1].vertex == self.heads[label - 1].vertex

    def endpoints(self, label: int) -> tuple[int, int]:
        """(tail vertex, head vertex) of an edge."""
        return self.tails[label - 1].vertex, self.heads[label - 1].vertex

    def incoming_slot(self, vertex: int, parity: int) -> int:
        """Slot where the strand through slots {parity, parity+2} enters `vertex`."""
        if self.heads[self.label_at(vertex, parity) - 1] == Dart(vertex, parity):
            return parity
        return parity + 2

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return compute_faces(self)

    @cached_property
    def corner_face(self) -> dict[Corner, int]:
        mapping: dict[Corner, int] = {}
        for face in self.faces:
            for corner in face.corners:
                mapping[corner] = face.id
        return mapping

    def face_of(self, corner: Corner) -> int:
        return self.corner_face[Corner(corner.vertex, corner.slot % SLOTS_PER_VERTEX)]

    def edge_faces(self, label: int) -> tuple[int, int]:
        """(left face, right face) of an edge, looking along its orientation."""
        tail = self.tails[label - 1]
        return self.face_of(Corner(tail.vertex, tail.slot)), self.face_of(Corner(tail.vertex, tail.slot - 1))

    def face(self, face_id: int) -> Face:
        if not 0 <= face_id < len(self.faces):
            raise UnknownFaceError(f"Unknown face id F{face_id} (universe has F0..F{len(self.faces) - 1})")
        return self.faces[face_id]

    def face_vertices(self, face_id: int) -> frozenset[int]:
        return frozenset(corner.vertex for corner in self.face(face_id).corners)

    def face_edges(self, face_id: int) -> frozenset[int]:
        edges: set[int] = set()
        for corner in self.face(face_id).corners:
            edges.add(self.label_at(corner.vertex, corner.slot))
            edges.add(self.label_at(corner.vertex, corner.slot + 1))
        return frozenset(edges)

    @cached_property
    def adjacent_pairs(self) -> tuple[StarPlacement, ...]:
        """Every unordered pair of distinct faces sharing at least one edge, sorted."""
        pairs = set()
        for label in self.edges:
            left, right = self.edge_faces(label)
            if left != right:
                pairs.add(StarPlacement.of(left, right))
        return tuple(sorted(pairs))

    def to_graph(self) -> nx.MultiGraph:
        """Underlying multigraph: one node per vertex, one keyed edge per label."""
        G = nx.MultiGraph()
        G.add_nodes_from(self.vertices)
        for label in self.edges:
            u, v = self.endpoints(label)
            G.add_edge(u, v, key=label)
        return G


@dataclass(frozen=True)
class Diagram:
    """
    A universe plus optional over/under data.

    over_strand[v] is the parity p of the slot pair {p, p+2} carrying the
    over-strand at vertex v, or None when the crossing code gave no marking.
    """
    universe: Universe
    over_strand: Optional[tuple[Optional[int], ...]] = None

    @property
    def has_over_data(self) -> bool:
        return self.over_strand is not None and all(p is not None for p in self.over_strand)


@dataclass(frozen=True)
class ProperVerdict:
    proper: bool
    witness: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class SplitCut:
    """A splitting two-edge cut and the vertex sets on its two sides."""
    edges: tuple[int, int]
    sides: tuple[frozenset[int], frozenset[int]]


def _successor(label: int, edge_count: int) -> int:
    return label % edge_count + 1


def universe_from_crossings(crossings: list[tuple[int, int, int, int]]) -> Universe:
    """
    Orient a crossing code and validate it as a planar knot shadow.

    Raises:
        DiagramParseError: label multiplicities, strand order, component count
            or face count are wrong
    """
    n = len(crossings)
    edge_count = 2 * n
    if n == 0:
        return Universe((), (), ())

    uses: dict[int, int] = {}
    for crossing in crossings:
        for label in crossing:
            uses[label] = uses.get(label, 0) + 1
    for label in sorted(uses):
        if not 1 <= label <= edge_count:
            raise DiagramParseError(f"edge label {label} out of range 1..{edge_count}")
    for label in range(1, edge_count + 1):
        count = uses.get(label, 0)
        if count != 2:
            raise DiagramParseError(f"edge label {label} used {count} time(s)")

    heads: dict[int, Dart] = {}
    tails: dict[int, Dart] = {}
    ambiguous: list[tuple[int, int]] = []

    def assign(vertex: int, in_slot: int) -> None:
        out_slot = (in_slot + 2) % SLOTS_PER_VERTEX
        in_label = crossings[vertex][in_slot]
        out_label = crossings[vertex][out_slot]
        if in_label in heads or out_label in tails:
            raise DiagramParseError(f"{ERROR_NOT_SINGLE_KNOT}: edge {in_label} or {out_label} oriented twice")
        heads[in_label] = Dart(vertex, in_slot)
        tails[out_label] = Dart(vertex, out_slot)

    for vertex, crossing in enumerate(crossings):
        for parity in (0, 1):
            x, y = crossing[parity], crossing[parity + 2]
            forward = y == _successor(x, edge_count)
            backward = x == _successor(y, edge_count)
            if forward and backward:
                ambiguous.append((vertex, parity))
            elif forward:
                assign(vertex, parity)
            elif backward:
                assign(vertex, parity + 2)
            else:
                raise DiagramParseError(
                    f"{ERROR_NOT_SINGLE_KNOT}: crossing {vertex} strand ({x},{y}) does not continue the label order"
                )

    # Only a one-crossing code can leave both readings open; pick the reading
    # that keeps every label with one head and one tail.
    for vertex, parity in ambiguous:
        x = crossings[vertex][parity]
        y = crossings[vertex][parity + 2]
        if x not in heads and y not in tails:
            assign(vertex, parity)
        else:
            assign(vertex, parity + 2)

    universe = Universe(
        tuple(tuple(c) for c in crossings),
        tuple(tails[label] for label in range(1, edge_count + 1)),
        tuple(heads[label] for label in range(1, edge_count + 1)),
    )

    # The strand walk must close after exactly 2n edges
    steps = 0
    label = 1
    while True:
        head = universe.heads[label - 1]
        following = universe.label_at(head.vertex, head.slot + 2)
        if universe.tails[following - 1] != Dart(head.vertex, (head.slot + 2) % SLOTS_PER_VERTEX):
            raise DiagramParseError(f"{ERROR_NOT_SINGLE_KNOT}: strand breaks after edge {label}")
        steps += 1
        label = following
        if label == 1:
            break
    if steps != edge_count:
        raise DiagramParseError(f"{ERROR_NOT_SINGLE_KNOT}: walk closes after {steps} of {edge_count} edges")

    face_count = len(universe.faces)
    if face_count != n + 2:
        raise DiagramParseError(f"{ERROR_NON_PLANAR}: {face_count} faces for {n} vertices (expected {n + 2})")
    return universe


def parse_diagram(text: str) -> Diagram:
    """
    Parse diagram-code text into a validated Diagram.

    Each token is X(a,b,c,d) with an optional ;over=<label> suffix; '#'
    starts a comment. An empty code is the 0-crossing unknot.
    """
    crossings: list[tuple[int, int, int, int]] = []
    over_labels: list[Optional[int]] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split(COMMENT_CHAR, 1)[0]
        leftover = CROSSING_REGEX.sub(" ", line).replace(",", " ").strip()
        if leftover:
            raise DiagramParseError(f"malformed line {line_number}: unexpected text '{leftover}'")
        for match in CROSSING_REGEX.finditer(line):
            crossings.append(tuple(int(match.group(i)) for i in range(1, 5)))
            over_labels.append(int(match.group(5)) if match.group(5) else None)

    universe = universe_from_crossings(crossings)

    over_strand: Optional[tuple[Optional[int], ...]] = None
    if any(label is not None for label in over_labels):
        parities: list[Optional[int]] = []
        for vertex, label in enumerate(over_labels):
            if label is None:
                parities.append(None)
                continue
            crossing = crossings[vertex]
            if label not in crossing:
                raise DiagramParseError(f"crossing {vertex}: over label {label} is not incident to it")
            # A loop can put the label on both strands; the first slot wins
            parities.append(crossing.index(label) % 2)
        over_strand = tuple(parities)

    logger.debug("parsed diagram: %d crossings, %d faces", universe.n, len(universe.faces))
    return Diagram(universe, over_strand)


def format_diagram(diagram: Diagram) -> str:
    """Write a diagram back in the crossing-code text format."""
    universe = diagram.universe
    tokens = []
    for vertex, crossing in enumerate(universe.crossings):
        token = "X({},{},{},{})".format(*crossing)
        if diagram.over_strand is not None and diagram.over_strand[vertex] is not None:
            parity = diagram.over_strand[vertex]
            token += f";over={crossing[parity]}"
        tokens.append(token)
    return " ".join(tokens)


def compute_faces(universe: Universe) -> tuple[Face, ...]:
    """
    Trace the faces of the map.

    The corner (v, k) continues along the edge at slot k+1 and arrives at the
    corner named by that edge's other dart. Faces are numbered in order of
    their lowest corner index 4v+k.
    """
    if universe.n == 0:
        # A bare circle splits the sphere into two discs
        return (Face(0, ()), Face(1, ()))
    faces: list[Face] = []
    seen: set[Corner] = set()
    for vertex in universe.vertices:
        for slot in range(SLOTS_PER_VERTEX):
            start = Corner(vertex, slot)
            if start in seen:
                continue
            walk: list[Corner] = []
            corner = start
            while corner not in seen:
                seen.add(corner)
                walk.append(corner)
                arrival = universe.twin(Dart(corner.vertex, (corner.slot + 1) % SLOTS_PER_VERTEX))
                corner = Corner(arrival.vertex, arrival.slot)
            faces.append(Face(len(faces), tuple(walk)))
    return tuple(faces)


def is_proper(universe: Universe) -> ProperVerdict:
    """
    Decide whether the universe has no splittable part.

    A splitting circle meets the diagram in two edge points; it corresponds
    to two edges bordering the same two faces whose removal disconnects the
    graph into two parts that each hold a vertex.
    """
    cuts = splittable_parts(universe, first_only=True)
    if cuts:
        return ProperVerdict(False, cuts[0].edges)
    return ProperVerdict(True)


def splittable_parts(universe: Universe, first_only: bool = False) -> list[SplitCut]:
    """All splitting two-edge cuts, ordered by their edge labels."""
    by_faces: dict[StarPlacement, list[int]] = {}
    for label in universe.edges:
        left, right = universe.edge_faces(label)
        if left == right:
            continue
        by_faces.setdefault(StarPlacement.of(left, right), []).append(label)

    G = universe.to_graph()
    cuts: list[SplitCut] = []
    candidates = sorted(pair for labels in by_faces.values() for pair in combinations(labels, 2))
    for e, f in candidates:
        H = G.copy()
        for label in (e, f):
            u, v = universe.endpoints(label)
            H.remove_edge(u, v, key=label)
        components = list(nx.connected_components(H))
        if len(components) >= 2:
            side = frozenset(nx.node_connected_component(H, universe.tails[e - 1].vertex))
            other = frozenset(universe.vertices) - side
            cuts.append(SplitCut((e, f), (side, other)))
            if first_only:
                break
    return cuts


def require_proper(universe: Universe) -> None:
    verdict = is_proper(universe)
    if not verdict.proper:
        raise NotProperError(f"{ERROR_NOT_PROPER} Witness edges: {verdict.witness}")


def validate_stars(universe: Universe, stars: StarPlacement) -> StarPlacement:
    """Check that both starred faces exist and share an edge."""
    universe.face(stars.star_a)
    universe.face(stars.star_b)
    if stars.star_a == stars.star_b:
        raise StarPlacementError(f"Stars must sit in two distinct faces (got {stars.label()})")
    if not shared_edges(universe, stars.star_a, stars.star_b):
        raise StarPlacementError(f"{ERROR_STARS_NOT_ADJACENT} ({stars.label()})")
    return stars


def parse_stars(text: str) -> StarPlacement:
    """Parse a CLI star argument such as 'F0,F3' or '0,3'."""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise StarPlacementError(f"Expected two face ids separated by a comma, got '{text}'")
    ids = []
    for part in parts:
        match = FACE_ID_REGEX.match(part)
        if not match:
            raise StarPlacementError(f"Invalid face id '{part}'")
        ids.append(int(match.group(1)))
    return StarPlacement.of(ids[0], ids[1])


def classify_boundary(universe: Universe, stars: StarPlacement) -> BoundaryClassification:
    """
    Input, output, boundary and interior vertices for a star placement.

    The walk starts on the lowest-labelled edge shared by the starred faces
    and follows the orientation: the edge's head is the first vertex met and
    its tail the last one before the walk returns.
    """
    require_proper(universe)
    validate_stars(universe, stars)
    start = min(shared_edges(universe, stars.star_a, stars.star_b))
    tail_vertex, head_vertex = universe.endpoints(start)
    boundary = universe.face_vertices(stars.star_a) | universe.face_vertices(stars.star_b)
    interior = frozenset(universe.vertices) - boundary
    return BoundaryClassification(
        input_point=head_vertex,
        output_point=tail_vertex,
        boundary_points=boundary,
        interior_points=interior,
        reversed_input_point=tail_vertex,
        reversed_output_point=head_vertex,
    )


def face_stats(universe: Universe, face: int) -> FaceStats:
    """Distinct vertex count r and boundary-walk length of a face."""
    return FaceStats(len(universe.face_vertices(face)), len(universe.face(face).corners))


def shared_vertices(universe: Universe, f1: int, f2: int) -> frozenset[int]:
    return universe.face_vertices(f1) & universe.face_vertices(f2)


def shared_edges(universe: Universe, f1: int, f2: int) -> frozenset[int]:
    if f1 == f2:
        return universe.face_edges(f1)
    universe.face(f1)
    universe.face(f2)
    return frozenset(
        label for label in universe.edges
        if set(universe.edge_faces(label)) == {f1, f2}
    )


def alternating_over_strands(universe: Universe) -> tuple[int, ...]:
    """
    Over-strand parities that make the shadow alternating.

    Passages are numbered along the orientation; even passages go over.
    """
    over: dict[int, int] = {}
    under: set[int] = set()
    for index, label in enumerate(universe.edges):
        head = universe.heads[label - 1]
        if index % 2 == 0:
            if head.vertex in over:
                raise DiagramParseError(f"shadow admits no alternating assignment at crossing {head.vertex}")
            over[head.vertex] = head.slot % 2
        else:
            if head.vertex in under:
                raise DiagramParseError(f"shadow admits no alternating assignment at crossing {head.vertex}")
            under.add(head.vertex)
    return tuple(over[vertex] for vertex in universe.vertices)


def universe_summary(universe: Universe) -> dict:
    """Vertex/edge/face summary used by the parse command."""
    verdict = is_proper(universe)
    return {
        "vertices": universe.n,
        "edges": 2 * universe.n,
        "faces": [
            {
                "id": face.name,
                "r": face_stats(universe, face.id).r,
                "corners": face_stats(universe, face.id).corner_count,
            }
            for face in universe.faces
        ],
        "proper": verdict.proper,
        "witness": list(verdict.witness) if verdict.witness else None,
    }
