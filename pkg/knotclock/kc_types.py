from enum import Enum
from typing import NamedTuple, Optional

from knotclock.error_handling import StarPlacementError


class Dart(NamedTuple):
    """One end of an edge: the rotation slot it occupies at a vertex."""
    vertex: int
    slot: int


class Corner(NamedTuple):
    """The wedge at `vertex` between rotation slots `slot` and `slot + 1` (mod 4)."""
    vertex: int
    slot: int


class Direction(Enum):
    CLOCKWISE = "clockwise"
    COUNTERCLOCKWISE = "counterclockwise"

    def reversed(self) -> "Direction":
        if self is Direction.CLOCKWISE:
            return Direction.COUNTERCLOCKWISE
        return Direction.CLOCKWISE


class StarPlacement(NamedTuple):
    """Unordered pair of faces carrying the stars, stored in ascending order."""
    star_a: int
    star_b: int

    @classmethod
    def of(cls, f1: int, f2: int) -> "StarPlacement":
        if f1 == f2:
            raise StarPlacementError(f"Stars must sit in two distinct faces (got F{f1} twice)")
        return cls(min(f1, f2), max(f1, f2))

    def __contains__(self, face: object) -> bool:
        return face == self.star_a or face == self.star_b

    def label(self) -> str:
        return f"F{self.star_a},F{self.star_b}"


class BoundaryClassification(NamedTuple):
    input_point: int
    output_point: int
    boundary_points: frozenset[int]
    interior_points: frozenset[int]
    # Same walk in the reverse direction, exposed for inspection
    reversed_input_point: int
    reversed_output_point: int


class ClockMove(NamedTuple):
    """
    Two markers in adjacent faces rotating one corner each in the same sense.

    The marker at `u` crosses `edge` and the marker at `v` crosses
    `other_edge`. On a proper universe both cross the same edge and
    `other_edge` is None; across a splittable part they may cross two
    different edges shared by the same pair of faces.
    """
    edge: int
    direction: Direction
    u: int
    v: int
    other_edge: Optional[int] = None

    @property
    def edges(self) -> tuple[int, int]:
        return (self.edge, self.edge if self.other_edge is None else self.other_edge)

    def reversed(self) -> "ClockMove":
        return ClockMove(self.edge, self.direction.reversed(), self.u, self.v, self.other_edge)


class FaceStats(NamedTuple):
    r: int
    corner_count: int


class LatticeArrow(NamedTuple):
    source: int
    target: int
    edge: int
    other_edge: Optional[int] = None

    def label(self) -> str:
        return str(self.edge) if self.other_edge is None else f"{self.edge}/{self.other_edge}"
