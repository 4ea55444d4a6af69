"""
Alexander polynomial from the crossing/face matrix of a diagram.

Rows are crossings, columns are faces. Each crossing contributes one entry
per corner, weighted by which side of the two strands the corner lies on.
Deleting the columns of two adjacent faces leaves a square matrix whose
determinant is the Alexander polynomial up to a unit. The same matrix,
with each entry replaced by the number of corners that feed it, counts the
states of that star placement: every state is one nonzero term of the
expanded determinant.
"""
import logging
from dataclasses import dataclass
from typing import Union

import sympy as sp

from knotclock.constants import ERROR_MISSING_OVER, SLOTS_PER_VERTEX
from knotclock.diagram_core import Diagram, Universe, validate_stars
from knotclock.error_handling import AlexanderError
from knotclock.kc_types import Corner, StarPlacement

logger = logging.getLogger(__name__)

T = sp.Symbol("t")


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in t, coefficients listed from degree 0 upward."""
    coefficients: tuple[int, ...]

    @classmethod
    def from_expr(cls, expr: sp.Expr) -> "IntPolynomial":
        expanded = sp.expand(expr)
        if expanded == 0:
            return cls(())
        poly = sp.Poly(expanded, T)
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def normalized(self) -> "IntPolynomial":
        """Shift so the lowest degree is 0 and make the leading coefficient positive."""
        coefficients = list(self.coefficients)
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if coefficients and coefficients[-1] < 0:
            coefficients = [-c for c in coefficients]
        return IntPolynomial(tuple(coefficients))

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def at_minus_one(self) -> int:
        return sum(c * (-1) ** k for k, c in enumerate(self.coefficients))

    def to_expr(self) -> sp.Expr:
        return sum((c * T**k for k, c in enumerate(self.coefficients)), sp.Integer(0))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return str(sp.expand(self.to_expr()))


@dataclass(frozen=True)
class AlexanderMatrix:
    """Crossing/face matrix with the starred columns removed."""
    stars: StarPlacement
    columns: tuple[int, ...]
    entries: sp.Matrix
    # Number of corners of crossing i lying in face columns[j]
    support: tuple[tuple[int, ...], ...]


def _left_corners(outgoing_slot: int) -> frozenset[int]:
    # Looking along the outgoing dart, its left side holds corners d and d+1
    return frozenset({outgoing_slot % SLOTS_PER_VERTEX, (outgoing_slot + 1) % SLOTS_PER_VERTEX})


def corner_weights(diagram: Diagram, vertex: int) -> tuple[sp.Expr, ...]:
    """Weight of each of the four corners at a crossing."""
    if diagram.over_strand is None or diagram.over_strand[vertex] is None:
        raise AlexanderError(f"{ERROR_MISSING_OVER} {vertex}")
    universe = diagram.universe
    over = diagram.over_strand[vertex]
    under = 1 - over
    left_of_over = _left_corners(universe.incoming_slot(vertex, over) + 2)
    left_of_under = _left_corners(universe.incoming_slot(vertex, under) + 2)
    weights = []
    for slot in range(SLOTS_PER_VERTEX):
        by_under = slot in left_of_under
        by_over = slot in left_of_over
        if by_under and by_over:
            weights.append(T)
        elif not by_under and not by_over:
            weights.append(sp.Integer(1))
        elif by_under:
            weights.append(-T)
        else:
            weights.append(sp.Integer(-1))
    return tuple(weights)


def _corner_support(universe: Universe, stars: StarPlacement) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    validate_stars(universe, stars)
    columns = tuple(face.id for face in universe.faces if face.id not in stars)
    position = {face: j for j, face in enumerate(columns)}
    support = []
    for vertex in universe.vertices:
        row = [0] * len(columns)
        for slot in range(SLOTS_PER_VERTEX):
            face = universe.face_of(Corner(vertex, slot))
            if face in position:
                row[position[face]] += 1
        support.append(tuple(row))
    return columns, tuple(support)


def alexander_matrix(diagram: Diagram, stars: StarPlacement) -> AlexanderMatrix:
    universe = diagram.universe
    columns, support = _corner_support(universe, stars)
    position = {face: j for j, face in enumerate(columns)}
    M = sp.zeros(universe.n, len(columns))
    for vertex in universe.vertices:
        for slot, weight in enumerate(corner_weights(diagram, vertex)):
            face = universe.face_of(Corner(vertex, slot))
            if face in position:
                M[vertex, position[face]] += weight
    return AlexanderMatrix(stars, columns, M, support)


def alexander_det(diagram: Diagram, stars: StarPlacement) -> IntPolynomial:
    """
    Normalized Alexander polynomial from one star placement.

    Raises:
        AlexanderError: over/under data missing, or the determinant vanishes
    """
    universe = diagram.universe
    if universe.n == 0:
        return IntPolynomial((1,))
    matrix = alexander_matrix(diagram, stars)
    det = matrix.entries.det(method="bareiss")
    polynomial = IntPolynomial.from_expr(det).normalized()
    if polynomial.is_zero:
        raise AlexanderError(f"Determinant vanishes for stars {stars.label()}")
    logger.debug("Alexander determinant for %s: %s", stars.label(), polynomial)
    return polynomial


def alexander_polynomial(diagram: Diagram) -> IntPolynomial:
    """Alexander polynomial using the first adjacent star placement."""
    universe = diagram.universe
    if universe.n == 0:
        return IntPolynomial((1,))
    return alexander_det(diagram, universe.adjacent_pairs[0])


def permutation_term_count(
    target: Union[Diagram, Universe],
    stars: StarPlacement,
) -> int:
    """
    Number of nonzero terms in the permutation expansion of the determinant.

    Every corner counts separately, so two corners of one crossing in the
    same face give two terms. The result equals the state count.
    """
    universe = target.universe if isinstance(target, Diagram) else target
    _, support = _corner_support(universe, stars)
    n = universe.n
    used = [False] * n

    def expand(row: int) -> int:
        if row == n:
            return 1
        total = 0
        for column, multiplicity in enumerate(support[row]):
            if multiplicity == 0 or used[column]:
                continue
            used[column] = True
            total += multiplicity * expand(row + 1)
            used[column] = False
        return total

    return expand(0)
