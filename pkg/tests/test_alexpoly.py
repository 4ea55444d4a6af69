"""Tests for the crossing/face matrix, its determinant and the state-count oracle."""
import pytest
import sympy as sp

from knotclock.alexpoly import (
    T,
    IntPolynomial,
    alexander_det,
    alexander_matrix,
    alexander_polynomial,
    corner_weights,
    permutation_term_count,
)
from knotclock.diagram_core import parse_diagram
from knotclock.error_handling import AlexanderError
from knotclock.generators import TwoBridgeSpec, gen_two_bridge
from knotclock.kc_types import StarPlacement
from knotclock.states import enumerate_states
from tests.conftest import TREFOIL_CODE

TREFOIL_STARS = StarPlacement(0, 1)


class TestIntPolynomial:
    def test_from_expr(self):
        assert IntPolynomial.from_expr(T**3 - T**2 + T).coefficients == (0, 1, -1, 1)

    def test_normalized(self):
        """Lowest degree shifts to 0, leading coefficient turns positive"""
        assert IntPolynomial((0, -1, 1, -1)).normalized() == IntPolynomial((-1, 1, -1)).normalized()
        assert IntPolynomial((0, -1, 1, -1)).normalized().coefficients == (1, -1, 1)

    def test_zero(self):
        assert IntPolynomial.from_expr(sp.Integer(0)).is_zero
        assert str(IntPolynomial(())) == "0"

    def test_at_minus_one(self):
        """The determinant of the figure-eight is 5"""
        assert IntPolynomial((1, -3, 1)).at_minus_one() == 5

    def test_str(self):
        assert str(IntPolynomial((1, -1, 1))) == "t**2 - t + 1"


class TestCornerWeights:
    def test_trefoil_weights(self, trefoil_diagram):
        """Each crossing carries 1, -1, t, -t around its corners"""
        for vertex in range(3):
            assert corner_weights(trefoil_diagram, vertex) == (1, -1, T, -T)

    def test_missing_over_data(self):
        """Plain codes have no weights"""
        with pytest.raises(AlexanderError, match="Over/under data missing"):
            corner_weights(parse_diagram(TREFOIL_CODE), 0)


class TestDeterminant:
    def test_trefoil_matrix(self, trefoil_diagram):
        """Square matrix over the three unstarred faces"""
        matrix = alexander_matrix(trefoil_diagram, TREFOIL_STARS)
        assert matrix.columns == (2, 3, 4)
        assert matrix.entries == sp.Matrix([[T, -T, 0], [T, -1, -T], [T, 0, -1]])

    def test_trefoil_polynomial(self, trefoil_diagram):
        assert alexander_polynomial(trefoil_diagram).coefficients == (1, -1, 1)

    def test_independent_of_stars(self, trefoil_diagram):
        """Every adjacent placement gives the same normalized polynomial"""
        results = {alexander_det(trefoil_diagram, pair) for pair in trefoil_diagram.universe.adjacent_pairs}
        assert results == {IntPolynomial((1, -1, 1))}

    def test_figure_eight(self):
        diagram = gen_two_bridge(TwoBridgeSpec((2, 2))).diagram
        assert alexander_polynomial(diagram).coefficients == (1, -3, 1)

    def test_unknot(self):
        """The 0-crossing unknot has polynomial 1"""
        assert alexander_polynomial(parse_diagram("")).coefficients == (1,)


class TestStateCountOracle:
    def test_trefoil(self, trefoil):
        """Three nonzero permutation terms, three states"""
        assert permutation_term_count(trefoil, TREFOIL_STARS) == 3

    def test_matches_enumeration(self, figure_eight):
        """Term count equals the enumerated state count at every placement"""
        for pair in figure_eight.adjacent_pairs:
            assert permutation_term_count(figure_eight, pair) == len(enumerate_states(figure_eight, pair))

    def test_accepts_diagram(self, trefoil_diagram):
        assert permutation_term_count(trefoil_diagram, TREFOIL_STARS) == 3

    def test_curl_repeated_face(self, curl):
        """Corner multiplicities count separately"""
        for pair in curl.adjacent_pairs:
            assert permutation_term_count(curl, pair) == len(enumerate_states(curl, pair))
