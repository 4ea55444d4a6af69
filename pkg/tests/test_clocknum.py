"""Tests for clock numbers and the per-diagram verifiers."""
import pytest

from knotclock.clocknum import (
    clock_interval,
    clock_number_of_diagram,
    nonprime_stars,
    two_bridge_condition,
    two_bridge_specs,
    verify_example_nonprime,
    verify_inequality_thm41,
    verify_lemma42,
    verify_lemma43,
    verify_lemma51,
    verify_lemma51_lemma52,
    verify_lemma52,
    verify_prop53,
    verify_two_bridge_spec,
)
from knotclock.constants import VERDICT_HYPOTHESIS_UNMET, VERDICT_PASS
from knotclock.diagram_core import parse_diagram
from knotclock.error_handling import HypothesisNotMetError, NotProperError
from knotclock.generators import TwoBridgeSpec, gen_two_bridge
from knotclock.kc_types import StarPlacement
from tests.conftest import TREFOIL_CODE

TREFOIL_STARS = StarPlacement(0, 1)


class TestClockNumber:
    def test_trefoil(self):
        """Every trefoil placement has height 3"""
        report = clock_number_of_diagram(parse_diagram(TREFOIL_CODE), "3_1", known_c=3, bridge=2)
        assert report.min_over_stars == 3
        assert len(report.placements) == 6
        assert {p.height for p in report.placements} == {3}
        assert report.interval.lower == 3
        assert report.interval.upper == 3

    def test_single_placement(self):
        """Restricting to one placement reports only that one"""
        report = clock_number_of_diagram(parse_diagram(TREFOIL_CODE), stars=TREFOIL_STARS)
        assert [p.stars for p in report.placements] == ["F0,F1"]
        assert report.placements[0].state_count == 3

    def test_figure_eight(self):
        """The figure-eight standard diagram reaches its crossing number"""
        report = clock_number_of_diagram(gen_two_bridge(TwoBridgeSpec((2, 2))).diagram, "4_1", 4, 2)
        assert report.min_over_stars == 4

    def test_granny_below_crossing_number(self, granny):
        """The composite granny has a placement of height 5 < 6"""
        report = clock_number_of_diagram(granny.diagram, "3_1#3_1", 6, prime=False)
        assert report.min_over_stars == 5
        assert {p.state_count for p in report.placements} == {9}
        assert report.interval.lower == 1

    def test_interval_without_placements(self):
        """An empty report has no interval"""
        report = clock_number_of_diagram(parse_diagram(""), "0_1")
        assert report.min_over_stars is None
        assert clock_interval(report) is None


class TestInequality:
    def test_trefoil_passes(self):
        """Heights never drop below c on a prime knot"""
        report = clock_number_of_diagram(parse_diagram(TREFOIL_CODE), "3_1", 3, 2)
        assert verify_inequality_thm41(report).verdict == VERDICT_PASS

    def test_report_carries_verdict(self):
        """A known crossing number attaches the inequality verdict to the report"""
        report = clock_number_of_diagram(parse_diagram(TREFOIL_CODE), "3_1", 3, 2)
        assert [record.verdict for record in report.verdicts] == [VERDICT_PASS]
        assert clock_number_of_diagram(parse_diagram(TREFOIL_CODE), "3_1").verdicts == []

    def test_composite_is_unmet(self, granny):
        """The inequality is not asserted for composite knots"""
        report = clock_number_of_diagram(granny.diagram, "3_1#3_1", 6, prime=False)
        assert verify_inequality_thm41(report).verdict == VERDICT_HYPOTHESIS_UNMET


class TestParticipation:
    def test_trefoil_counts(self, trefoil):
        """Input and output move once, the third vertex twice"""
        record = verify_lemma42(trefoil, TREFOIL_STARS, "3_1")
        assert record.verdict == VERDICT_PASS
        assert record.payload["counts"] == {"0": 1, "1": 2, "2": 1}
        assert record.payload["exact"] is True

    def test_figure_eight_every_placement(self, figure_eight):
        """The lower bounds hold at every figure-eight placement"""
        for pair in figure_eight.adjacent_pairs:
            assert verify_lemma42(figure_eight, pair).verdict == VERDICT_PASS

    def test_requires_proper(self, granny):
        """Boundary classification needs a proper universe"""
        universe = granny.diagram.universe
        with pytest.raises(NotProperError):
            verify_lemma42(universe, universe.adjacent_pairs[0])


class TestSplittableParts:
    def test_granny_no_cross_moves(self, granny):
        """No move joins the two summands"""
        record = verify_lemma43(granny.diagram.universe, nonprime_stars(granny), "3_1#3_1")
        assert record.verdict == VERDICT_PASS
        assert record.payload["states"] == 9

    def test_proper_universe_raises(self, trefoil):
        """The trefoil has nothing to split"""
        with pytest.raises(HypothesisNotMetError):
            verify_lemma43(trefoil, TREFOIL_STARS)


class TestFaceSizes:
    def test_trefoil_shared_vertices(self, trefoil):
        """The starred triangle and bigon share two vertices"""
        assert verify_lemma51(trefoil, TREFOIL_STARS).verdict == VERDICT_PASS

    def test_trefoil_face_bound(self, trefoil):
        """3 + 3 + 2 >= 2*3 + 2"""
        record = verify_lemma52(trefoil, TREFOIL_STARS, known_c=3)
        assert record.verdict == VERDICT_PASS
        assert (record.payload["r_i"], record.payload["r_j"]) == (3, 2)

    def test_combined(self, figure_eight):
        """Both checks pass at every figure-eight placement"""
        for pair in figure_eight.adjacent_pairs:
            shared, bound = verify_lemma51_lemma52(figure_eight, pair, 4)
            assert shared.verdict == VERDICT_PASS
            assert bound.verdict == VERDICT_PASS

    def test_composite_rejected(self, granny):
        """Face-size checks need a proper universe"""
        universe = granny.diagram.universe
        with pytest.raises(NotProperError):
            verify_lemma51(universe, universe.adjacent_pairs[0])


class TestTwoBridgeCondition:
    def test_trefoil_witness(self, trefoil):
        """The first pair reaching r sum c + 2 is F0,F1"""
        assert two_bridge_condition(trefoil) == (True, TREFOIL_STARS)

    def test_figure_eight(self, figure_eight):
        """A two-bridge knot satisfies the face-size condition"""
        assert verify_prop53(figure_eight, 2, "4_1").verdict == VERDICT_PASS

    def test_wrong_bridge_fails(self, trefoil):
        """Claiming bridge number 3 contradicts the condition"""
        record = verify_prop53(trefoil, 3, "3_1")
        assert record.verdict != VERDICT_PASS
        assert record.payload["holds"] is True


class TestTwoBridgeFamilies:
    def test_specs_up_to_five(self):
        """Twist lists up to 5 crossings that close to knots"""
        labels = {spec.label() for spec in two_bridge_specs(5)}
        assert {"[3]", "[2,2]", "[5]", "[3,2]", "[1,1,1]"} <= labels
        assert "[2]" not in labels
        assert "[4]" not in labels
        assert all(3 <= spec.crossing_count <= 5 for spec in two_bridge_specs(5))

    @pytest.mark.parametrize("twists", [(3,), (2, 2), (5,), (3, 2)])
    def test_standard_diagram_reaches_c(self, twists):
        """Recommended and best placements both have height c"""
        assert verify_two_bridge_spec(TwoBridgeSpec(twists)).verdict == VERDICT_PASS


def test_example_nonprime():
    """The granny example passes with height 5 and nine states"""
    record = verify_example_nonprime()
    assert record.verdict == VERDICT_PASS
    assert record.payload["height"] == 5
    assert record.payload["states"] == 9
    assert record.payload["arrows"] == 12
