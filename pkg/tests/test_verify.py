"""Tests for the verification suites and the sweep runner."""
import pytest

from knotclock.constants import (
    SUITE_ALEXANDER,
    SUITE_CLOCK_THEOREM,
    SUITE_LEMMA43,
    SUITE_MAIN,
    SUITE_ORACLE,
    SUITE_THM41,
    SUITES,
    VERDICT_FAIL,
    VERDICT_HYPOTHESIS_UNMET,
    VERDICT_PASS,
)
from knotclock.error_handling import KnotClockError
from knotclock.knot_table import load_table
from knotclock.verify import (
    check_clock_theorem,
    check_example_nonprime,
    check_lemma43,
    check_two_bridge_sweep,
    expand_suites,
    run_suites,
)

SMALL_TABLE = "3_1|@rational 3|3|2|1,-1,1\n4_1|@rational 2,2|4|2|1,-3,1\n"


@pytest.fixture
def small_table(tmp_path):
    path = tmp_path / "small.pdtab"
    path.write_text(SMALL_TABLE)
    return path


class TestExpandSuites:
    def test_all(self):
        assert expand_suites(["all"]) == list(SUITES)

    def test_deduplicates(self):
        assert expand_suites([SUITE_ORACLE, SUITE_ORACLE, SUITE_THM41]) == [SUITE_ORACLE, SUITE_THM41]

    def test_unknown(self):
        with pytest.raises(KnotClockError, match="Unknown suite"):
            expand_suites(["lemma99"])


class TestChecks:
    def test_clock_theorem_on_trefoil(self, small_table):
        """Every trefoil placement passes with three states"""
        entry = load_table(small_table)[0]
        records = check_clock_theorem(entry, seed=7)
        assert len(records) == 6
        assert all(r.verdict == VERDICT_PASS for r in records)
        assert {r.payload["states"] for r in records} == {3}

    def test_lemma43_records(self):
        """Connected sums pass and the prime trefoil is outside the hypothesis"""
        records = check_lemma43()
        assert records[-1].verdict == VERDICT_HYPOTHESIS_UNMET
        assert all(r.verdict == VERDICT_PASS for r in records[:-1])

    def test_example_nonprime(self):
        records = check_example_nonprime()
        assert [r.verdict for r in records] == [VERDICT_PASS, VERDICT_HYPOTHESIS_UNMET]

    def test_two_bridge_sweep_small(self):
        """Box lists up to five crossings all reach c, one record per target"""
        records = check_two_bridge_sweep(5)
        targets = [r.target for r in records]
        assert len(targets) == len(set(targets))
        assert all(r.verdict != VERDICT_FAIL for r in records)


class TestRunSuites:
    def test_small_table(self, small_table):
        """Per-knot suites over a two-entry table"""
        summary = run_suites([SUITE_ORACLE, SUITE_ALEXANDER, SUITE_THM41], small_table, seed=1)
        assert summary.failed == 0
        assert summary.passed == len(summary.records)
        assert [r.suite for r in summary.records] == sorted(r.suite for r in summary.records)
        assert {r.target for r in summary.records if r.suite == SUITE_ALEXANDER} == {"3_1", "4_1"}

    def test_seed_is_recorded(self, small_table):
        assert run_suites([SUITE_CLOCK_THEOREM], small_table, seed=42).seed == 42

    def test_deterministic(self, small_table):
        """The same seed gives the same records"""
        first = run_suites([SUITE_CLOCK_THEOREM], small_table, seed=3)
        second = run_suites([SUITE_CLOCK_THEOREM], small_table, seed=3)
        assert first == second

    def test_global_suite(self, small_table):
        summary = run_suites([SUITE_LEMMA43], small_table)
        assert summary.unmet == 1
        assert summary.failed == 0

    @pytest.mark.slow
    def test_parallel_matches_serial(self, small_table):
        serial = run_suites([SUITE_ORACLE, SUITE_MAIN], small_table, workers=1)
        parallel = run_suites([SUITE_ORACLE, SUITE_MAIN], small_table, workers=2)
        assert serial.records == parallel.records

    @pytest.mark.slow
    def test_full_table(self):
        """Every suite over the embedded table: no failures"""
        summary = run_suites(["all"])
        failures = [f"{r.suite} {r.target}: {r.detail}" for r in summary.records if r.verdict == VERDICT_FAIL]
        assert not failures
