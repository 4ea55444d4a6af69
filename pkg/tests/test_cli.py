"""Tests for the knotclock command line."""
import json

import pytest
from typer.testing import CliRunner

from knotclock.cli import app, run
from knotclock.constants import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, EXIT_VERIFICATION_FAILED
from knotclock.error_handling import ClockTheoremViolation
from tests.conftest import TREFOIL_CODE, TREFOIL_OVER_CODE

runner = CliRunner()


@pytest.fixture
def trefoil_file(write_code):
    return write_code(TREFOIL_CODE, "trefoil.pd")


class TestDiagramCommands:
    def test_help(self):
        """Top-level help lists the commands"""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        assert "clocknum" in result.output

    def test_parse_json(self, trefoil_file):
        result = runner.invoke(app, ["parse", str(trefoil_file), "--json"])
        assert result.exit_code == 0
        summary = json.loads(result.stdout)
        assert summary["vertices"] == 3
        assert len(summary["faces"]) == 5

    def test_parse_table_output(self, trefoil_file):
        result = runner.invoke(app, ["parse", str(trefoil_file)])
        assert result.exit_code == 0
        assert "3 vertices, 6 edges, 5 faces" in result.stdout
        assert "proper" in result.stdout

    def test_missing_file(self, tmp_path):
        """An unreadable file is an input error"""
        result = runner.invoke(app, ["parse", str(tmp_path / "absent.pd")])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_malformed_code(self, write_code):
        result = runner.invoke(app, ["parse", str(write_code("X(1,2"))])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_states_list(self, trefoil_file):
        result = runner.invoke(app, ["states", str(trefoil_file), "--stars", "F0,F1", "--list", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["states"] == [[2, 1, 1], [3, 2, 1], [3, 3, 2]]

    def test_states_non_adjacent(self, trefoil_file):
        result = runner.invoke(app, ["states", str(trefoil_file), "--stars", "F0,F2"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestLatticeCommand:
    def test_dot_to_stdout(self, trefoil_file):
        result = runner.invoke(app, ["lattice", str(trefoil_file), "--stars", "F0,F1"])
        assert result.exit_code == 0
        assert result.stdout.startswith("digraph lattice {")

    def test_json_to_file(self, trefoil_file, tmp_path):
        target = tmp_path / "lattice.json"
        result = runner.invoke(
            app, ["lattice", str(trefoil_file), "--stars", "F0,F1", "--format", "json", "-o", str(target)],
        )
        assert result.exit_code == 0
        assert json.loads(target.read_text())["height"] == 3

    def test_unknown_format(self, trefoil_file):
        result = runner.invoke(app, ["lattice", str(trefoil_file), "--stars", "F0,F1", "--format", "svg"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestClocknumCommand:
    def test_json_min(self, trefoil_file):
        """Six placements, minimum height 3"""
        result = runner.invoke(app, ["clocknum", str(trefoil_file), "--json", "--crossing-number", "3"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["min_over_stars"] == 3
        assert len(report["placements"]) == 6
        assert report["interval"] == {"lower": 3, "upper": 3}
        assert [(v["suite"], v["verdict"]) for v in report["verdicts"]] == [("thm41", "pass")]

    def test_single_placement(self, trefoil_file):
        result = runner.invoke(app, ["clocknum", str(trefoil_file), "--stars", "F0,F1", "--json"])
        assert result.exit_code == 0
        assert [p["stars"] for p in json.loads(result.stdout)["placements"]] == ["F0,F1"]

    def test_exclusive_options(self, trefoil_file):
        result = runner.invoke(app, ["clocknum", str(trefoil_file), "--stars", "F0,F1", "--all-stars"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestAlexCommand:
    def test_trefoil(self, write_code):
        result = runner.invoke(app, ["alex", str(write_code(TREFOIL_OVER_CODE)), "--json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["coefficients"] == [1, -1, 1]

    def test_needs_over_marks(self, trefoil_file):
        result = runner.invoke(app, ["alex", str(trefoil_file)])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestVerifyCommand:
    def test_unknown_suite(self):
        result = runner.invoke(app, ["verify", "lemma99"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_small_table(self, tmp_path):
        path = tmp_path / "small.pdtab"
        path.write_text("3_1|@rational 3|3|2|1,-1,1\n")
        result = runner.invoke(app, ["verify", "oracle", "prop53", "--table", str(path), "--json"])
        assert result.exit_code == 0
        summary = json.loads(result.stdout)
        assert summary["failed"] == 0
        assert summary["passed"] == 7

    def test_failure_exit_code(self, tmp_path):
        """A wrong table polynomial makes the alexander suite fail"""
        path = tmp_path / "wrong.pdtab"
        path.write_text("3_1|@rational 3|3|2|1,-3,1\n")
        result = runner.invoke(app, ["verify", "alexander", "--table", str(path)])
        assert result.exit_code == EXIT_VERIFICATION_FAILED


class TestGenerateCommands:
    def test_two_bridge_json(self):
        result = runner.invoke(app, ["gen", "two-bridge", "2,2", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["fraction"] == [5, 2]
        assert data["knotted"] is True
        assert data["code"].count("X(") == 4

    def test_two_bridge_link(self):
        result = runner.invoke(app, ["gen", "two-bridge", "4"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_braid_round_trip(self, tmp_path):
        """A generated code parses back through the parse command"""
        target = tmp_path / "braid.pd"
        result = runner.invoke(app, ["gen", "braid", "1,-2,1,-2", "-o", str(target)])
        assert result.exit_code == 0
        parsed = runner.invoke(app, ["parse", str(target), "--json"])
        assert json.loads(parsed.stdout)["vertices"] == 4

    def test_sum(self, write_code):
        first = write_code(TREFOIL_OVER_CODE, "a.pd")
        second = write_code(TREFOIL_OVER_CODE, "b.pd")
        result = runner.invoke(app, ["gen", "sum", str(first), str(second), "--json"])
        assert result.exit_code == 0
        assert len(json.loads(result.stdout)["splice_edges"]) == 2

    def test_montesinos_bad_flip(self):
        result = runner.invoke(app, ["gen", "montesinos", "2;3", "--flip", "x"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestRun:
    """Exit codes without leaving the interpreter"""

    def test_success(self, trefoil_file):
        assert run(["states", str(trefoil_file), "--stars", "F0,F1"]) == 0

    def test_input_error(self, tmp_path):
        assert run(["parse", str(tmp_path / "absent.pd")]) == EXIT_INPUT_ERROR

    def test_unknown_subcommand(self):
        assert run(["frobnicate"]) == EXIT_INPUT_ERROR

    def test_verification_failure(self, tmp_path):
        path = tmp_path / "wrong.pdtab"
        path.write_text("3_1|@rational 3|3|2|1,-3,1\n")
        assert run(["verify", "alexander", "--table", str(path)]) == EXIT_VERIFICATION_FAILED

    def test_help_exits_cleanly(self):
        assert run(["--help"]) == 0

    def test_clock_theorem_violation(self, trefoil_file, monkeypatch):
        """A failed runtime check is not reported as bad input"""
        def broken(*args, **kwargs):
            raise ClockTheoremViolation("senses disagree")

        monkeypatch.setattr("knotclock.cli.build_lattice", broken)
        assert run(["lattice", str(trefoil_file), "--stars", "F0,F1"]) == EXIT_INTERNAL_ERROR
