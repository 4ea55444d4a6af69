"""Test fixtures and utilities shared across test suite."""
import sys
from pathlib import Path

import pytest

# Add repository root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from knotclock.clocknum import granny_diagram
from knotclock.diagram_core import parse_diagram
from knotclock.generators import TwoBridgeSpec, gen_two_bridge
from knotclock.knot_table import load_table

GOLDEN_DIR = Path(__file__).parent / "golden"

# Counterclockwise crossing code of the standard trefoil projection, with faces
# F0 (3-gon), F1 (2-gon), F2 (3-gon), F3 (2-gon), F4 (2-gon)
TREFOIL_CODE = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
TREFOIL_OVER_CODE = "X(1,5,2,4);over=5 X(3,1,4,6);over=1 X(5,3,6,2);over=3"
CURL_CODE = "X(1,1,2,2)"


@pytest.fixture
def trefoil():
    """Shadow of the standard 3-crossing trefoil."""
    return parse_diagram(TREFOIL_CODE).universe


@pytest.fixture
def trefoil_diagram():
    """Trefoil with alternating over/under marks."""
    return parse_diagram(TREFOIL_OVER_CODE)


@pytest.fixture
def figure_eight():
    """Standard 4-plat diagram of the figure-eight knot."""
    return gen_two_bridge(TwoBridgeSpec((2, 2))).diagram.universe


@pytest.fixture
def curl():
    """One-crossing curl."""
    return parse_diagram(CURL_CODE).universe


@pytest.fixture
def granny():
    """Trefoil spliced with itself, with the splice bookkeeping."""
    return granny_diagram()


@pytest.fixture(scope="session")
def table():
    """The embedded knot table."""
    return load_table()


@pytest.fixture
def write_code(tmp_path):
    """Write a crossing code to a temporary file and return its path."""
    def _write(code: str, name: str = "diagram.pd") -> Path:
        path = tmp_path / name
        path.write_text(code + "\n")
        return path
    return _write
