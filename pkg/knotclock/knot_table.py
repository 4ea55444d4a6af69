"""
The embedded table of prime knots up to eight crossings.

Each line reads `name|pd|c|bridge|alex`. The pd field holds either a
crossing code or a generator directive (see the header of the data file).
Loading validates every entry: the code parses, the universe is proper,
and its vertex count equals the recorded crossing number.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from knotclock.config import get_table_path
from knotclock.constants import (
    COMMENT_CHAR,
    DIRECTIVE_BRAID,
    DIRECTIVE_MONTESINOS,
    DIRECTIVE_RATIONAL,
)
from knotclock.diagram_core import Diagram, is_proper, parse_diagram
from knotclock.error_handling import KnotClockError, TableError
from knotclock.generators import (
    TwoBridgeSpec,
    gen_closed_braid,
    gen_montesinos,
    gen_two_bridge,
    parse_tangle,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    pd_code: str
    c: int
    bridge: int
    alexander: tuple[int, ...]
    diagram: Diagram
    # Box list when the diagram is a standard 4-plat
    two_bridge: Optional[TwoBridgeSpec] = None
    prime: bool = True


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def expand_directive(pd: str) -> tuple[Diagram, Optional[TwoBridgeSpec]]:
    """Turn a pd field into a diagram, running the generator a directive names."""
    pd = pd.strip()
    if pd.startswith(DIRECTIVE_RATIONAL):
        spec = TwoBridgeSpec.parse(pd[len(DIRECTIVE_RATIONAL):])
        return gen_two_bridge(spec).diagram, spec
    if pd.startswith(DIRECTIVE_BRAID):
        return gen_closed_braid(_int_list(pd[len(DIRECTIVE_BRAID):])), None
    if pd.startswith(DIRECTIVE_MONTESINOS):
        body = pd[len(DIRECTIVE_MONTESINOS):].split()
        flipped: set[int] = set()
        for option in body[1:]:
            key, _, value = option.partition("=")
            if key != "flip":
                raise TableError(f"Unknown montesinos option '{option}'")
            flipped.update(_int_list(value))
        tangles = [parse_tangle(part) for part in body[0].split(";")]
        return gen_montesinos(tangles, frozenset(flipped)), None
    return parse_diagram(pd), None


def parse_table_line(line: str, line_number: int = 0) -> KnotTableEntry:
    fields = [field.strip() for field in line.split("|")]
    if len(fields) != 5:
        raise TableError(f"line {line_number}: expected 5 fields, got {len(fields)}")
    name, pd, c_text, bridge_text, alex_text = fields
    try:
        c, bridge = int(c_text), int(bridge_text)
        alexander = tuple(_int_list(alex_text))
    except ValueError as exc:
        raise TableError(f"{name}: non-integer field ({exc})") from exc
    try:
        diagram, spec = expand_directive(pd)
    except KnotClockError as exc:
        raise TableError(f"{name}: {exc}") from exc

    universe = diagram.universe
    if universe.n != c:
        raise TableError(f"{name}: diagram has {universe.n} crossings, table says {c}")
    verdict = is_proper(universe)
    if not verdict.proper:
        raise TableError(f"{name}: universe is not proper (cut {verdict.witness})")
    return KnotTableEntry(name, pd, c, bridge, alexander, diagram, spec)


def parse_table(text: str) -> list[KnotTableEntry]:
    entries = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split(COMMENT_CHAR, 1)[0].strip()
        if not line:
            continue
        entries.append(parse_table_line(line, line_number))
    names = [entry.name for entry in entries]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise TableError(f"Duplicate table entries: {', '.join(duplicates)}")
    return entries


@lru_cache(maxsize=4)
def _load(path: Path) -> tuple[KnotTableEntry, ...]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise TableError(f"Cannot read knot table {path}: {exc}") from exc
    entries = parse_table(text)
    logger.info("Loaded %d knots from %s", len(entries), path)
    return tuple(entries)


def load_table(path: Optional[Path] = None) -> list[KnotTableEntry]:
    return list(_load(get_table_path(path)))


def find_entry(name: str, path: Optional[Path] = None) -> KnotTableEntry:
    for entry in load_table(path):
        if entry.name == name:
            return entry
    raise TableError(f"Unknown knot '{name}'")
