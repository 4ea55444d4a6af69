"""
Pydantic models for everything knotclock serializes: lattice exports,
clock-number reports and verifier records.
"""
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field


class LatticeStateModel(BaseModel):
    index: int
    slots: list[int]


class LatticeArrowModel(BaseModel):
    source: int
    target: int
    edge: int
    other_edge: Optional[int] = None


class LatticeModel(BaseModel):
    """JSON shape of an exported lattice; states are listed in canonical order."""
    model_config = ConfigDict(frozen=True)

    stars: tuple[int, int]
    states: list[LatticeStateModel]
    arrows: list[LatticeArrowModel]
    clocked: int
    counterclocked: int
    height: int
    directed_height: int


class PlacementHeight(BaseModel):
    stars: str
    star_a: int
    star_b: int
    state_count: int
    height: int
    directed_height: int


class ClockInterval(BaseModel):
    lower: int
    upper: int


class VerdictRecord(BaseModel):
    suite: str
    target: str
    verdict: str
    detail: str = ""
    payload: dict[str, Any] = Field(default_factory=dict)


class ClockReport(BaseModel):
    """Lattice heights over every adjacent star placement of one diagram."""
    name: Optional[str] = None
    crossing_count: int
    known_c: Optional[int] = None
    bridge: Optional[int] = None
    prime: bool = True
    placements: list[PlacementHeight] = Field(default_factory=list)
    min_over_stars: Optional[int] = None
    interval: Optional[ClockInterval] = None
    verdicts: list[VerdictRecord] = Field(default_factory=list)

    @property
    def best_placement(self) -> Optional[PlacementHeight]:
        if not self.placements:
            return None
        return min(self.placements, key=lambda p: (p.height, p.star_a, p.star_b))


class VerifySummary(BaseModel):
    seed: int
    records: list[VerdictRecord]
    passed: int
    failed: int
    unmet: int
