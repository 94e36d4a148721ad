"""Problem instance records consumed by the engines and oracles."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import TemporalGraph


@dataclass(frozen=True)
class HamiltonianInstance:
    graph: TemporalGraph


@dataclass(frozen=True)
class FirefighterInstance:
    """Reserve firefighter: save at least saves_target vertices.

    start_budget carries the credit accumulated while shifting the instance
    so the root's first incident edge lands on timestep 1.
    """

    graph: TemporalGraph
    root: int
    saves_target: int
    start_budget: int = 1


@dataclass(frozen=True)
class MatchingInstance:
    graph: TemporalGraph
    delta: int
    size_target: int


@dataclass(frozen=True)
class TredInstance:
    graph: TemporalGraph
    source: int
    max_reached: int
    max_deletions: int
