"""Max-2-SAT to temporal firefighter reduction on depth-2 temporal trees."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import TemporalGraph
from .instances import FirefighterInstance


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class TwoCnf:
    """A 2-CNF formula: literals are nonzero ints, sign encodes polarity."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.num_vars < 1:
            raise CnfError("formula needs at least one variable")
        for clause in self.clauses:
            if len(clause) != 2:
                raise CnfError(f"clause {clause!r} does not have two literals")
            a, b = clause
            for lit in (a, b):
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range")
            if abs(a) == abs(b):
                raise CnfError(f"clause {clause!r} repeats a variable")


def hardness_target(cnf: TwoCnf, k: int) -> int:
    v, w = cnf.num_vars, len(cnf.clauses)
    return v + 2 * w * v + 3 * w + k


def gen_firefighter_hardness(cnf: TwoCnf, k: int) -> FirefighterInstance:
    """Build the depth-2 temporal tree whose firefighter optimum mirrors
    Max-2-SAT: saving at least hardness_target(cnf, k) vertices is possible
    exactly when k clauses are satisfiable.

    Vertex layout: root 0; variable vertices b[i][x] for x in {1, 0}; one
    forcing leaf per (variable, polarity, clause slot); two clause leaves per
    literal appearance. Each edge is active exactly once and at most two
    edges share a timestep.
    """
    if k < 0 or k > len(cnf.clauses):
        raise CnfError("k must lie between 0 and the clause count")
    v, w = cnf.num_vars, len(cnf.clauses)
    next_id = 1
    b = {}
    for i in range(1, v + 1):
        for x in (1, 0):
            b[(i, x)] = next_id
            next_id += 1
    d = {}
    for i in range(1, v + 1):
        for x in (1, 0):
            for j in range(1, w + 1):
                d[(i, x, j)] = next_id
                next_id += 1
    c_pos = {}
    c_neg = {}
    for j, clause in enumerate(cnf.clauses, start=1):
        for lit in clause:
            c_pos[(j, abs(lit))] = next_id
            next_id += 1
    for j, clause in enumerate(cnf.clauses, start=1):
        for lit in clause:
            c_neg[(j, abs(lit))] = next_id
            next_id += 1

    edges = []
    for i in range(1, v + 1):
        for x in (1, 0):
            edges.append((0, b[(i, x)], i))
    for i in range(1, v + 1):
        for x in (1, 0):
            for j in range(1, w + 1):
                edges.append((b[(i, x)], d[(i, x, j)], v + (i - 1) * w + j))
    for j, clause in enumerate(cnf.clauses, start=1):
        for lit in clause:
            i = abs(lit)
            if lit > 0:
                edges.append((b[(i, 1)], c_pos[(j, i)], v + w * v + j))
                edges.append((b[(i, 0)], c_neg[(j, i)], v + w * v + w + j))
            else:
                edges.append((b[(i, 0)], c_pos[(j, i)], v + w * v + j))
                edges.append((b[(i, 1)], c_neg[(j, i)], v + w * v + w + j))

    graph = TemporalGraph(next_id, edges)
    return FirefighterInstance(graph, 0, hardness_target(cnf, k))
