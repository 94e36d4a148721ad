"""Text formats: temporal graph files, decomposition files, DIMACS 2-CNF.

Graph file layout, one record per line, '#' starts a comment:

    tgraph <n> <lifetime>
    root <v>          (optional)
    source <v>        (optional)
    e <u> <v> <t>     (one per time-edge)

Canonical emission orders edges by (t, u, v) and omits comments, so
emit(parse(emit(x))) is byte-identical to emit(x).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TemporalGraph, TemporalGraphError
from .decomposition import TimDecomposition
from .problems.hardness import CnfError, TwoCnf


class ParseError(ValueError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class GraphFile:
    graph: TemporalGraph
    root: int | None = None
    source: int | None = None


def parse_graph_file(text: str) -> GraphFile:
    header = None
    edges = []
    root = None
    source = None
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "tgraph":
            if header is not None:
                raise ParseError(line_no, "duplicate header")
            if len(parts) != 3:
                raise ParseError(line_no, "header needs: tgraph <n> <lifetime>")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError(line_no, "header fields must be integers") from None
        elif kind == "e":
            if header is None:
                raise ParseError(line_no, "edge before header")
            if len(parts) != 4:
                raise ParseError(line_no, "edge needs: e <u> <v> <t>")
            try:
                u, v, t = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(line_no, "edge fields must be integers") from None
            n, lam = header
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(line_no, f"vertex out of range 0..{n - 1}")
            if u == v:
                raise ParseError(line_no, "self-loop")
            if not (1 <= t <= lam):
                raise ParseError(line_no, f"time out of range 1..{lam}")
            key = (min(u, v), max(u, v), t)
            if key in seen:
                raise ParseError(line_no, f"duplicate time-edge {key}")
            seen.add(key)
            edges.append(key)
        elif kind in ("root", "source"):
            if header is None:
                raise ParseError(line_no, f"{kind} before header")
            if len(parts) != 2:
                raise ParseError(line_no, f"{kind} needs one vertex id")
            try:
                v = int(parts[1])
            except ValueError:
                raise ParseError(line_no, "vertex id must be an integer") from None
            if not (0 <= v < header[0]):
                raise ParseError(line_no, "vertex out of range")
            if kind == "root":
                root = v
            else:
                source = v
        else:
            raise ParseError(line_no, f"unknown record {kind!r}")
    if header is None:
        raise ParseError(0, "missing tgraph header")
    n, lam = header
    try:
        g = TemporalGraph(n, edges)
    except TemporalGraphError as exc:
        raise ParseError(0, str(exc)) from None
    if g.lifetime != lam:
        raise ParseError(
            0, f"header lifetime {lam} but latest edge time is {g.lifetime}"
        )
    return GraphFile(g, root, source)


def parse_temporal_graph(text: str) -> TemporalGraph:
    return parse_graph_file(text).graph


def emit_graph_file(g: TemporalGraph, root=None, source=None) -> str:
    lines = [f"tgraph {g.n} {g.lifetime}"]
    if root is not None:
        lines.append(f"root {root}")
    if source is not None:
        lines.append(f"source {source}")
    for u, v, t in sorted(g.time_edges, key=lambda e: (e[2], e[0], e[1])):
        lines.append(f"e {u} {v} {t}")
    return "\n".join(lines) + "\n"


def emit_decomposition(d: TimDecomposition) -> str:
    lines = []
    for i, (bag, t) in enumerate(zip(d.bags, d.times)):
        verts = ",".join(str(v) for v in sorted(bag))
        lines.append(f"node {i} time={t} bag={verts}")
    for i, j in sorted(d.arcs):
        lines.append(f"arc {i} {j}")
    return "\n".join(lines) + "\n" if lines else ""


def parse_decomposition(text: str, n: int, lifetime: int) -> TimDecomposition:
    bags = {}
    times = {}
    arcs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "node":
            if len(parts) != 4:
                raise ParseError(line_no, "node needs: node <id> time=<t> bag=<..>")
            nid = int(parts[1])
            if not parts[2].startswith("time=") or not parts[3].startswith("bag="):
                raise ParseError(line_no, "malformed node record")
            times[nid] = int(parts[2][5:])
            body = parts[3][4:]
            bags[nid] = frozenset(int(x) for x in body.split(",") if x != "")
        elif parts[0] == "arc":
            if len(parts) != 3:
                raise ParseError(line_no, "arc needs: arc <i> <j>")
            arcs.append((int(parts[1]), int(parts[2])))
        else:
            raise ParseError(line_no, f"unknown record {parts[0]!r}")
    ids = sorted(bags)
    if ids != list(range(len(ids))):
        raise ParseError(0, "node ids must be dense from 0")
    return TimDecomposition(
        n,
        lifetime,
        tuple(bags[i] for i in ids),
        tuple(times[i] for i in ids),
        tuple(sorted(arcs)),
    )


def decomposition_to_dot(d: TimDecomposition) -> str:
    lines = ["digraph tim {", "  rankdir=LR;"]
    for i, (bag, t) in enumerate(zip(d.bags, d.times)):
        label = "{" + ",".join(str(v) for v in sorted(bag)) + "}@" + str(t)
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in sorted(d.arcs):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dimacs_2cnf(text: str) -> TwoCnf:
    """DIMACS-style 2-CNF: 'p cnf <vars> <clauses>' then clause lines ending 0."""
    num_vars = None
    expect = None
    clauses = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(line_no, "header needs: p cnf <vars> <clauses>")
            num_vars, expect = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ParseError(line_no, "clause before header")
        lits = [int(x) for x in line.split()]
        if not lits or lits[-1] != 0:
            raise ParseError(line_no, "clause must end with 0")
        lits = lits[:-1]
        if len(lits) != 2:
            raise ParseError(line_no, "each clause needs exactly two literals")
        clauses.append(tuple(lits))
    if num_vars is None:
        raise ParseError(0, "missing p cnf header")
    if expect is not None and expect != len(clauses):
        raise ParseError(0, f"header says {expect} clauses, found {len(clauses)}")
    try:
        return TwoCnf(num_vars, tuple(clauses))
    except CnfError as exc:
        raise ParseError(0, str(exc)) from None


def emit_dimacs_2cnf(cnf: TwoCnf) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    for a, b in cnf.clauses:
        lines.append(f"{a} {b} 0")
    return "\n".join(lines) + "\n"
