from hypothesis import given, settings

from timwidth.core import TemporalGraph, prefix_graph, suffix_graph
from timwidth.decomposition import tim_width
from timwidth.widths import (
    bidirectional_cvim_width,
    connected_vim_width,
    vim_sequence,
)

from .conftest import temporal_graphs


def test_vim_single_edge():
    g = TemporalGraph(2, [(0, 1, 3)])
    vs = vim_sequence(g)
    assert vs.bags[1] == frozenset() and vs.bags[2] == frozenset()
    assert vs.bags[3] == {0, 1}
    assert vs.width == 2


def test_vim_two_edges():
    g = TemporalGraph(3, [(0, 1, 1), (1, 2, 2)])
    vs = vim_sequence(g)
    assert vs.bags[1] == {0, 1}
    assert vs.bags[2] == {1, 2}
    assert vs.bags[0] == vs.bags[1]
    assert vs.actives[0] == vs.actives[1]
    assert vs.width == 2


def test_vim_edgeless_convention():
    g = TemporalGraph(3, [])
    assert vim_sequence(g).width == 1


@settings(max_examples=80)
@given(temporal_graphs(n_max=8))
def test_vim_matches_interval_scan_oracle(g):
    vs = vim_sequence(g)
    spans = {}
    for u, v, t in g.time_edges:
        for x in (u, v):
            lo, hi = spans.get(x, (t, t))
            spans[x] = (min(lo, t), max(hi, t))
    for t in range(1, g.lifetime + 1):
        expected = frozenset(x for x, (lo, hi) in spans.items() if lo <= t <= hi)
        assert vs.bags[t] == expected
        assert vs.actives[t] <= vs.bags[t]


@settings(max_examples=80)
@given(temporal_graphs())
def test_vim_bags_are_intervals_per_vertex(g):
    vs = vim_sequence(g)
    for v in range(g.n):
        stamps = [t for t in range(1, g.lifetime + 1) if v in vs.bags[t]]
        assert stamps == list(range(stamps[0], stamps[-1] + 1)) if stamps else True


def test_cvim_single_edge():
    g = TemporalGraph(2, [(0, 1, 1)])
    assert connected_vim_width(g, "le").width == 2
    assert connected_vim_width(g, "ge").width == 2


def test_cvim_disjoint_pairs():
    g = TemporalGraph(4, [(0, 1, 1), (2, 3, 2)])
    res = connected_vim_width(g, "le")
    assert res.width == 2
    assert res.bags[2] == ((2, 3),)


@settings(max_examples=60)
@given(temporal_graphs())
def test_cvim_matches_direct_definition(g):
    vs = vim_sequence(g)
    for direction, graph_of in (("le", prefix_graph), ("ge", suffix_graph)):
        best = 1
        for t in range(1, g.lifetime + 1):
            for comp in graph_of(g, t).components():
                best = max(best, len(set(comp) & vs.bags[t]))
        assert connected_vim_width(g, direction).width == best


def test_bidirectional_examples():
    g = TemporalGraph(2, [(0, 1, 1)])
    assert bidirectional_cvim_width(g) == 2
    assert bidirectional_cvim_width(TemporalGraph(3, [])) == 1


@settings(max_examples=50)
@given(temporal_graphs(n_max=4, lam_max=4))
def test_bidirectional_matches_split_oracle(g):
    # direct evaluation of the split decomposition per candidate time:
    # connected prefix bags before t, the bag F_t at t, connected suffix
    # bags after t, all against the graph's own VIM sequence
    lam = g.lifetime
    if lam == 0:
        assert bidirectional_cvim_width(g) == 1
        return
    vs = vim_sequence(g)

    def bag_at(graph_of, s):
        return max(
            (len(set(c) & vs.bags[s]) for c in graph_of(g, s).components()),
            default=0,
        )

    values = []
    for t in range(1, lam + 1):
        parts = [1]
        for s in range(1, t):
            parts.append(bag_at(prefix_graph, s))
        if 1 < t < lam:
            parts.append(len(vs.bags[t]))
        for s in range(t + 1, lam + 1):
            parts.append(bag_at(suffix_graph, s))
        if t == 1:
            parts.append(bag_at(suffix_graph, 1))
        if t == lam:
            parts.append(bag_at(prefix_graph, lam))
        values.append(max(parts))
    assert bidirectional_cvim_width(g) == min(values)


@settings(max_examples=80)
@given(temporal_graphs())
def test_width_ordering_chain(g):
    om = vim_sequence(g).width
    le = connected_vim_width(g, "le").width
    ge = connected_vim_width(g, "ge").width
    bi = bidirectional_cvim_width(g)
    tw = tim_width(g)
    assert le <= om and ge <= om
    assert tw <= min(le, ge)
    assert tw <= bi
