import pytest

from timwidth.core import TemporalGraph, snapshot
from timwidth.problems import HamiltonianInstance
from timwidth.problems.hamiltonian import HamiltonianVimPlugin, ham_vim_plugin
from timwidth.vim_engine import (
    KXState,
    ResourceLimitError,
    enumerate_bag_states,
    solve_locally_uniform,
)
from timwidth.widths import vim_sequence

from .conftest import random_graph


class TinyPlugin(HamiltonianVimPlugin):
    """Hamiltonian routines without the derived-counter shortcut, so the
    engine exercises its full counter-range enumeration."""

    def counter_candidates(self, prev, label_map, snap, instance):
        return None


def reference_algorithm2(plugin, instance):
    """Direct transcription of the chronological meta-algorithm: enumerate
    every bag state per timestep and filter against every predecessor."""
    g = instance.graph
    vs = vim_sequence(g)
    states = {
        s.restrict(vs.bags[0]) for s in plugin.initial_states(instance, vs.bags[0])
    }
    for t in range(1, g.lifetime + 1):
        snap = snapshot(g, t)
        ft = vs.bags[t]
        kept = set()
        for cand in enumerate_bag_states(ft, plugin, instance):
            for prev in states:
                if plugin.transition(prev.restrict(ft), cand, snap):
                    kept.add(cand)
                    break
        states = kept
    return any(plugin.accept(s, instance) for s in states)


def test_enumerate_counts():
    class NoCounter(HamiltonianVimPlugin):
        counter_arity = 0

        def counter_ranges(self, instance):
            return ()

    inst = HamiltonianInstance(TemporalGraph(3, [(0, 1, 1)]))
    assert len(enumerate_bag_states(frozenset(), NoCounter(), inst)) == 1
    assert len(enumerate_bag_states(frozenset({4}), NoCounter(), inst)) == 3

    class OneCounter(HamiltonianVimPlugin):
        def counter_ranges(self, instance):
            return ((0, 3),)

    states = enumerate_bag_states(frozenset({1, 2}), OneCounter(), inst)
    assert len(states) == 9 * 4
    assert len(set(states)) == len(states)


def test_trivial_ham_solves():
    g = TemporalGraph(2, [(0, 1, 1)])
    res = solve_locally_uniform(ham_vim_plugin(), HamiltonianInstance(g))
    assert res.answer
    g2 = TemporalGraph(3, [(0, 1, 1), (1, 2, 1)])
    assert not solve_locally_uniform(ham_vim_plugin(), HamiltonianInstance(g2)).answer


def test_engine_matches_reference_algorithm(rng):
    plugin = ham_vim_plugin()
    naive = TinyPlugin()
    for _ in range(25):
        g = random_graph(rng, n_max=4, lam_max=3)
        inst = HamiltonianInstance(g)
        expected = reference_algorithm2(naive, inst)
        assert solve_locally_uniform(plugin, inst).answer == expected
        assert solve_locally_uniform(naive, inst).answer == expected


def test_table_sizes_respect_bound(rng):
    plugin = ham_vim_plugin()
    for _ in range(20):
        g = random_graph(rng, n_max=6, lam_max=4)
        inst = HamiltonianInstance(g)
        res = solve_locally_uniform(plugin, inst)
        b = plugin.counter_bound(inst)
        bound = (2 * b + 1) ** plugin.counter_arity * len(plugin.labels) ** res.omega
        assert all(size <= bound for size in res.table_sizes)


def test_kept_states_live_on_ft(rng):
    plugin = ham_vim_plugin()
    for _ in range(10):
        g = random_graph(rng, n_max=5, lam_max=4)
        res = solve_locally_uniform(plugin, HamiltonianInstance(g), record=True)
        vs = vim_sequence(g)
        for t, table in enumerate(res.tables):
            for state in table:
                assert {v for v, _ in state.labels} <= vs.bags[t]


def test_relabelling_invariance(rng):
    plugin = ham_vim_plugin()
    for _ in range(10):
        g = random_graph(rng, n_max=5, lam_max=3)
        perm = list(range(g.n))
        rng.shuffle(perm)
        g2 = TemporalGraph(g.n, [(perm[u], perm[v], t) for u, v, t in g.time_edges])
        a = solve_locally_uniform(plugin, HamiltonianInstance(g)).answer
        b = solve_locally_uniform(plugin, HamiltonianInstance(g2)).answer
        assert a == b


def test_resource_guard_names_timestep():
    g = TemporalGraph(6, [(u, v, 1) for u in range(6) for v in range(u + 1, 6)])
    with pytest.raises(ResourceLimitError) as err:
        solve_locally_uniform(ham_vim_plugin(), HamiltonianInstance(g), state_cap=10)
    assert "timestep 1" in str(err.value)


def test_kxstate_accessors():
    s = KXState.make({0: "C", 1: "U"}, (1,), "U")
    assert s.label(0) == "C"
    assert s.label(1) == "U"
    assert s.label(9) == "U"
    assert s.labelled("C") == {0}
    assert s.restrict({1}).labels == ()
