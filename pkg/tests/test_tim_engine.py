from itertools import product

import pytest

from timwidth.core import TemporalGraph, _components
from timwidth.problems import (
    HamiltonianInstance,
    TredInstance,
    ham_tim_plugin,
    tred_tim_plugin,
)
from timwidth.tim_engine import (
    ComponentGraph,
    TwoStepStructure,
    aggregate_child_totals,
    solve_component_exchangeable,
)
from timwidth.vim_engine import ResourceLimitError

from .conftest import random_graph


def test_aggregate_trivia():
    assert aggregate_child_totals([], (0,))
    assert not aggregate_child_totals([], (1,))
    assert aggregate_child_totals([{(1,), (3,)}], (3,))
    assert not aggregate_child_totals([{(1,), (3,)}], (2,))


def test_aggregate_matches_cartesian_oracle(rng):
    for _ in range(60):
        children = [
            {tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(rng.randint(1, 4))}
            for _ in range(rng.randint(0, 3))
        ]
        target = tuple(rng.randint(-4, 4) for _ in range(2))
        brute = any(
            tuple(map(sum, zip(*combo))) == target if combo else target == (0, 0)
            for combo in product(*children)
        )
        assert aggregate_child_totals(children, target) == brute


def configuration_oracle(plugin, instance):
    """Monolithic reference: enumerate full configurations over every timed
    component of the graph and apply the realisability clauses globally."""
    g = instance.graph
    lam = g.lifetime
    comp_views = {}
    per_time_components = {}
    for t in range(0, lam + 1):
        st = 1 if t == 0 else t
        edges = g.edges_at(st)
        comps = _components(g.n, edges)
        per_time_components[t] = []
        for verts in comps:
            vset = set(verts)
            view = ComponentGraph(t, verts, tuple(e for e in edges if e[0] in vset))
            per_time_components[t].append(view)
            comp_views[(t, verts)] = view

    slots = []
    for t in range(0, lam + 1):
        role = "start" if t == 0 else ("fin" if t == lam else "val")
        for view in per_time_components[t]:
            options = plugin.assignments(view, t, role, instance)
            slots.append(((t, view), options))

    vu = plugin.v_upper(instance)
    k = plugin.arity(instance)
    keys = [key for key, _ in slots]
    for combo in product(*[opts for _, opts in slots]):
        chosen = dict(zip(keys, combo))
        label_at = {}
        for (t, view), (labelling, _vec) in chosen.items():
            for v, l in zip(view.vertices, labelling):
                label_at[(t, v)] = l
        ok = True
        for (t, view), (labelling, _vec) in chosen.items():
            if t == 0:
                continue
            prev = tuple(label_at[(t - 1, v)] for v in view.vertices)
            if not plugin.tr(prev, labelling, view, instance):
                ok = False
                break
        if not ok:
            continue
        total = [0] * k
        for (_t, _view), (_lab, vec) in chosen.items():
            for i, x in enumerate(vec):
                total[i] += x
        if all(a <= b for a, b in zip(total, vu)):
            return True
    return False


def small_graphs(rng, count, n_max=3, lam_max=2):
    out = []
    for _ in range(count):
        g = random_graph(rng, n_max=n_max, lam_max=lam_max, p=0.5)
        if g.lifetime >= 1:
            out.append(g)
    return out


def test_engine_matches_configuration_oracle_ham(rng):
    plugin = ham_tim_plugin()
    for g in small_graphs(rng, 40):
        inst = HamiltonianInstance(g)
        assert (
            solve_component_exchangeable(plugin, inst).answer
            == configuration_oracle(plugin, inst)
        ), g


def test_engine_matches_configuration_oracle_tred(rng):
    plugin = tred_tim_plugin()
    for g in small_graphs(rng, 25):
        inst = TredInstance(g, 0, rng.randint(1, g.n), rng.randint(0, 2))
        assert (
            solve_component_exchangeable(plugin, inst).answer
            == configuration_oracle(plugin, inst)
        ), (g, inst)


def test_realisable_profiles_at_time0_leaf():
    from timwidth.tim_engine import realisable_profiles

    g = TemporalGraph(2, [(0, 1, 1)])
    plugin = ham_tim_plugin()
    inst = HamiltonianInstance(g)
    structure = TwoStepStructure(g)
    leaf = next(
        s for s, t in enumerate(structure.rooted.times) if t == 0
    )
    profiles = realisable_profiles(structure, plugin, inst, leaf, {})
    # St-accepting labellings only, each with total equal to its own vector
    assert profiles
    for (rho, extra), totals in profiles.items():
        assert extra == ()
        ((labelling, vector),) = rho
        assert plugin.st(labelling, vector, structure.comps[(0, 0)], inst)
        assert totals == {vector}


def test_realisable_profiles_empty_when_children_incompatible():
    from timwidth.tim_engine import realisable_profiles

    g = TemporalGraph(2, [(0, 1, 1), (0, 1, 2)])
    plugin = ham_tim_plugin()
    inst = HamiltonianInstance(g)
    structure = TwoStepStructure(g)
    rd = structure.rooted
    node = next(s for s, t in enumerate(rd.times) if t == 2)
    # feed the internal node a child table with no usable profiles
    child_results = {c: {} for c in rd.children[node]}
    assert realisable_profiles(structure, plugin, inst, node, child_results) == {}


def test_every_component_tr_checked_exactly_once(rng):
    for _ in range(25):
        g = random_graph(rng, n_max=6, lam_max=4)
        structure = TwoStepStructure(g)
        expected = set()
        for node, keys in enumerate(structure.own_comps):
            for key in keys:
                if key[0] >= 1:
                    expected.add(key)
        assert set(structure.tr_site) == expected
        for key, site in structure.tr_site.items():
            home = structure.home[key]
            assert site == home or site == structure.rooted.parent[home]


def test_root_choice_invariance(rng):
    plugin = ham_tim_plugin()
    for _ in range(12):
        g = random_graph(rng, n_max=5, lam_max=4)
        if not g.time_edges:
            continue
        inst = HamiltonianInstance(g)
        base = solve_component_exchangeable(plugin, inst)
        n_nodes = base.bag_count - sum(
            1 for t in TwoStepStructure(g).rooted.times if t == 0
        )
        for alt in range(min(n_nodes, 4)):
            res = solve_component_exchangeable(plugin, inst, root_override=alt)
            assert res.answer == base.answer


def test_profile_counts_respect_bound(rng):
    plugin = ham_tim_plugin()
    for _ in range(10):
        g = random_graph(rng, n_max=5, lam_max=3)
        if not g.time_edges:
            continue
        inst = HamiltonianInstance(g)
        res = solve_component_exchangeable(plugin, inst)
        phi = res.phi
        b = plugin.counter_bound(inst)
        k = plugin.arity(inst)
        bound = (
            len(plugin.label_set(inst)) ** (3 * phi * phi)
            * (2 * b + 1) ** (3 * k * phi * phi)
            * (2 * g.lifetime * g.n * b + 1) ** k
        )
        assert all(c <= bound for c in res.profile_counts.values())


def test_profile_cap_names_bag():
    g = TemporalGraph(6, [(u, v, 1) for u in range(6) for v in range(u + 1, 6)])
    with pytest.raises(ResourceLimitError) as err:
        solve_component_exchangeable(
            ham_tim_plugin(), HamiltonianInstance(g), cap=2
        )
    assert "bag" in str(err.value)


def test_engine_requires_lifetime():
    with pytest.raises(ValueError):
        solve_component_exchangeable(
            ham_tim_plugin(), HamiltonianInstance(TemporalGraph(2, []))
        )
