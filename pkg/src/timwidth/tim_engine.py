"""Realisable-profile DP over rooted 2-step TIM decompositions.

The engine answers component-exchangeable temporally uniform problems:
plugins supply St / Fin / Val / Tr routines on timed components plus a
componentwise upper bound on the summed counter vectors. Realisability is
computed bottom-up; per bag only the assignments of its own-time components
and a small boundary labelling are visible to the parent, which keeps the
per-bag tables at partial-profile size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import TemporalGraph, _components
from .decomposition import (
    build_two_step,
    compute_tim_decomposition,
    root_and_augment,
)
from .vim_engine import ResourceLimitError


@dataclass(frozen=True)
class ComponentGraph:
    """One timed connected component with its snapshot edges."""

    t: int
    vertices: tuple
    edges: tuple

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def index(self):
        return {v: i for i, v in enumerate(self.vertices)}


class TimProblemPlugin:
    """Problem bundle for the component-exchangeable engine.

    Labellings are tuples aligned with a component's sorted vertex tuple.
    The boolean routines are authoritative; vector_candidates and successors
    only narrow the enumeration and every candidate they emit is re-checked.
    """

    labels: tuple = ()

    def label_set(self, instance):
        return self.labels

    def arity(self, instance) -> int:
        raise NotImplementedError

    def counter_bound(self, instance) -> int:
        """Max absolute value of any per-component vector entry."""
        raise NotImplementedError

    def v_upper(self, instance) -> tuple:
        raise NotImplementedError

    def st(self, labelling, vector, comp: ComponentGraph, instance) -> bool:
        raise NotImplementedError

    def val(self, labelling, vector, comp: ComponentGraph, t, instance) -> bool:
        raise NotImplementedError

    def fin(self, labelling, vector, comp: ComponentGraph, instance) -> bool:
        raise NotImplementedError

    def tr(self, prev_labelling, labelling, comp: ComponentGraph, instance) -> bool:
        raise NotImplementedError

    def vector_candidates(self, labelling, comp, t, role, instance):
        """Vectors worth pairing with a labelling, or None for a full range scan."""
        return None

    def successors(self, prev_labelling, comp, instance):
        """Labellings reachable from prev_labelling, or None for all labellings."""
        return None

    def check(self, role, labelling, vector, comp, t, instance):
        if role == "start":
            return self.st(labelling, vector, comp, instance)
        if role == "fin":
            return self.fin(labelling, vector, comp, instance)
        return self.val(labelling, vector, comp, t, instance)

    def assignments(self, comp, t, role, instance):
        """All admissible (labelling, vector) pairs of one timed component."""
        out = []
        for labelling in product(self.label_set(instance), repeat=len(comp.vertices)):
            vecs = self.vector_candidates(labelling, comp, t, role, instance)
            if vecs is None:
                k = self.arity(instance)
                b = self.counter_bound(instance)
                vecs = product(range(-b, b + 1), repeat=k)
            for vec in vecs:
                vec = tuple(vec)
                if self.check(role, labelling, vector=vec, comp=comp, t=t, instance=instance):
                    out.append((labelling, vec))
        return out


def aggregate_child_totals(per_child_totals, target) -> bool:
    """True iff one vector per child can be picked summing exactly to target."""
    target = tuple(target)
    acc = {tuple([0] * len(target))}
    for totals in per_child_totals:
        totals = {tuple(t) for t in totals}
        if not totals:
            return False
        acc = {
            tuple(a + b for a, b in zip(x, y)) for x in acc for y in totals
        }
    return target in acc


def _sumset(base, sets):
    acc = {tuple(base)}
    for s in sets:
        acc = {tuple(a + b for a, b in zip(x, y)) for x in acc for y in s}
    return acc


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


class TwoStepStructure:
    """Static data shared by a solve: components, homes, and Tr sites."""

    def __init__(self, g: TemporalGraph, root_override=None):
        self.graph = g
        self.decomposition = compute_tim_decomposition(g)
        self.rooted = root_and_augment(self.decomposition, root_override)
        self.two_step = build_two_step(self.rooted, g)
        rd = self.rooted
        lam = g.lifetime

        comps = {}
        comp_id_of = {}  # (t, vertex) -> (t, cid); t in 0..lam, 0 shares G_1 ids
        for t in range(0, lam + 1):
            st = 1 if t == 0 else t
            edge_pool = g.edges_at(st)
            for cid, verts in enumerate(_components(g.n, edge_pool)):
                vset = set(verts)
                edges = tuple(e for e in edge_pool if e[0] in vset)
                comps[(t, cid)] = ComponentGraph(t, verts, edges)
                for v in verts:
                    comp_id_of[(t, v)] = (t, cid)
        self.comps = comps

        node_of = {}  # (t, vertex) -> node id
        for s in range(len(rd.bags)):
            for v in rd.bags[s]:
                node_of[(rd.times[s], v)] = s
        self.node_of = node_of

        self.own_comps = []  # node -> tuple of (t, cid)
        for s in range(len(rd.bags)):
            t = rd.times[s]
            seen = []
            done = set()
            for v in sorted(rd.bags[s]):
                key = comp_id_of[(t, v)]
                if key not in done:
                    done.add(key)
                    seen.append(key)
            self.own_comps.append(tuple(seen))

        children_sets = [set(c) for c in rd.children]
        self.tr_site = {}
        for s in range(len(rd.bags)):
            t = rd.times[s]
            if t == 0:
                continue
            for key in self.own_comps[s]:
                comp = comps[key]
                prev_nodes = {node_of[(t - 1, v)] for v in comp.vertices}
                if prev_nodes <= children_sets[s]:
                    self.tr_site[key] = s
                else:
                    self.tr_site[key] = rd.parent[s]

        # B-checks grouped by (site, up-child home)
        self.checks_from_child = {}  # (site, child) -> tuple of comp keys
        self.home = {}
        for s in range(len(rd.bags)):
            for key in self.own_comps[s]:
                self.home[key] = s
        for key, site in self.tr_site.items():
            h = self.home[key]
            if site != h:
                self.checks_from_child.setdefault((site, h), []).append(key)

        # boundary labels each node must expose to its parent
        self.extra_vertices = []
        for s in range(len(rd.bags)):
            p = rd.parent[s]
            extra = set()
            if p is not None:
                for key in self.checks_from_child.get((p, s), ()):
                    extra |= set(self.comps[key].vertices) - rd.bags[p]
            self.extra_vertices.append(tuple(sorted(extra)))

    def postorder(self):
        rd = self.rooted
        order = []
        for root in rd.roots:
            stack = [root]
            emit = []
            while stack:
                x = stack.pop()
                emit.append(x)
                stack.extend(rd.children[x])
            order.extend(reversed(emit))
        return order


@dataclass
class TimSolveResult:
    answer: bool
    phi: int
    two_step_width: int
    profile_counts: dict
    bag_count: int
    n: int
    lifetime: int


DEFAULT_PROFILE_CAP = 2_000_000


def realisable_profiles(structure, plugin, instance, node, child_results, cap=DEFAULT_PROFILE_CAP):
    """Realisable partial profiles of one bag, with their achievable totals.

    Returns a dict keyed by (rho, extra) where rho assigns (labelling, vector)
    to each own-time component and extra lists boundary labels the parent
    needs; each key maps to the set of achievable subtree total vectors.
    """
    rd = structure.rooted
    g = structure.graph
    lam = g.lifetime
    t = rd.times[node]
    role = "start" if t == 0 else ("fin" if t == lam else "val")
    down = [c for c in rd.children[node] if rd.times[c] == t - 1]
    up = [c for c in rd.children[node] if rd.times[c] == t + 1]

    own = structure.own_comps[node]
    a_checked = [key for key in own if structure.tr_site.get(key) == node]
    a_set = set(a_checked)

    # guard before materialising anything: the label product alone ought to
    # stay below the cap
    n_labels = len(plugin.label_set(instance))
    estimate = 1
    for c in down:
        estimate *= max(len(child_results[c]), 1)
    for key in own:
        if key not in a_set:
            estimate *= max(n_labels ** len(structure.comps[key].vertices), 1)
    if estimate > cap:
        raise ResourceLimitError(f"bag {node}", estimate, cap)

    free_assignments = {
        key: plugin.assignments(structure.comps[key], t, role, instance)
        for key in own
        if key not in a_set
    }

    up_checks = {c: structure.checks_from_child.get((node, c), ()) for c in up}
    up_need = {
        c: sorted(
            {v for key in up_checks[c] for v in structure.comps[key].vertices}
            & rd.bags[node]
        )
        for c in up
    }
    up_cache = {c: {} for c in up}

    def filter_up(c, own_label_at):
        restriction = tuple(own_label_at[v] for v in up_need[c])
        cache = up_cache[c]
        if restriction in cache:
            return cache[restriction]
        combined = set()
        for (rho_c, extra_c), totals_c in child_results[c].items():
            extra_map = dict(extra_c)
            rho_map = dict(zip(structure.own_comps[c], rho_c))
            ok = True
            for key in up_checks[c]:
                comp = structure.comps[key]
                nxt = rho_map[key][0]
                prev = tuple(
                    own_label_at[v] if v in rd.bags[node] else extra_map[v]
                    for v in comp.vertices
                )
                if not plugin.tr(prev, nxt, comp, instance):
                    ok = False
                    break
            if ok:
                combined |= totals_c
        cache[restriction] = combined
        return combined

    results = {}
    down_keys = [list(child_results[c].items()) for c in down]
    extra_vs = structure.extra_vertices[node]

    for down_combo in product(*down_keys) if down_keys else [()]:
        prev_label_at = {}
        down_totals = []
        for c, (key_c, totals_c) in zip(down, down_combo):
            rho_c, _ = key_c
            for comp_key, (labelling, _vec) in zip(structure.own_comps[c], rho_c):
                for v, l in zip(structure.comps[comp_key].vertices, labelling):
                    prev_label_at[v] = l
            down_totals.append(totals_c)

        # candidates for Tr-checked own components, narrowed by the previous labels
        a_candidates = []
        feasible = True
        for key in a_checked:
            comp = structure.comps[key]
            prev = tuple(prev_label_at[v] for v in comp.vertices)
            succ = plugin.successors(prev, comp, instance)
            cands = []
            if succ is None:
                for labelling, vec in plugin.assignments(comp, t, role, instance):
                    if plugin.tr(prev, labelling, comp, instance):
                        cands.append((labelling, vec))
            else:
                for labelling in succ:
                    if not plugin.tr(prev, labelling, comp, instance):
                        continue
                    vecs = plugin.vector_candidates(labelling, comp, t, role, instance)
                    if vecs is None:
                        vecs = [
                            vec
                            for lab2, vec in plugin.assignments(comp, t, role, instance)
                            if lab2 == labelling
                        ]
                        for vec in vecs:
                            cands.append((labelling, tuple(vec)))
                        continue
                    for vec in vecs:
                        vec = tuple(vec)
                        if plugin.check(role, labelling, vec, comp, t, instance):
                            cands.append((labelling, vec))
            if not cands:
                feasible = False
                break
            a_candidates.append(cands)
        if not feasible:
            continue

        free_lists = [free_assignments[key] for key in own if key not in a_set]
        free_keys = [key for key in own if key not in a_set]

        for a_choice in product(*a_candidates) if a_candidates else [()]:
            for f_choice in product(*free_lists) if free_lists else [()]:
                assignment = dict(zip(a_checked, a_choice))
                assignment.update(zip(free_keys, f_choice))
                rho = tuple(assignment[key] for key in own)
                own_label_at = {}
                for key in own:
                    labelling = assignment[key][0]
                    for v, l in zip(structure.comps[key].vertices, labelling):
                        own_label_at[v] = l

                up_totals = []
                ok = True
                for c in up:
                    tot = filter_up(c, own_label_at)
                    if not tot:
                        ok = False
                        break
                    up_totals.append(tot)
                if not ok:
                    continue

                k = plugin.arity(instance)
                own_sum = tuple(
                    sum(vals) for vals in zip(*(assignment[key][1] for key in own))
                ) if own else tuple([0] * k)
                totals = _sumset(own_sum, down_totals + up_totals)
                extra = tuple((v, prev_label_at[v]) for v in extra_vs)
                results.setdefault((rho, extra), set()).update(totals)

    return results


def solve_component_exchangeable(
    plugin: TimProblemPlugin,
    instance,
    cap=DEFAULT_PROFILE_CAP,
    root_override=None,
    structure=None,
) -> TimSolveResult:
    g = instance.graph
    if g.lifetime == 0:
        raise ValueError("engine needs lifetime >= 1; handle edgeless instances upstream")
    if structure is None:
        structure = TwoStepStructure(g, root_override)
    rd = structure.rooted

    results = {}
    profile_counts = {}
    for node in structure.postorder():
        child_results = {c: results[c] for c in rd.children[node]}
        res = realisable_profiles(structure, plugin, instance, node, child_results, cap)
        results[node] = res
        profile_counts[node] = sum(len(v) for v in res.values())
        for c in rd.children[node]:
            del results[c]

    per_tree = []
    for root in rd.roots:
        combined = set()
        for totals in results[root].values():
            combined |= totals
        per_tree.append(combined)

    answer = True
    vu = plugin.v_upper(instance)
    if any(not tree for tree in per_tree):
        answer = False
    else:
        overall = _sumset(tuple([0] * plugin.arity(instance)), per_tree)
        answer = any(_leq(total, vu) for total in overall)

    return TimSolveResult(
        answer,
        structure.decomposition.width,
        structure.two_step.width,
        profile_counts,
        len(rd.bags),
        g.n,
        g.lifetime,
    )
