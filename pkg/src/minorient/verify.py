"""End-to-end verifying-set construction: atomic, bounded-size, and additive-cost.

Pipeline: drop the observationally oriented arcs, build the per-component
reduction trees, turn each remaining target into a stabbing interval, solve,
and return the stab vertices as interventions. Bounded and cost variants pack
the atomic answer into groups after 2-coloring a forest arc subset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InputError
from .graphs import Arc, Dag, TargetEdges, edge_key, topological_order
from .hasse import hasse_diagram, cut_intervals
from .orient import oriented_subgraph, recover_interventions
from .stabbing import prepare, solve


@dataclass(frozen=True)
class InterventionSet:
    """Ordered list of vertex subsets, each of size at most k."""

    interventions: tuple[frozenset[int], ...]
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise InputError("k must be >= 1")
        seen = set()
        for s in self.interventions:
            if not s:
                raise InputError("empty intervention")
            if len(s) > self.k:
                raise InputError(f"intervention {sorted(s)} exceeds size bound {self.k}")
            if s in seen:
                raise InputError(f"duplicate intervention {sorted(s)}")
            seen.add(s)

    @staticmethod
    def atomic(vertices: Iterable[int]) -> "InterventionSet":
        return InterventionSet(tuple(frozenset([v]) for v in sorted(set(vertices))), k=1)

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.interventions:
            out |= s
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.interventions)

    def __iter__(self):
        return iter(self.interventions)


@dataclass(frozen=True)
class CostParams:
    """Objective alpha * (total vertex cost) + beta * (intervention count)."""

    alpha: float = 1.0
    beta: float = 0.0
    vertex_costs: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise InputError("alpha and beta must be nonnegative")
        if any(c < 0 for c in self.vertex_costs.values()):
            raise InputError("vertex costs must be nonnegative")

    def cost_of(self, v: int) -> float:
        return float(self.vertex_costs.get(v, 1.0))

    def objective(self, iset: InterventionSet) -> float:
        w = sum(self.cost_of(v) for s in iset for v in s)
        return self.alpha * w + self.beta * len(iset)


def verify_is_verifying(g: Dag, targets: TargetEdges, iset: InterventionSet) -> bool:
    """True iff every target edge is oriented by the interventions."""
    recovered = recover_interventions(g, list(iset)).recovered
    oriented = {edge_key(u, v) for u, v in recovered}
    return all(e in oriented for e in targets.edges)


def _stab_vertices(g: Dag, targets: TargetEdges, stab_cost: Mapping[int, float] | None) -> list[int]:
    """Shared pipeline core: stab vertices orienting every unoriented target."""
    targets.validate_against(g)
    g0 = oriented_subgraph(g, [])
    # a target already oriented observationally needs no intervention
    remaining = TargetEdges(frozenset(e for e in targets.edges if g0.has_edge(*e)))
    if not remaining.edges:
        return []
    trees = hasse_diagram(g0)
    intervals = cut_intervals(g0, trees, remaining)
    by_tree: dict[int, list] = {}
    tree_of: dict[int, int] = {}
    for i, t in enumerate(trees):
        for v in t.component:
            tree_of[v] = i
    for iv in intervals:
        by_tree.setdefault(tree_of[iv.end], []).append(iv)
    chosen: list[int] = []
    for i, ivs in sorted(by_tree.items()):
        prep = prepare(trees[i], ivs, stab_cost)
        _, stab = solve(prep)
        chosen.extend(stab)
    return sorted(chosen)


def atomic_verifying_set(g: Dag, targets: TargetEdges) -> InterventionSet:
    """A minimum-size set of single-vertex interventions orienting all targets."""
    result = InterventionSet.atomic(_stab_vertices(g, targets, None))
    assert verify_is_verifying(g, targets, result) or not targets.edges
    return result


def forest_subset(g: Dag, arcs: Iterable[Arc]) -> frozenset[Arc]:
    """Shrink an arc set to a forest without losing recoverable orientations.

    While the arc-induced skeleton has a cycle, the two cycle neighbors of its
    order-maximal vertex s are adjacent in g (no colliders); the arc between
    them replaces the arc from its source to s. Endpoints never grow, and the
    sum of arc endpoint positions strictly drops, so this terminates.
    """
    from .graphs import v_structures

    if v_structures(g):
        raise InputError("forest_subset requires a collider-free graph")
    s_set = set(arcs)
    for a in s_set:
        if a not in g.arcs:
            raise InputError(f"{a} is not an arc of the graph")
    pos = {v: i for i, v in enumerate(topological_order(g))}

    def find_cycle() -> list[int] | None:
        # grow a forest edge by edge; the first edge closing a cycle yields it
        forest: dict[int, set[int]] = {}
        comp: dict[int, int] = {}

        def root(x: int) -> int:
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for u, v in sorted(edge_key(a, b) for a, b in s_set):
            comp.setdefault(u, u)
            comp.setdefault(v, v)
            forest.setdefault(u, set())
            forest.setdefault(v, set())
            if root(u) == root(v):
                # BFS path u -> v through accepted edges
                prev: dict[int, int | None] = {u: None}
                queue = [u]
                while queue:
                    x = queue.pop(0)
                    if x == v:
                        break
                    for w in sorted(forest[x]):
                        if w not in prev:
                            prev[w] = x
                            queue.append(w)
                path = [v]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])  # type: ignore[arg-type]
                return path
            comp[root(u)] = root(v)
            forest[u].add(v)
            forest[v].add(u)
        return None

    while True:
        cyc = find_cycle()
        if cyc is None:
            return frozenset(s_set)
        s = max(cyc, key=lambda z: pos[z])
        i = cyc.index(s)
        x, y = cyc[i - 1], cyc[(i + 1) % len(cyc)]
        chord = g.arc_for_edge(x, y)  # exists: no colliders at s
        src = chord[0]
        assert (src, s) in s_set, f"expected cycle arc {src}->{s}"
        s_set.add(chord)
        s_set.remove((src, s))


def _two_coloring(vertices: Iterable[int], forest_arcs: Iterable[Arc]) -> dict[int, int]:
    """Proper 2-coloring of a forest by BFS parity, least vertex of each tree = 0."""
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in forest_arcs:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    color: dict[int, int] = {}
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop(0)
            for w in sorted(adj[x]):
                if w not in color:
                    color[w] = 1 - color[x]
                    queue.append(w)
    return color


def _pack_by_color(vertices: list[int], forest_arcs: frozenset[Arc], k: int) -> list[frozenset[int]]:
    """Greedy size-<=k grouping within each color class, ascending vertex id."""
    color = _two_coloring(vertices, forest_arcs)
    groups: list[frozenset[int]] = []
    for c in (0, 1):
        members = sorted(v for v in vertices if color.get(v, 0) == c)
        for i in range(0, len(members), k):
            groups.append(frozenset(members[i : i + k]))
    return [gset for gset in groups if gset]


def bounded_verifying_set(g: Dag, targets: TargetEdges, k: int) -> InterventionSet:
    """Verifying set of size-<=k interventions, at most ceil(l/k)+1 of them,
    where l is the atomic optimum."""
    if k < 1:
        raise InputError("k must be >= 1")
    atomic = atomic_verifying_set(g, targets)
    if k == 1 or len(atomic) == 0:
        return atomic
    chosen = sorted(atomic.vertices())
    g0 = oriented_subgraph(g, [])
    incident = {a for a in g0.arcs if a[0] in set(chosen) or a[1] in set(chosen)}
    forest = forest_subset(g0, incident)
    groups = _pack_by_color(chosen, forest, k)
    result = InterventionSet(tuple(groups), k=k)
    assert len(result) <= math.ceil(len(atomic) / k) + 1
    return result


def cost_verifying_set(g: Dag, targets: TargetEdges, k: int, params: CostParams) -> InterventionSet:
    """Bounded verifying set whose objective is within 2*beta of the optimum.

    The stabbing solver runs with surrogate vertex weight
    alpha * cost(v) + beta / k, then the stab vertices are packed like the
    bounded variant.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    targets.validate_against(g)
    surrogate = {
        v: params.alpha * params.cost_of(v) + params.beta / k for v in range(g.n)
    }
    chosen = _stab_vertices(g, targets, surrogate)
    if not chosen:
        return InterventionSet((), k=k)
    if k == 1:
        return InterventionSet.atomic(chosen)
    g0 = oriented_subgraph(g, [])
    incident = {a for a in g0.arcs if a[0] in set(chosen) or a[1] in set(chosen)}
    forest = forest_subset(g0, incident)
    groups = _pack_by_color(chosen, forest, k)
    return InterventionSet(tuple(groups), k=k)
