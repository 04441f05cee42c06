"""Orientation propagation: Meek closure, essential graphs, recovered arcs.

The closure engine is a worklist fixpoint over the four local rules; it is
deliberately the naive desk-scale algorithm, certified by the invariant test
suite rather than tuned for asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .graphs import Arc, Dag, Edge, Pdag, edge_key, v_structures


@dataclass(frozen=True)
class OrientationResult:
    """Closure of a seed orientation plus the recovered arc set (its directed part)."""

    closure: Pdag
    recovered: frozenset[Arc]


def meek_closure(p: Pdag) -> Pdag:
    """Apply the four orientation rules until none fires.

    The caller guarantees the directed part extends to a DAG consistent with
    the skeleton; under that promise the fixpoint is unique and idempotent.

    Rules on an undirected edge {a, b}, oriented a -> b when:
      R1: some c -> a with c not adjacent to b
      R2: some c with a -> c -> b
      R3: a - c and a - d undirected, c -> b <- d, c not adjacent to d
      R4: a - d undirected, d -> c -> b, c adjacent to a, b not adjacent to d
    """
    n = p.n
    pa: list[set[int]] = [set() for _ in range(n)]
    ch: list[set[int]] = [set() for _ in range(n)]
    und: list[set[int]] = [set() for _ in range(n)]
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in p.directed:
        pa[v].add(u)
        ch[u].add(v)
        adj[u].add(v)
        adj[v].add(u)
    for u, v in p.undirected:
        und[u].add(v)
        und[v].add(u)
        adj[u].add(v)
        adj[v].add(u)

    def orient(a: int, b: int) -> None:
        und[a].discard(b)
        und[b].discard(a)
        ch[a].add(b)
        pa[b].add(a)

    def fires(a: int, b: int) -> bool:
        # R1
        if not pa[a] <= adj[b]:
            return True
        # R2
        if ch[a] & pa[b]:
            return True
        # R3: two non-adjacent parents of b, both undirected-linked to a
        linked = pa[b] & und[a]
        for c in linked:
            if (linked - {c}) - adj[c]:
                return True
        # R4: d - a undirected, d -> c -> b, c adjacent to a, b not adjacent to d
        for c in pa[b] & adj[a]:
            if (pa[c] & und[a]) - adj[b] - {b}:
                return True
        return False

    changed = True
    while changed:
        changed = False
        for a, b in sorted(e for e in p.skeleton_edges()):
            if b in und[a]:
                if fires(a, b):
                    orient(a, b)
                    changed = True
                elif fires(b, a):
                    orient(b, a)
                    changed = True
    directed = {(u, v) for u in range(n) for v in ch[u]}
    undirected = {edge_key(u, v) for u in range(n) for v in und[u] if u < v}
    return Pdag(n, directed, undirected)


def _closure(g: Dag, seed_arcs: set[Arc]) -> OrientationResult:
    seeds = set(seed_arcs)
    for u, v, w in v_structures(g):
        seeds.add((u, v))
        seeds.add((w, v))
    undirected = [e for e in g.skeleton_edges() if (e[0], e[1]) not in seeds and (e[1], e[0]) not in seeds]
    closure = meek_closure(Pdag(g.n, seeds, undirected))
    return OrientationResult(closure=closure, recovered=closure.directed)


def essential_graph(g: Dag) -> OrientationResult:
    """Observational essential graph: collider arcs as seeds, then closure."""
    return _closure(g, set())


def cut_arcs(g: Dag, interventions: Iterable[frozenset[int] | set[int]]) -> set[Arc]:
    """Arcs of g with exactly one endpoint inside some intervention."""
    out: set[Arc] = set()
    for s in interventions:
        ss = set(s)
        for u, v in g.arcs:
            if (u in ss) != (v in ss):
                out.add((u, v))
    return out


def recover_interventions(g: Dag, interventions: Iterable[frozenset[int] | set[int]]) -> OrientationResult:
    """Interventional essential graph for a list of vertex subsets."""
    groups = [frozenset(s) for s in interventions]
    for s in groups:
        if any(not (0 <= v < g.n) for v in s):
            raise InputError(f"intervention {sorted(s)} out of range")
    return _closure(g, cut_arcs(g, groups))


def recover_arcs(g: Dag, seed_arcs: Iterable[Arc]) -> OrientationResult:
    """Closure after orienting an explicit arc subset of g (plus collider arcs)."""
    seeds = set(seed_arcs)
    for a in seeds:
        if a not in g.arcs:
            raise InputError(f"seed arc {a} is not an arc of the graph")
    return _closure(g, seeds)


def atomic_closures(g: Dag) -> dict[int, frozenset[Arc]]:
    """Recovered arcs of every single-vertex intervention, cached per Dag."""
    if g._atomic_closures is None:
        g._atomic_closures = {
            v: recover_interventions(g, [{v}]).recovered for v in range(g.n)
        }
    return g._atomic_closures


def chain_components(p: Pdag) -> list[list[int]]:
    """Connected components of the undirected part; isolated vertices are singletons."""
    adj: list[set[int]] = [set() for _ in range(p.n)]
    for u, v in p.undirected:
        adj[u].add(v)
        adj[v].add(u)
    seen = [False] * p.n
    comps = []
    for s in range(p.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            for w in adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def covered_edges(g: Dag) -> set[Edge]:
    """Edges u -> v with Pa(u) \\ {v} = Pa(v) \\ {u}."""
    out = set()
    for u, v in g.arcs:
        if g.parents(u) - {v} == g.parents(v) - {u}:
            out.add(edge_key(u, v))
    return out


def oriented_subgraph(g: Dag, interventions: Iterable[frozenset[int] | set[int]]) -> Dag:
    """The arc-induced subgraph on arcs NOT recovered by the interventions."""
    recovered = recover_interventions(g, interventions).recovered
    return Dag(g.n, g.arcs - recovered)


def is_chain_graph(p: Pdag) -> bool:
    """No partially directed cycle: contract undirected components, then check
    the quotient is acyclic and no directed arc stays inside a component."""
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(chain_components(p)):
        for v in comp:
            comp_of[v] = i
    quotient_arcs = set()
    for u, v in p.directed:
        if comp_of[u] == comp_of[v]:
            return False
        quotient_arcs.add((comp_of[u], comp_of[v]))
    # cycle check on the quotient
    k = 1 + max(comp_of.values(), default=-1)
    adj: list[list[int]] = [[] for _ in range(k)]
    indeg = [0] * k
    for a, b in quotient_arcs:
        adj[a].append(b)
        indeg[b] += 1
    stack = [c for c in range(k) if indeg[c] == 0]
    seen = 0
    while stack:
        c = stack.pop()
        seen += 1
        for d in adj[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                stack.append(d)
    return seen == k
