"""Directed and partially directed graphs, structural queries, and instance generators.

Vertices are dense integer ids 0..n-1 throughout; external labels live only in
the file loader. All graph values are immutable after construction and every
operation here is a pure function, so concurrent use is safe.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetError, InputError

Arc = tuple[int, int]
Edge = tuple[int, int]  # unordered pair, stored with u < v


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Dag:
    """Fully oriented acyclic graph on vertices 0..n-1.

    Validates at construction: ids in range, no self-loops, at most one arc
    per unordered pair, and acyclicity.
    """

    __slots__ = ("n", "arcs", "_parents", "_children", "_adj", "_atomic_closures")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.arcs: frozenset[Arc] = frozenset((int(u), int(v)) for u, v in arcs)
        parents: list[set[int]] = [set() for _ in range(n)]
        children: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            if (v, u) in self.arcs:
                raise InputError(f"both orientations present for {{{u},{v}}}")
            parents[v].add(u)
            children[u].add(v)
        self._parents = tuple(frozenset(s) for s in parents)
        self._children = tuple(frozenset(s) for s in children)
        self._adj = tuple(self._parents[v] | self._children[v] for v in range(n))
        self._atomic_closures: dict[int, frozenset[Arc]] | None = None
        # acyclicity check; raises InputError on a cycle
        topological_order(self)

    def parents(self, v: int) -> frozenset[int]:
        return self._parents[v]

    def children(self, v: int) -> frozenset[int]:
        return self._children[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def skeleton_edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.arcs)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def arc_for_edge(self, u: int, v: int) -> Arc:
        """The oriented arc of this DAG for the unordered pair {u, v}."""
        if (u, v) in self.arcs:
            return (u, v)
        if (v, u) in self.arcs:
            return (v, u)
        raise InputError(f"{{{u},{v}}} is not an edge of the graph")

    def descendants_closed(self, v: int) -> frozenset[int]:
        """Des[v]: v plus everything reachable from v."""
        seen = {v}
        stack = [v]
        while stack:
            for w in self._children[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def ancestors_closed(self, v: int) -> frozenset[int]:
        """Anc[v]: v plus everything that reaches v."""
        seen = {v}
        stack = [v]
        while stack:
            for w in self._parents[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def connected_components(self) -> list[list[int]]:
        """Skeleton components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                for w in self._adj[stack.pop()]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Iterable[int]) -> tuple["Dag", dict[int, int]]:
        """Vertex-induced subgraph relabelled to 0..k-1; returns (dag, old->new map)."""
        keep = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(keep)}
        arcs = [(remap[u], remap[v]) for u, v in self.arcs if u in remap and v in remap]
        return Dag(len(keep), arcs), remap

    def __eq__(self, other) -> bool:
        return isinstance(other, Dag) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Dag(n={self.n}, arcs={sorted(self.arcs)})"


class Pdag:
    """Partially directed graph: a directed part plus an undirected part.

    The two parts are disjoint as unordered pairs. Orientation-engine outputs
    additionally satisfy the chain-graph property (no partially directed cycle),
    which tests check via ``is_chain_graph``.
    """

    __slots__ = ("n", "directed", "undirected")

    def __init__(self, n: int, directed: Iterable[Arc] = (), undirected: Iterable[Edge] = ()):
        self.n = n
        self.directed: frozenset[Arc] = frozenset((int(u), int(v)) for u, v in directed)
        self.undirected: frozenset[Edge] = frozenset(edge_key(u, v) for u, v in undirected)
        for u, v in self.directed:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad arc ({u},{v})")
            if (v, u) in self.directed:
                raise InputError(f"both orientations present for {{{u},{v}}}")
            if edge_key(u, v) in self.undirected:
                raise InputError(f"{{{u},{v}}} both directed and undirected")
        for u, v in self.undirected:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad edge {{{u},{v}}}")

    def skeleton_edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.directed) | self.undirected

    def undirected_neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.undirected if v in (a, b)}

    def is_oriented(self, u: int, v: int) -> bool:
        return (u, v) in self.directed or (v, u) in self.directed

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Pdag)
            and self.n == other.n
            and self.directed == other.directed
            and self.undirected == other.undirected
        )

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self.undirected))

    def __repr__(self) -> str:
        return (
            f"Pdag(n={self.n}, directed={sorted(self.directed)}, "
            f"undirected={sorted(self.undirected)})"
        )


@dataclass(frozen=True)
class TargetEdges:
    """An unordered set of skeleton edges whose orientation is requested."""

    edges: frozenset[Edge]

    @staticmethod
    def of(pairs: Iterable[Sequence[int]]) -> "TargetEdges":
        return TargetEdges(frozenset(edge_key(u, v) for u, v in pairs))

    def validate_against(self, g: Dag) -> None:
        bad = [e for e in self.edges if not g.has_edge(*e)]
        if bad:
            raise InputError(f"target pairs are not graph edges: {sorted(bad)}")

    def __iter__(self):
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def topological_order(g: Dag) -> list[int]:
    """A valid linear extension, smallest-id-first among ready vertices."""
    indeg = [len(g.parents(v)) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in sorted(g.children(v)):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != g.n:
        raise InputError("directed cycle detected")
    return order


def v_structures(g: Dag) -> set[tuple[int, int, int]]:
    """All induced colliders u -> v <- w with u, w non-adjacent, reported with u < w."""
    out = set()
    for v in range(g.n):
        pa = sorted(g.parents(v))
        for u, w in itertools.combinations(pa, 2):
            if not g.has_edge(u, w):
                out.add((u, v, w))
    return out


def _skeleton_adj(obj: Dag | Pdag) -> list[set[int]]:
    n = obj.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in obj.skeleton_edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_chordal(obj: Dag | Pdag) -> tuple[bool, list[int]]:
    """Chordality of the skeleton via maximum-cardinality search.

    Returns (flag, order) where order is a perfect elimination ordering when
    the flag is true (vertices listed so that each one's later neighbors form
    a clique). The order is still returned, but meaningless, on failure.
    """
    adj = _skeleton_adj(obj)
    n = obj.n
    weight = [0] * n
    visited = [False] * n
    mcs: list[int] = []  # visit order, first-chosen first
    for _ in range(n):
        v = max((u for u in range(n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        mcs.append(v)
        for w in adj[v]:
            if not visited[w]:
                weight[w] += 1
    pos = {v: i for i, v in enumerate(mcs)}
    # mcs reversed is a candidate PEO; check each vertex's earlier-visited
    # neighbors: all must be adjacent to the latest-visited one among them.
    for v in mcs:
        earlier = [w for w in adj[v] if pos[w] < pos[v]]
        if not earlier:
            continue
        m = max(earlier, key=lambda w: pos[w])
        if any(w != m and w not in adj[m] for w in earlier):
            return False, list(reversed(mcs))
    return True, list(reversed(mcs))


def clique_number(obj: Dag | Pdag) -> int:
    """Clique number of a chordal skeleton (max over PEO residual cliques)."""
    ok, peo = is_chordal(obj)
    if not ok:
        raise InputError("clique_number requires a chordal skeleton")
    pos = {v: i for i, v in enumerate(peo)}
    adj = _skeleton_adj(obj)
    best = 1 if obj.n else 0
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        best = max(best, 1 + len(later))
    return best


def _prufer_tree(n: int, rng: random.Random) -> set[Edge]:
    """Uniform random labelled tree on 0..n-1 via a random Pruefer sequence."""
    if n == 1:
        return set()
    if n == 2:
        return {(0, 1)}
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: set[Edge] = set()
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.add(edge_key(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = leaves[0], leaves[1]
    edges.add(edge_key(u, v))
    return edges


def generate_synthetic(n: int, p: float, seed: int) -> Dag:
    """Connected, acyclic, collider-free synthetic instance.

    Recipe: random tree union Erdos-Renyi G(n, p), oriented by vertex id,
    then repeatedly add u -> w (for id(u) < id(w)) for every remaining
    collider u -> v <- w until none are left. One seed stream drives the tree
    draw first, then the ER draw, in fixed order.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise InputError("p must be in [0, 1]")
    rng = random.Random(seed)
    edges = _prufer_tree(n, rng)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    while True:
        added = []
        for v in range(n):
            pa = sorted(w for w in adj[v] if w < v)
            for u, w in itertools.combinations(pa, 2):
                if w not in adj[u]:
                    added.append((u, w))
        if not added:
            break
        for u, w in added:
            adj[u].add(w)
            adj[w].add(u)
    arcs = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return Dag(n, arcs)


def lower_bound_instance(n: int) -> tuple[Dag, TargetEdges]:
    """Directed clique on 0..n-1 plus pendant arcs i -> n+i; targets = pendants."""
    if n < 1:
        raise InputError("n must be >= 1")
    arcs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    arcs += [(i, n + i) for i in range(n)]
    targets = TargetEdges.of([(i, n + i) for i in range(n)])
    return Dag(2 * n, arcs), targets


def min_vertex_cover(edges: TargetEdges | Iterable[Edge], max_endpoints: int = 25) -> frozenset[int]:
    """Exact minimum vertex cover, lexicographically least among minimums.

    Branch-and-bound on an uncovered edge; exact and only intended for small
    instances (documented cap on the number of distinct endpoints).
    """
    es = frozenset(edge_key(u, v) for u, v in edges)
    if not es:
        return frozenset()
    endpoints = sorted({x for e in es for x in e})
    if len(endpoints) > max_endpoints:
        raise BudgetError(f"{len(endpoints)} endpoints exceeds the cap of {max_endpoints}")

    best: list[frozenset[int] | None] = [None]

    def better(cand: tuple[int, ...]) -> bool:
        if best[0] is None:
            return True
        if len(cand) != len(best[0]):
            return len(cand) < len(best[0])
        return sorted(cand) < sorted(best[0])

    def branch(remaining: frozenset[Edge], chosen: tuple[int, ...]) -> None:
        if best[0] is not None and len(chosen) > len(best[0]):
            return
        if not remaining:
            if better(chosen):
                best[0] = frozenset(chosen)
            return
        u, v = min(remaining)
        for x in sorted((u, v)):
            branch(frozenset(e for e in remaining if x not in e), chosen + (x,))

    branch(es, ())
    assert best[0] is not None
    return best[0]
