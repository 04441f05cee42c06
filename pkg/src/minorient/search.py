"""Adaptive discovery against an oracle: separator-guided search on a
node-induced subgraph, a random baseline, and the committing adversary that
realizes the vertex-cover query lower bound.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InputError
from .graphs import Arc, Dag, Edge, Pdag, TargetEdges, edge_key, is_chordal
from .orient import chain_components, recover_interventions


class InterventionOracle:
    """Honest oracle around a hidden ground-truth DAG.

    Answers are always the closure of everything revealed so far; the hidden
    DAG never changes. One oracle serves one strictly sequential session.
    """

    def __init__(self, hidden: Dag):
        self._hidden = hidden
        self.n = hidden.n
        self.history: list[frozenset[int]] = []
        self.graph: Pdag = recover_interventions(hidden, []).closure

    def intervene(self, vertices: Iterable[int]) -> frozenset[Arc]:
        """Perform one intervention; returns the newly oriented arcs."""
        s = frozenset(vertices)
        if not s or any(not (0 <= v < self.n) for v in s):
            raise InputError(f"bad intervention {sorted(s)}")
        before = self.graph.directed
        self.history.append(s)
        self.graph = recover_interventions(self._hidden, self.history).closure
        return frozenset(self.graph.directed - before)


@dataclass
class SearchTranscript:
    """Per-intervention log: the set used and the arcs it newly oriented."""

    steps: list[tuple[frozenset[int], frozenset[Arc]]] = field(default_factory=list)
    per_round_counts: list[int] = field(default_factory=list)
    final: Pdag | None = None

    @property
    def total_interventions(self) -> int:
        return len(self.steps)

    @property
    def rounds(self) -> int:
        return len(self.per_round_counts)

    def interventions(self) -> list[frozenset[int]]:
        return [s for s, _ in self.steps]


def relevant_nodes(p: Pdag, subset: Iterable[int]) -> frozenset[int]:
    """Members of the subset incident to an undirected edge inside its induced graph."""
    h = set(subset)
    out = set()
    for u, v in p.undirected:
        if u in h and v in h:
            out.add(u)
            out.add(v)
    return frozenset(out)


def _undirected_component_graph(p: Pdag, comp: list[int]) -> tuple[list[int], set[Edge]]:
    cs = set(comp)
    edges = {e for e in p.undirected if e[0] in cs and e[1] in cs}
    return sorted(cs), edges


def _maximal_cliques_chordal(vertices: list[int], edges: set[Edge]) -> list[frozenset[int]]:
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    # maximum-cardinality search; reverse visit order is a PEO
    weight = {v: 0 for v in vertices}
    visited: set[int] = set()
    mcs: list[int] = []
    for _ in vertices:
        v = max((u for u in vertices if u not in visited), key=lambda u: (weight[u], -u))
        visited.add(v)
        mcs.append(v)
        for w in adj[v]:
            if w not in visited:
                weight[w] += 1
    pos = {v: i for i, v in enumerate(mcs)}
    cliques = []
    for v in vertices:
        c = frozenset({v} | {w for w in adj[v] if pos[w] < pos[v]})
        cliques.append(c)
    cliques.sort(key=len, reverse=True)
    maximal: list[frozenset[int]] = []
    for c in cliques:
        if not any(c < m for m in maximal) and c not in maximal:
            maximal.append(c)
    return maximal


def weighted_clique_separator(
    vertices: list[int], edges: set[Edge], weights: dict[int, float | Fraction]
) -> frozenset[int]:
    """A clique whose removal leaves every component with at most half the
    total weight; smallest such clique found, lexicographically least on ties.

    Scans the (at most n) maximal cliques of the chordal graph for halving
    ones, then greedily drops highest-id vertices while the halving property
    survives. The component-weight post-condition is always asserted.
    """
    if len(vertices) < 2:
        raise InputError("separator needs at least two vertices")
    probe = Pdag(max(vertices) + 1, (), edges)
    ok, _ = is_chordal(probe)
    if not ok:
        raise InputError("separator requires a chordal graph")
    total = sum(weights.get(v, 0) for v in vertices)
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def halves(sep: frozenset[int]) -> bool:
        left = [v for v in vertices if v not in sep]
        seen: set[int] = set()
        for s in left:
            if s in seen:
                continue
            seen.add(s)
            w = weights.get(s, 0)
            stack = [s]
            while stack:
                for x in adj[stack.pop()]:
                    if x not in sep and x not in seen:
                        seen.add(x)
                        w += weights.get(x, 0)
                        stack.append(x)
            if 2 * w > total:
                return False
        return True

    best: frozenset[int] | None = None
    for clique in _maximal_cliques_chordal(vertices, edges):
        if not halves(clique):
            continue
        cur = clique
        shrunk = True
        while shrunk and len(cur) > 1:
            shrunk = False
            for v in sorted(cur, reverse=True):
                cand = cur - {v}
                if halves(cand):
                    cur = cand
                    shrunk = True
                    break
        if best is None or (len(cur), sorted(cur)) < (len(best), sorted(best)):
            best = cur
    if best is None:
        raise AssertionError("some maximal clique always halves a chordal graph")
    assert halves(best)
    return best


def bounded_labelled_groups(q: Sequence[int], k: int, n: int) -> list[frozenset[int]]:
    """Size-<=k groups separating every pair of q.

    Vertices get distinct length-l labels over an alphabet of a symbols
    (l = ceil(log_a n) with the full graph's n); group (x, y) collects the
    vertices whose x-th letter is y. Every letter appears at most
    ceil(|q|/a) <= k' times per position, so group sizes respect the bound.
    """
    members = sorted(set(q))
    m = len(members)
    if m < 2 or k < 2:
        raise InputError("labelled grouping needs |q| >= 2 and k >= 2")
    kp = min(k, math.ceil(m / 2))
    a = math.ceil(m / kp)
    assert a >= 2
    length = 1
    while a**length < max(n, 2):
        length += 1

    def digit(rank: int, x: int) -> int:
        if x == 0:
            return rank % a
        base = (rank // a) // (a ** (x - 1)) % a
        return (base + rank) % a

    groups: list[frozenset[int]] = []
    for x in range(length):
        buckets: dict[int, list[int]] = {}
        for rank, v in enumerate(members):
            buckets.setdefault(digit(rank, x), []).append(v)
        for y in sorted(buckets):
            gset = frozenset(buckets[y])
            if gset not in groups:
                groups.append(gset)
    for gset in groups:
        assert len(gset) <= kp <= k
    return groups


def subset_search(
    oracle,
    subset: Iterable[int],
    k: int = 1,
    stop_when_oriented: TargetEdges | None = None,
) -> SearchTranscript:
    """Orient everything inside a node-induced subgraph via weighted separators.

    Each round takes, per chain component holding at least two relevant subset
    members, a 1/2-clique separator under weight n/|relevant| on the relevant
    members, and intervenes on the union: atomically, or through labelled
    groups when k >= 2 and more than one vertex was picked.
    """
    h = sorted(set(subset))
    if not h:
        raise InputError("subset must be nonempty")
    transcript = SearchTranscript()
    n = oracle.n

    def stop_reached() -> bool:
        if stop_when_oriented is None:
            return False
        oriented = {edge_key(u, v) for u, v in oracle.graph.directed}
        return all(e in oriented for e in stop_when_oriented.edges)

    def unoriented_inside() -> bool:
        hs = set(h)
        return any(u in hs and v in hs for u, v in oracle.graph.undirected)

    guard = 0
    while unoriented_inside() and not stop_reached():
        guard += 1
        if guard > oracle.n + 1:
            raise AssertionError("search failed to make progress")
        rho_all = relevant_nodes(oracle.graph, h)
        q: set[int] = set()
        for comp in chain_components(oracle.graph):
            rho = sorted(rho_all & set(comp))
            if len(rho) < 2:
                continue
            verts, edges = _undirected_component_graph(oracle.graph, comp)
            weights = {
                v: (Fraction(n, len(rho)) if v in rho else Fraction(0)) for v in verts
            }
            q |= weighted_clique_separator(verts, edges, weights)
        if not q:
            raise AssertionError("undirected subset edge without a processable component")
        if k == 1 or len(q) == 1:
            batch = [frozenset([v]) for v in sorted(q)]
        else:
            batch = bounded_labelled_groups(sorted(q), k, n)
        count = 0
        for group in batch:
            new = oracle.intervene(group)
            transcript.steps.append((group, new))
            count += 1
            if stop_reached():
                break
        transcript.per_round_counts.append(count)
    transcript.final = oracle.graph
    return transcript


def random_search_baseline(oracle, targets: TargetEdges, seed: int) -> SearchTranscript:
    """Intervene on uniformly random endpoints of unoriented targets until done."""
    rng = random.Random(seed)
    transcript = SearchTranscript()
    while True:
        oriented = {edge_key(u, v) for u, v in oracle.graph.directed}
        open_edges = [e for e in sorted(targets.edges) if e not in oriented]
        if not open_edges:
            break
        candidates = sorted({v for e in open_edges for v in e})
        v = rng.choice(candidates)
        new = oracle.intervene([v])
        transcript.steps.append((frozenset([v]), new))
        transcript.per_round_counts.append(1)
    transcript.final = oracle.graph
    return transcript


class AdaptiveAdversary:
    """Oracle for the clique-plus-pendants instance that commits lazily.

    The i-th distinct clique vertex the algorithm intervenes on is committed
    to clique position n-i+1 (counted from the front), so intervened vertices
    are always as late as possible and edges between uncommitted vertices stay
    unoriented. Pendant queries only commit the pendant itself. Every answer
    is the honest closure of a witness DAG consistent with all commitments.
    """

    def __init__(self, n: int):
        if n < 1:
            raise InputError("n must be >= 1")
        self.clique_n = n
        self.n = 2 * n
        self.skeleton, self.targets = _lower_bound_skeleton(n)
        self.history: list[frozenset[int]] = []
        self.committed: list[int] = []  # clique vertices, latest position first
        self.graph: Pdag = recover_interventions(self.witness(), []).closure

    def witness(self) -> Dag:
        """Canonical DAG consistent with every commitment made so far."""
        n = self.clique_n
        uncommitted = sorted(v for v in range(n) if v not in self.committed)
        # order = uncommitted (id order), then committed from earliest position
        order = uncommitted + list(reversed(self.committed))
        rank = {v: i for i, v in enumerate(order)}
        arcs = []
        for i in range(n):
            for j in range(i + 1, n):
                arcs.append((i, j) if rank[i] < rank[j] else (j, i))
        arcs += [(i, n + i) for i in range(n)]
        return Dag(2 * n, arcs)

    def intervene(self, vertices: Iterable[int]) -> frozenset[Arc]:
        s = frozenset(vertices)
        if len(s) != 1:
            raise InputError("this adversary session is atomic: one vertex per query")
        (v,) = s
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range")
        if v < self.clique_n and v not in self.committed:
            self.committed.append(v)
        before = self.graph.directed
        self.history.append(s)
        self.graph = recover_interventions(self.witness(), self.history).closure
        return frozenset(self.graph.directed - before)

    def clique_queries(self) -> int:
        return len({v for s in self.history for v in s if v < self.clique_n})


def _lower_bound_skeleton(n: int) -> tuple[frozenset[Edge], TargetEdges]:
    edges = {edge_key(i, j) for i in range(n) for j in range(i + 1, n)}
    edges |= {edge_key(i, n + i) for i in range(n)}
    return frozenset(edges), TargetEdges.of([(i, n + i) for i in range(n)])


@dataclass(frozen=True)
class AdversarySession:
    """Outcome of one algorithm-vs-adversary run with its consistency proof."""

    interventions: tuple[frozenset[int], ...]
    clique_interventions: int
    witness: Dag
    answers: tuple[Pdag, ...]
    targets_oriented: bool

    def replay_consistent(self) -> bool:
        """Every recorded answer equals the witness closure of its prefix."""
        for t in range(len(self.interventions)):
            replayed = recover_interventions(
                self.witness, list(self.interventions[: t + 1])
            ).closure
            if replayed != self.answers[t]:
                return False
        return True


def adaptive_adversary_session(
    algorithm: Callable[[AdaptiveAdversary], object], n: int
) -> AdversarySession:
    """Run a search algorithm against the committing adversary.

    The algorithm receives the adversary in place of an honest oracle and may
    query atomic interventions freely; the session records the full answer
    sequence and the end-of-session witness DAG that reproduces it.
    """
    adv = AdaptiveAdversary(n)
    answers: list[Pdag] = []
    original_intervene = adv.intervene

    def logged(vertices: Iterable[int]) -> frozenset[Arc]:
        new = original_intervene(vertices)
        answers.append(adv.graph)
        return new

    adv.intervene = logged  # type: ignore[method-assign]
    algorithm(adv)
    witness = adv.witness()
    oriented = {edge_key(u, v) for u, v in adv.graph.directed}
    return AdversarySession(
        interventions=tuple(adv.history),
        clique_interventions=adv.clique_queries(),
        witness=witness,
        answers=tuple(answers),
        targets_oriented=all(e in oriented for e in adv.targets.edges),
    )
