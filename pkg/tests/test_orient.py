import itertools
import random

import pytest

from minorient import (
    Dag,
    InputError,
    Pdag,
    chain_components,
    covered_edges,
    essential_graph,
    generate_synthetic,
    meek_closure,
    oriented_subgraph,
    recover_arcs,
    recover_interventions,
    v_structures,
)
from minorient.graphs import edge_key
from minorient.orient import atomic_closures, is_chain_graph

from test_graphs import random_dag


def demo_dag() -> Dag:
    """Six-vertex worked example: a=0 b=1 c=2 d=3 e=4 f=5."""
    return Dag(6, [(0, 4), (0, 5), (1, 2), (1, 3), (4, 1), (4, 2), (4, 3), (4, 5), (5, 2)])


def random_interventions(rng: random.Random, n: int) -> list[frozenset[int]]:
    out = []
    for _ in range(rng.randint(0, 2)):
        size = rng.randint(1, max(1, n // 2))
        out.append(frozenset(rng.sample(range(n), size)))
    return out


class TestMeekClosure:
    def test_fully_oriented_is_fixpoint(self):
        p = Pdag(3, [(0, 1), (1, 2)], [])
        assert meek_closure(p) == p

    def test_rule_one(self):
        # c -> a with c not adjacent to b orients a -> b
        p = Pdag(3, [(2, 0)], [(0, 1)])
        out = meek_closure(p)
        assert (0, 1) in out.directed

    def test_rule_three_on_demo_graph(self):
        g = demo_dag()
        seeds = {(1, 2), (5, 2)}
        und = [e for e in g.skeleton_edges() if e not in {(1, 2), (2, 5)}]
        out = meek_closure(Pdag(6, seeds, und))
        assert (4, 2) in out.directed

    def test_idempotent(self):
        rng = random.Random(10)
        for _ in range(40):
            g = random_dag(rng, rng.randint(2, 8))
            closure = recover_interventions(g, random_interventions(rng, g.n)).closure
            assert meek_closure(closure) == closure

    def test_monotone_in_seed_arcs(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_dag(rng, rng.randint(2, 7))
            arcs = sorted(g.arcs)
            if not arcs:
                continue
            small = set(rng.sample(arcs, rng.randint(0, len(arcs) - 1)))
            extra = rng.choice([a for a in arcs if a not in small])
            r_small = recover_arcs(g, small).recovered
            r_big = recover_arcs(g, small | {extra}).recovered
            assert r_small <= r_big


class TestEssentialGraph:
    def test_collider_free_connected_has_no_orientations(self):
        g = generate_synthetic(9, 0.2, 12)
        assert essential_graph(g).recovered == frozenset()

    def test_demo_graph(self):
        assert essential_graph(demo_dag()).recovered == frozenset({(1, 2), (5, 2), (4, 2)})

    def test_collider_only_graph_fully_oriented(self):
        res = essential_graph(Dag(3, [(0, 1), (2, 1)]))
        assert res.recovered == frozenset({(0, 1), (2, 1)})
        assert not res.closure.undirected

    def test_recovered_agrees_with_ground_truth(self):
        rng = random.Random(13)
        for _ in range(50):
            g = random_dag(rng, rng.randint(2, 8))
            res = recover_interventions(g, random_interventions(rng, g.n))
            assert res.recovered <= g.arcs
            assert res.recovered == res.closure.directed

    def test_closures_are_chain_graphs(self):
        rng = random.Random(14)
        for _ in range(50):
            g = random_dag(rng, rng.randint(2, 8))
            res = recover_interventions(g, random_interventions(rng, g.n))
            assert is_chain_graph(res.closure)


class TestRecoverInterventions:
    def test_demo_graph_single_vertex_a(self):
        got = recover_interventions(demo_dag(), [{0}]).recovered
        assert got == frozenset({(0, 4), (0, 5), (4, 1), (4, 3), (1, 2), (5, 2), (4, 2)})

    def test_demo_graph_single_vertex_b(self):
        got = recover_interventions(demo_dag(), [{1}]).recovered
        assert got == frozenset({(4, 1), (1, 3), (4, 3), (1, 2), (5, 2), (4, 2)})

    def test_intervening_on_everything_cuts_nothing(self):
        g = demo_dag()
        assert (
            recover_interventions(g, [set(range(6))]).recovered
            == essential_graph(g).recovered
        )


class TestRecoverArcs:
    def test_empty_seed_is_observational(self):
        g = demo_dag()
        assert recover_arcs(g, set()).recovered == essential_graph(g).recovered

    def test_incident_arcs_equal_vertex_intervention(self):
        rng = random.Random(15)
        for _ in range(200):
            g = random_dag(rng, rng.randint(2, 8))
            v = rng.randrange(g.n)
            incident = {a for a in g.arcs if v in a}
            assert (
                recover_arcs(g, incident).recovered
                == recover_interventions(g, [{v}]).recovered
            )

    def test_rule_one_fires_on_path(self):
        g = Dag(3, [(0, 1), (1, 2)])
        assert recover_arcs(g, {(0, 1)}).recovered == frozenset({(0, 1), (1, 2)})

    def test_rejects_non_arc_seed(self):
        with pytest.raises(InputError):
            recover_arcs(Dag(2, [(0, 1)]), {(1, 0)})


class TestChainComponents:
    def test_fully_oriented_gives_singletons(self):
        p = Pdag(3, [(0, 1), (1, 2)], [])
        assert chain_components(p) == [[0], [1], [2]]

    def test_fully_undirected_connected_is_one_component(self):
        p = Pdag(3, [], [(0, 1), (1, 2)])
        assert chain_components(p) == [[0, 1, 2]]

    def test_demo_graph_after_intervention(self):
        closure = recover_interventions(demo_dag(), [{0}]).closure
        assert chain_components(closure) == [[0], [1, 3], [2], [4, 5]]


class TestCoveredEdges:
    def test_single_arc(self):
        assert covered_edges(Dag(2, [(0, 1)])) == {(0, 1)}

    def test_path_covers_only_first(self):
        assert covered_edges(Dag(3, [(0, 1), (1, 2)])) == {(0, 1)}

    def test_demo_graph_by_definition(self):
        g = demo_dag()
        want = set()
        for u, v in g.arcs:
            if g.parents(u) - {v} == g.parents(v) - {u}:
                want.add(edge_key(u, v))
        assert covered_edges(g) == want == {(0, 4), (4, 5), (1, 3)}


class TestOrientedSubgraph:
    def test_everything_recovered_leaves_no_arcs(self):
        g = Dag(3, [(0, 1), (2, 1)])
        assert oriented_subgraph(g, []).arcs == frozenset()

    def test_demo_graph_observational(self):
        got = oriented_subgraph(demo_dag(), [])
        assert got.arcs == frozenset({(0, 4), (0, 5), (1, 3), (4, 1), (4, 3), (4, 5)})

    def test_demo_graph_after_intervention(self):
        got = oriented_subgraph(demo_dag(), [{0}])
        assert got.arcs == frozenset({(1, 3), (4, 5)})


def closure_set(g, groups):
    return recover_interventions(g, groups).recovered


class TestInterventionalProperties:
    """Structural facts about recovered-arc sets, on randomized (G, A, B)."""

    def sample(self, rng):
        g = random_dag(rng, rng.randint(2, 8), p=rng.choice([0.3, 0.5]))
        return g, random_interventions(rng, g.n), random_interventions(rng, g.n)

    def test_union_rule(self):
        rng = random.Random(20)
        for _ in range(150):
            g, a, b = self.sample(rng)
            assert closure_set(g, a + b) == closure_set(g, a) | closure_set(g, b)

    def test_residual_skeleton_matches_chain_components(self):
        rng = random.Random(21)
        for _ in range(100):
            g, a, _ = self.sample(rng)
            res = recover_interventions(g, a)
            assert oriented_subgraph(g, a).skeleton_edges() == res.closure.undirected

    def test_residual_graph_has_no_new_colliders(self):
        rng = random.Random(22)
        for _ in range(100):
            g, a, _ = self.sample(rng)
            assert v_structures(oriented_subgraph(g, a)) == set()

    def test_recovered_parents_equal_within_chain_component(self):
        rng = random.Random(23)
        for _ in range(100):
            g, a, _ = self.sample(rng)
            res = recover_interventions(g, a)
            for comp in chain_components(res.closure):
                first = {x for x, u in res.recovered if u == comp[0]}
                for v in comp[1:]:
                    assert {x for x, u in res.recovered if u == v} == first

    def test_recovered_arcs_bridge_chain_components(self):
        rng = random.Random(24)
        for _ in range(100):
            g, a, _ = self.sample(rng)
            res = recover_interventions(g, a)
            comp_of = {}
            for i, comp in enumerate(chain_components(res.closure)):
                for v in comp:
                    comp_of[v] = i
            assert all(comp_of[u] != comp_of[v] for u, v in res.recovered)

    def test_residual_recovery_is_set_difference(self):
        rng = random.Random(25)
        for _ in range(100):
            g, a, b = self.sample(rng)
            ga = oriented_subgraph(g, a)
            assert closure_set(ga, b) == closure_set(g, b) - closure_set(g, a)

    def test_two_way_decomposition(self):
        rng = random.Random(26)
        for _ in range(100):
            g, a, b = self.sample(rng)
            ga = oriented_subgraph(g, a)
            ra = closure_set(g, a)
            rb_in_ga = closure_set(ga, b)
            assert rb_in_ga | ra == closure_set(g, a + b)
            assert not (rb_in_ga & ra)

    def test_three_way_decomposition(self):
        rng = random.Random(27)
        for _ in range(100):
            g, a, b = self.sample(rng)
            ga, gb = oriented_subgraph(g, a), oriented_subgraph(g, b)
            parts = [closure_set(ga, b), closure_set(gb, a), closure_set(g, a) & closure_set(g, b)]
            assert parts[0] | parts[1] | parts[2] == closure_set(g, a + b)
            assert not (parts[0] & parts[1])
            assert not (parts[0] & parts[2])
            assert not (parts[1] & parts[2])

    def test_observational_closure_avoids_covered_edges(self):
        rng = random.Random(28)
        for _ in range(100):
            g = random_dag(rng, rng.randint(2, 8), p=0.5)
            obs = {edge_key(u, v) for u, v in essential_graph(g).recovered}
            assert not (obs & covered_edges(g))

    def test_no_triangle_has_exactly_one_oriented_edge(self):
        rng = random.Random(29)
        for _ in range(100):
            g, a, _ = self.sample(rng)
            res = recover_interventions(g, a)
            oriented = {edge_key(u, v) for u, v in res.recovered}
            for x, y, z in itertools.combinations(range(g.n), 3):
                tri = [edge_key(x, y), edge_key(y, z), edge_key(x, z)]
                if all(g.has_edge(*e) for e in tri):
                    assert sum(e in oriented for e in tri) != 1

    def test_single_vertex_recovery_propagates_downstream_only(self):
        rng = random.Random(30)
        for _ in range(60):
            g = random_dag(rng, rng.randint(2, 8), p=0.4)
            for v, rec in atomic_closures(g).items():
                obs = essential_graph(g).recovered
                for a, b in rec - obs:
                    assert v in g.ancestors_closed(b)

    def test_acyclic_completions_combine_with_recovered_arcs(self):
        rng = random.Random(31)
        for _ in range(40):
            g, a, _ = self.sample(rng)
            res = recover_interventions(g, a)
            ga = oriented_subgraph(g, a)
            # sample completions of the residual essential graph: orient each
            # undirected edge per a random topological order of the residual
            res0 = essential_graph(ga)
            for _ in range(4):
                perm = list(range(g.n))
                rng.shuffle(perm)
                pos = {v: i for i, v in enumerate(perm)}
                arcs = set(res0.recovered)
                for u, v in res0.closure.undirected:
                    arcs.add((u, v) if pos[u] < pos[v] else (v, u))
                try:
                    completed = Dag(g.n, arcs)
                except InputError:
                    continue  # that order closed a cycle; not a completion
                if v_structures(completed) != v_structures(ga):
                    continue  # collider-creating completion, outside the claim
                Dag(g.n, completed.arcs | res.recovered)  # must stay acyclic


def mec_members(g: Dag):
    """All DAGs sharing g's skeleton and colliders, by brute enumeration."""
    edges = sorted(g.skeleton_edges())
    want = v_structures(g)
    for bits in range(1 << len(edges)):
        arcs = [
            (u, v) if not (bits >> i) & 1 else (v, u)
            for i, (u, v) in enumerate(edges)
        ]
        try:
            cand = Dag(g.n, arcs)
        except InputError:
            continue
        if v_structures(cand) == want:
            yield cand


class TestClosureAgainstEnumeration:
    """The closure must equal the arc-wise intersection of every ground truth
    consistent with the revealed cut directions: sound and complete."""

    def test_observational(self):
        rng = random.Random(33)
        for _ in range(25):
            g = random_dag(rng, rng.randint(2, 5), p=0.5)
            common = frozenset.intersection(
                *(frozenset(m.arcs) for m in mec_members(g))
            )
            assert essential_graph(g).recovered == common

    def test_interventional(self):
        rng = random.Random(34)
        for _ in range(25):
            g = random_dag(rng, rng.randint(2, 5), p=0.5)
            groups = random_interventions(rng, g.n)
            cut = set()
            for s in groups:
                for u, v in g.arcs:
                    if (u in s) != (v in s):
                        cut.add((u, v))
            consistent = [
                m for m in mec_members(g) if all(a in m.arcs for a in cut)
            ]
            common = frozenset.intersection(*(frozenset(m.arcs) for m in consistent))
            assert recover_interventions(g, groups).recovered == common
