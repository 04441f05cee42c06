"""Transitive reduction of collider-free DAGs and the one-vertex orientation intervals.

For a connected DAG without v-structures the transitive reduction is a rooted
tree, and the set of single vertices whose intervention orients a given arc
u -> v is a contiguous path segment of that tree ending at v. That structural
fact is re-derived empirically from cached closures here and enforced as an
assertion on every instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .graphs import Arc, Dag, TargetEdges, v_structures
from .orient import atomic_closures, essential_graph


@dataclass(frozen=True)
class HasseTree:
    """Rooted tree of direct-child arcs spanning one connected component."""

    root: int
    parent: dict[int, int | None]
    component: frozenset[int]

    def children_map(self) -> dict[int, list[int]]:
        ch: dict[int, list[int]] = {v: [] for v in self.component}
        for v, p in self.parent.items():
            if p is not None:
                ch[p].append(v)
        for v in ch:
            ch[v].sort()
        return ch

    def path_from_root(self, v: int) -> list[int]:
        if v not in self.component:
            raise InputError(f"vertex {v} not in this tree")
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])  # type: ignore[arg-type]
        path.reverse()
        return path

    def depth(self, v: int) -> int:
        return len(self.path_from_root(v)) - 1


@dataclass(frozen=True)
class StabInterval:
    """Tree-path segment [start .. end]; a vertex stabs it by lying on it."""

    start: int
    end: int
    source_edge: Arc | None = None


def hasse_diagram(g: Dag) -> list[HasseTree]:
    """Transitive reduction per connected component, each a rooted tree.

    Requires a collider-free input; callers holding an arbitrary DAG should
    first drop the observationally oriented arcs (oriented_subgraph(g, [])).
    """
    if v_structures(g):
        raise InputError(
            "graph has v-structures; reduce via oriented_subgraph(g, []) first"
        )
    # descendant bitmasks in reverse topological order
    from .graphs import topological_order

    order = topological_order(g)
    des = [0] * g.n
    for v in reversed(order):
        mask = 1 << v
        for w in g.children(v):
            mask |= des[w]
        des[v] = mask
    tree_arcs: set[Arc] = set()
    for u, v in g.arcs:
        redundant = any(w != v and (des[w] >> v) & 1 for w in g.children(u))
        if not redundant:
            tree_arcs.add((u, v))
    parent_of: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in tree_arcs:
        parent_of[v].append(u)
    trees = []
    for comp in g.connected_components():
        comp_set = frozenset(comp)
        roots = [v for v in comp if not parent_of[v]]
        parents: dict[int, int | None] = {}
        for v in comp:
            ps = parent_of[v]
            if len(ps) > 1:
                raise AssertionError(f"vertex {v} has two reduction parents {ps}")
            parents[v] = ps[0] if ps else None
        if len(roots) != 1:
            raise AssertionError(f"component {comp} has roots {roots}, expected one")
        trees.append(HasseTree(root=roots[0], parent=parents, component=comp_set))
    return trees


def subtree_vertices(h: HasseTree, y: int) -> frozenset[int]:
    """All vertices having y as a tree ancestor, y included."""
    if y not in h.component:
        raise InputError(f"vertex {y} not in this tree")
    ch = h.children_map()
    out = {y}
    stack = [y]
    while stack:
        for w in ch[stack.pop()]:
            out.add(w)
            stack.append(w)
    return frozenset(out)


def orienting_vertices(g: Dag, arc: Arc) -> frozenset[int]:
    """All v whose single-vertex intervention recovers the given arc of g."""
    closures = atomic_closures(g)
    return frozenset(v for v in range(g.n) if arc in closures[v])


def cut_intervals(g: Dag, trees: Iterable[HasseTree], targets: TargetEdges) -> list[StabInterval]:
    """One stabbing interval per unoriented target arc, deduplicated.

    For each target arc u -> v the empirically derived orienting set must be a
    contiguous suffix of the root-to-v tree path starting at some ancestor of
    u; the assertion failing would falsify the structural theorem this module
    is built on.
    """
    targets.validate_against(g)
    already = essential_graph(g).recovered
    tree_of: dict[int, HasseTree] = {}
    for t in trees:
        for v in t.component:
            tree_of[v] = t
    out: list[StabInterval] = []
    seen: set[tuple[int, int]] = set()
    for e in sorted(targets.edges):
        u, v = g.arc_for_edge(*e)
        if (u, v) in already:
            continue  # vacuously stabbed: any intervention orients it
        tree = tree_of[v]
        rinv = orienting_vertices(g, (u, v))
        path = tree.path_from_root(v)
        on_path = [z for z in path if z in rinv]
        if set(on_path) != set(rinv) or on_path != path[len(path) - len(on_path):]:
            raise AssertionError(
                f"orienting set of {u}->{v} is not a tree-path suffix: {sorted(rinv)}"
            )
        w = on_path[0]
        u_path = tree.path_from_root(u)
        if w not in u_path:
            raise AssertionError(f"interval head {w} is not an ancestor of {u}")
        if (w, v) not in seen:
            seen.add((w, v))
            out.append(StabInterval(start=w, end=v, source_edge=(u, v)))
    return out
