"""Exact minimum-cost interval stabbing on a rooted tree.

The solver sorts intervals along an Euler tour, prunes superset intervals,
and runs a two-choice dynamic program over (vertex, sorted-index) states; a
subset-enumeration reference solver certifies it on small instances.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BudgetError, InputError
from .hasse import HasseTree, StabInterval


@dataclass(frozen=True)
class EulerTour:
    """DFS visit sequence (children in ascending id order, parent re-recorded
    after each child) with 1-based first/last visit indices per vertex."""

    order: tuple[int, ...]
    first: dict[int, int]
    last: dict[int, int]

    def in_subtree(self, u: int, v: int) -> bool:
        """True iff u lies in the subtree rooted at v (u == v included)."""
        return self.first[v] <= self.first[u] and self.last[u] <= self.last[v]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff a is an ancestor of b, inclusively."""
        return self.in_subtree(b, a)


def euler_tour(h: HasseTree) -> EulerTour:
    ch = h.children_map()
    order: list[int] = []
    first: dict[int, int] = {}
    last: dict[int, int] = {}

    stack: list[tuple[int, int]] = [(h.root, 0)]
    while stack:
        v, i = stack.pop()
        order.append(v)
        pos = len(order)
        if v not in first:
            first[v] = pos
        last[v] = pos
        # resume v after child i finishes
        kids = ch[v]
        if i < len(kids):
            stack.append((v, i + 1))
            stack.append((kids[i], 0))
    # each vertex appears len(children)+1 times, the final one last
    assert len(order) == 2 * len(h.component) - 1
    return EulerTour(order=tuple(order), first=first, last=last)


def prune_supersets(tour: EulerTour, intervals: Sequence[StabInterval]) -> list[StabInterval]:
    """Drop duplicates and every interval containing another one as a stab set.

    [c, d] is redundant when some kept [a, b] has c ancestor-of a and
    b ancestor-of d: any stab of [a, b] stabs [c, d]. Quadratic pass; the
    survivors have pairwise distinct ending vertices.
    """
    uniq: list[StabInterval] = []
    seen: set[tuple[int, int]] = set()
    for iv in intervals:
        if not tour.is_ancestor(iv.start, iv.end):
            raise InputError(f"[{iv.start},{iv.end}] is not a tree interval")
        if (iv.start, iv.end) not in seen:
            seen.add((iv.start, iv.end))
            uniq.append(iv)

    def covers(outer: StabInterval, inner: StabInterval) -> bool:
        return tour.is_ancestor(outer.start, inner.start) and tour.is_ancestor(
            inner.end, outer.end
        )

    kept = []
    for iv in uniq:
        redundant = any(
            other is not iv and covers(iv, other) for other in uniq
        )
        if not redundant:
            kept.append(iv)
    ends = [iv.end for iv in kept]
    assert len(ends) == len(set(ends)), "distinct ending vertices after pruning"
    return kept


@dataclass
class PreparedInstance:
    """Sorted interval array plus the precomputed DP jump indices."""

    tree: HasseTree
    tour: EulerTour
    intervals: list[StabInterval]  # sorted; supersets removed
    original: list[StabInterval]  # pre-pruning, for feasibility checks
    end_index: dict[int, int]  # max sorted index ending at v, else -1
    back_index: dict[int, int]  # min sorted index starting inside T_v, else len
    enter_index: dict[int, int]  # min sorted index ending inside T_v, else len
    vertex_cost: dict[int, float]

    def stabs(self, z: int, iv: StabInterval) -> bool:
        return self.tour.is_ancestor(iv.start, z) and self.tour.is_ancestor(z, iv.end)


def prepare(
    tree: HasseTree,
    intervals: Sequence[StabInterval],
    vertex_cost: Mapping[int, float] | None = None,
) -> PreparedInstance:
    tour = euler_tour(tree)
    kept = prune_supersets(tour, intervals)
    # sort key realizes: earlier start first; same start -> later-closing end first
    kept.sort(key=lambda iv: (tour.first[iv.start], -tour.last[iv.end]))
    nj = len(kept)
    end_index = {v: -1 for v in tree.component}
    back_index = {v: nj for v in tree.component}
    enter_index = {v: nj for v in tree.component}
    for j, iv in enumerate(kept):
        end_index[iv.end] = max(end_index[iv.end], j)
    for v in tree.component:
        for j, iv in enumerate(kept):
            if tour.in_subtree(iv.start, v):
                back_index[v] = j
                break
        for j, iv in enumerate(kept):
            if tour.in_subtree(iv.end, v):
                enter_index[v] = j
                break
    costs = {v: 1.0 for v in tree.component}
    if vertex_cost is not None:
        for v, c in vertex_cost.items():
            if v in costs:
                if c < 0:
                    raise InputError(f"negative cost at vertex {v}")
                costs[v] = c
    return PreparedInstance(
        tree=tree,
        tour=tour,
        intervals=kept,
        original=list(intervals),
        end_index=end_index,
        back_index=back_index,
        enter_index=enter_index,
        vertex_cost=costs,
    )


def solve(prep: PreparedInstance) -> tuple[float, frozenset[int]]:
    """Optimal stab cost and one deterministic optimal stab set.

    State (v, i): cheapest way to stab, inside the subtree of v, every
    surviving interval there whose sorted index is >= i. Picking v jumps each
    child to its first interval not covered by v; skipping v (allowed only
    when no pending interval ends at v) keeps every interval entering the
    child subtree. Ties prefer not picking v.
    """
    nj = len(prep.intervals)
    ch = prep.tree.children_map()
    memo: dict[tuple[int, int], float] = {}

    def dp(v: int, i: int) -> float:
        if i >= nj:
            return 0.0
        key = (v, i)
        got = memo.get(key)
        if got is not None:
            return got
        alpha = prep.vertex_cost[v]
        for y in ch[v]:
            alpha += dp(y, max(prep.back_index[y], i))
        if prep.end_index[v] >= i:
            best = alpha
        else:
            beta = 0.0
            for y in ch[v]:
                beta += dp(y, max(prep.enter_index[y], i))
            best = min(alpha, beta)
        memo[key] = best
        return best

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * len(prep.tree.component) + 1000))
    try:
        opt = dp(prep.tree.root, 0)
        chosen: set[int] = set()

        def backtrace(v: int, i: int) -> None:
            if i >= nj:
                return
            alpha = prep.vertex_cost[v]
            for y in ch[v]:
                alpha += dp(y, max(prep.back_index[y], i))
            forced = prep.end_index[v] >= i
            if not forced:
                beta = 0.0
                for y in ch[v]:
                    beta += dp(y, max(prep.enter_index[y], i))
                if alpha >= beta:  # tie keeps v out
                    for y in ch[v]:
                        backtrace(y, max(prep.enter_index[y], i))
                    return
            chosen.add(v)
            for y in ch[v]:
                backtrace(y, max(prep.back_index[y], i))

        backtrace(prep.tree.root, 0)
    finally:
        sys.setrecursionlimit(old_limit)
    stab_set = frozenset(chosen)
    for iv in prep.original:
        assert any(prep.stabs(z, iv) for z in stab_set), f"unstabbed {iv}"
    picked_cost = sum(prep.vertex_cost[v] for v in stab_set)
    assert abs(picked_cost - opt) <= 1e-9 * max(1.0, abs(opt)), (picked_cost, opt)
    return opt, stab_set


def solve_bruteforce(
    tree: HasseTree,
    intervals: Sequence[StabInterval],
    vertex_cost: Mapping[int, float] | None = None,
    max_n: int = 16,
) -> tuple[float, frozenset[int]]:
    """Exhaustive reference: minimum over all vertex subsets of the component."""
    comp = sorted(tree.component)
    if len(comp) > max_n:
        raise BudgetError(f"{len(comp)} vertices exceeds the brute-force cap {max_n}")
    tour = euler_tour(tree)
    costs = {v: 1.0 for v in comp}
    if vertex_cost is not None:
        costs.update({v: c for v, c in vertex_cost.items() if v in costs})
    masks = []
    for iv in intervals:
        if not tour.is_ancestor(iv.start, iv.end):
            raise InputError(f"[{iv.start},{iv.end}] is not a tree interval")
        m = 0
        for bit, z in enumerate(comp):
            if tour.is_ancestor(iv.start, z) and tour.is_ancestor(z, iv.end):
                m |= 1 << bit
        masks.append(m)
    best_cost = None
    best_set: tuple[int, ...] | None = None
    for s in range(1 << len(comp)):
        if any(not (s & m) for m in masks):
            continue
        members = tuple(comp[b] for b in range(len(comp)) if (s >> b) & 1)
        cost = sum(costs[v] for v in members)
        cand = (cost, len(members), members)
        if best_cost is None or cand < (best_cost, len(best_set), best_set):  # type: ignore[arg-type]
            best_cost, best_set = cost, members
    assert best_cost is not None and best_set is not None
    return best_cost, frozenset(best_set)
