"""Exhaustive reference optimizers certifying the polynomial pipeline.

Enumeration order is fixed (count, then size, then lexicographic) so the
returned witnesses are deterministic. Closures are memoized by the induced
seed-arc set, which many candidate interventions share.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetError
from .graphs import Arc, Dag, TargetEdges, edge_key
from .orient import _closure, cut_arcs
from .verify import InterventionSet


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 8
    max_n_bounded: int = 7
    max_k: int = 3


class _ClosureMemo:
    """Oriented-edge sets keyed by seed arcs, shared across an enumeration."""

    def __init__(self, g: Dag):
        self.g = g
        self._memo: dict[frozenset[Arc], frozenset[tuple[int, int]]] = {}

    def oriented_edges(self, interventions: list[frozenset[int]]) -> frozenset[tuple[int, int]]:
        seeds = frozenset(cut_arcs(self.g, interventions))
        got = self._memo.get(seeds)
        if got is None:
            rec = _closure(self.g, set(seeds)).recovered
            got = frozenset(edge_key(u, v) for u, v in rec)
            self._memo[seeds] = got
        return got


def nu1_bruteforce(
    g: Dag, targets: TargetEdges, budget: OracleBudget = OracleBudget()
) -> tuple[int, InterventionSet]:
    """Smallest number of single-vertex interventions orienting all targets."""
    if g.n > budget.max_n:
        raise BudgetError(f"n={g.n} exceeds the atomic oracle cap {budget.max_n}")
    targets.validate_against(g)
    memo = _ClosureMemo(g)
    want = set(targets.edges)
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            groups = [frozenset([v]) for v in combo]
            if want <= memo.oriented_edges(groups):
                return size, InterventionSet.atomic(combo)
    raise AssertionError("intervening on every vertex must orient everything")


def nuk_bruteforce(
    g: Dag, targets: TargetEdges, k: int, budget: OracleBudget = OracleBudget()
) -> tuple[int, InterventionSet]:
    """Minimum number of size-<=k interventions orienting all targets.

    Enumerates families of distinct nonempty subsets (duplicates never help),
    starting from the ceil(nu1/k) lower bound.
    """
    if k == 1:
        return nu1_bruteforce(g, targets, budget)
    if g.n > budget.max_n_bounded:
        raise BudgetError(f"n={g.n} exceeds the bounded oracle cap {budget.max_n_bounded}")
    if k > budget.max_k:
        raise BudgetError(f"k={k} exceeds the oracle cap {budget.max_k}")
    targets.validate_against(g)
    if not targets.edges:
        return 0, InterventionSet((), k=k)
    nu1, _ = nu1_bruteforce(g, targets, budget)
    memo = _ClosureMemo(g)
    want = set(targets.edges)
    pool = [
        frozenset(c)
        for size in range(1, k + 1)
        for c in itertools.combinations(range(g.n), size)
    ]
    for count in range(max(1, math.ceil(nu1 / k)), len(pool) + 1):
        for family in itertools.combinations(pool, count):
            if want <= memo.oriented_edges(list(family)):
                return count, InterventionSet(tuple(family), k=k)
    raise AssertionError("atomic singletons alone form a verifying family")
