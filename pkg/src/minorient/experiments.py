"""The two synthetic-graph studies, emitting fixed-schema CSV for the plot kit.

Study 1 samples random target subsets of growing size and tracks how the
minimum atomic verifying-set size approaches the full-graph value. Study 2
compares adaptive search policies on orienting an r-hop neighborhood of a
random target node.

Reruns with the same master seed are byte-identical; each CSV row carries the
per-trial seed it can be re-derived from (graph from the seed, subsets and
policies from seed offsets documented next to the sampling calls).
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .graphs import Dag, TargetEdges, generate_synthetic
from .search import InterventionOracle, random_search_baseline, subset_search
from .verify import atomic_verifying_set

EXP1_HEADER = ["n", "p", "seed", "m", "frac", "t_size", "nu1_subset", "nu1_full"]
EXP2_HEADER = [
    "n",
    "p",
    "seed",
    "r",
    "target_node",
    "algo",
    "interventions",
    "nu1_full",
    "nu1_subset",
]
EXP2_ALGOS = ["subsetsearch", "random", "fullsearch-early-stop"]


@dataclass(frozen=True)
class ExperimentConfig:
    n_list: tuple[int, ...] = (10, 20, 30, 40, 50)
    p_list: tuple[float, ...] = (0.03, 0.1, 0.3)
    trials: int = 20
    frac_list: tuple[float, ...] = (0.3, 0.5, 0.7, 1.0)
    r: int = 1
    seed: int = 0
    out: str = "results.csv"

    def __post_init__(self):
        if self.trials < 1:
            raise InputError("trials must be >= 1")
        if any(not 0 < f <= 1 for f in self.frac_list):
            raise InputError("fractions must lie in (0, 1]")
        if self.r < 1:
            raise InputError("r must be >= 1")


def _trial_seed(master: int, n: int, p: float, trial: int) -> int:
    return master * 1_000_003 + n * 7919 + int(round(p * 1000)) * 104_729 + trial


def _nu1(g: Dag, targets: TargetEdges) -> int:
    return len(atomic_verifying_set(g, targets))


def run_experiment1(cfg: ExperimentConfig) -> list[list]:
    rows = []
    for n in cfg.n_list:
        for p in cfg.p_list:
            for trial in range(cfg.trials):
                seed = _trial_seed(cfg.seed, n, p, trial)
                g = generate_synthetic(n, p, seed)
                edges = sorted(g.skeleton_edges())
                m = len(edges)
                full = TargetEdges(frozenset(edges))
                nu1_full = _nu1(g, full)
                # one shuffle per trial; each fraction takes a prefix, so every
                # fraction's subset is uniform of its size and larger fractions
                # contain smaller ones (re-derivable from the row seed at
                # offset 1)
                order = list(edges)
                random.Random(seed + 1).shuffle(order)
                for frac in cfg.frac_list:
                    t_size = max(1, round(frac * m))
                    targets = TargetEdges(frozenset(order[:t_size]))
                    nu1_subset = nu1_full if t_size == m else _nu1(g, targets)
                    rows.append([n, p, seed, m, frac, t_size, nu1_subset, nu1_full])
    return rows


def _hop_neighborhood(g: Dag, center: int, r: int) -> list[int]:
    dist = {center: 0}
    frontier = [center]
    while frontier:
        nxt = []
        for v in frontier:
            if dist[v] == r:
                continue
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return sorted(dist)


def run_experiment2(cfg: ExperimentConfig) -> list[list]:
    rows = []
    for n in cfg.n_list:
        for p in cfg.p_list:
            for trial in range(cfg.trials):
                seed = _trial_seed(cfg.seed, n, p, trial)
                g = generate_synthetic(n, p, seed)
                rng = random.Random(seed + 17)  # target node stream
                node = rng.randrange(n)
                subset = _hop_neighborhood(g, node, cfg.r)
                hs = set(subset)
                targets = TargetEdges(
                    frozenset(e for e in g.skeleton_edges() if e[0] in hs and e[1] in hs)
                )
                nu1_full = _nu1(g, TargetEdges(g.skeleton_edges()))
                nu1_subset = _nu1(g, targets)
                counts = {}
                counts["subsetsearch"] = subset_search(
                    InterventionOracle(g), subset, k=1
                ).total_interventions
                counts["random"] = random_search_baseline(
                    InterventionOracle(g), targets, seed=seed + 23
                ).total_interventions
                counts["fullsearch-early-stop"] = subset_search(
                    InterventionOracle(g), range(g.n), k=1, stop_when_oriented=targets
                ).total_interventions
                for algo in EXP2_ALGOS:
                    rows.append(
                        [n, p, seed, cfg.r, node, algo, counts[algo], nu1_full, nu1_subset]
                    )
    return rows


def write_csv(path: str | Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
