"""Command-line front door.

Subcommands: gen, verify, oracle, stab, search, exp1, exp2.
Exit codes: 0 success, 1 input error, 2 budget (size-cap) error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import BudgetError, InputError
from .experiments import (
    EXP1_HEADER,
    EXP2_HEADER,
    ExperimentConfig,
    run_experiment1,
    run_experiment2,
    write_csv,
)
from .graphs import TargetEdges, generate_synthetic
from .io import dump_dag, dump_pdag, load_dag, load_stab_instance, load_targets, load_weights
from .oracle import OracleBudget, nu1_bruteforce, nuk_bruteforce
from .orient import recover_interventions
from .search import InterventionOracle, random_search_baseline, subset_search
from .stabbing import prepare, solve
from .verify import CostParams, atomic_verifying_set, bounded_verifying_set, cost_verifying_set


def _fmt_set(iset) -> str:
    return " ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in iset)


def _cmd_gen(args) -> int:
    g = generate_synthetic(args.n, args.p, args.seed)
    if args.out:
        dump_dag(g, args.out)
        print(f"wrote {args.out}: n={g.n} arcs={len(g.arcs)}")
    else:
        print(g.n)
        for u, v in sorted(g.arcs):
            print(u, v)
    return 0


def _cmd_verify(args) -> int:
    g = load_dag(args.graph)
    targets = load_targets(args.targets, g) if args.targets else TargetEdges(g.skeleton_edges())
    costs = load_weights(args.weights) if args.weights else {}
    if args.alpha is not None or args.beta is not None or args.weights:
        params = CostParams(
            alpha=args.alpha if args.alpha is not None else 1.0,
            beta=args.beta if args.beta is not None else 0.0,
            vertex_costs=costs,
        )
        iset = cost_verifying_set(g, targets, args.k, params)
        print(f"interventions: {_fmt_set(iset)}")
        print(f"count: {len(iset)}")
        print(f"objective: {params.objective(iset):.6g}")
    elif args.k > 1:
        iset = bounded_verifying_set(g, targets, args.k)
        print(f"interventions: {_fmt_set(iset)}")
        print(f"count: {len(iset)}")
    else:
        iset = atomic_verifying_set(g, targets)
        print(f"interventions: {_fmt_set(iset)}")
        print(f"count: {len(iset)}")
    if args.certificate:
        closure = recover_interventions(g, list(iset)).closure
        sys.stdout.write(dump_pdag(closure))
    return 0


def _cmd_oracle(args) -> int:
    g = load_dag(args.graph)
    targets = load_targets(args.targets, g) if args.targets else TargetEdges(g.skeleton_edges())
    budget = OracleBudget(max_n=args.max_n, max_n_bounded=min(args.max_n, 7))
    if args.k > 1:
        size, iset = nuk_bruteforce(g, targets, args.k, budget)
    else:
        size, iset = nu1_bruteforce(g, targets, budget)
    print(f"optimum: {size}")
    print(f"witness: {_fmt_set(iset)}")
    return 0


def _cmd_stab(args) -> int:
    tree, intervals = load_stab_instance(args.infile)
    cost, chosen = solve(prepare(tree, intervals))
    print(f"optimum: {cost:g}")
    print(f"stab set: {' '.join(map(str, sorted(chosen)))}")
    return 0


def _cmd_search(args) -> int:
    g = load_dag(args.graph)
    oracle = InterventionOracle(g)
    if args.nodes:
        subset = sorted(
            {int(tok) for line in open(args.nodes) for tok in line.split()}
        )
    elif args.target_node is not None:
        from .experiments import _hop_neighborhood

        subset = _hop_neighborhood(g, args.target_node, args.hop)
    else:
        subset = list(range(g.n))
    if args.algo == "random":
        hs = set(subset)
        targets = TargetEdges(
            frozenset(e for e in g.skeleton_edges() if e[0] in hs and e[1] in hs)
        )
        transcript = random_search_baseline(oracle, targets, args.seed)
    else:
        transcript = subset_search(oracle, subset, k=args.k)
    print(f"interventions: {transcript.total_interventions}")
    print(f"rounds: {transcript.rounds}")
    if args.out:
        rows = []
        step = 0
        for rnd, count in enumerate(transcript.per_round_counts, start=1):
            for _ in range(count):
                s, new = transcript.steps[step]
                rows.append(
                    [rnd, step + 1, ",".join(map(str, sorted(s))), len(new)]
                )
                step += 1
        write_csv(args.out, ["round", "step", "intervention", "new_arcs"], rows)
        print(f"wrote {args.out}")
    return 0


def _grid_cfg(args) -> ExperimentConfig:
    return ExperimentConfig(
        n_list=tuple(args.n_list),
        p_list=tuple(args.p_list),
        trials=args.trials,
        frac_list=tuple(args.frac_list),
        r=args.r,
        seed=args.seed,
        out=args.out or "results.csv",
    )


def _cmd_exp1(args) -> int:
    cfg = _grid_cfg(args)
    write_csv(cfg.out, EXP1_HEADER, run_experiment1(cfg))
    print(f"wrote {cfg.out}")
    return 0


def _cmd_exp2(args) -> int:
    cfg = _grid_cfg(args)
    write_csv(cfg.out, EXP2_HEADER, run_experiment2(cfg))
    print(f"wrote {cfg.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="minorient",
        description="Minimum intervention sets orienting target edges in causal DAGs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a synthetic collider-free DAG")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="compute a minimum verifying set")
    p.add_argument("--graph", required=True)
    p.add_argument("--targets", help="defaults to every edge")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--weights")
    p.add_argument("--certificate", action="store_true", help="print the closure")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force reference optimum")
    p.add_argument("--graph", required=True)
    p.add_argument("--targets")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("stab", help="solve a rooted-tree interval stabbing file")
    p.add_argument("infile")
    p.set_defaults(fn=_cmd_stab)

    p = sub.add_parser("search", help="adaptive search against a simulated oracle")
    p.add_argument("--graph", required=True)
    p.add_argument("--hop", type=int, default=1)
    p.add_argument("--target-node", type=int, default=None)
    p.add_argument("--nodes", help="file of vertex ids forming the subset")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--algo", choices=["subsetsearch", "random"], default="subsetsearch")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="per-round CSV path")
    p.set_defaults(fn=_cmd_search)

    for name, fn in (("exp1", _cmd_exp1), ("exp2", _cmd_exp2)):
        p = sub.add_parser(name, help=f"run experiment {name[-1]} and write CSV")
        p.add_argument("--n-list", type=int, nargs="+", default=[10, 20, 30, 40, 50])
        p.add_argument("--p-list", type=float, nargs="+", default=[0.03, 0.1, 0.3])
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--frac-list", type=float, nargs="+", default=[0.3, 0.5, 0.7, 1.0])
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out")
        p.set_defaults(fn=fn)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
