"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import harness
from .engine import ReplayError, RoundBudget, SearchParams, alg1_run, alg2_run
from .io import (
    ParseError,
    read_placement_file,
    read_probes_file,
    write_placement_file,
    write_probes_file,
)
from .model import InvalidInputError, total_cost
from .oracle import brute_force_optimum, generate_probeset, verify_incremental
from .report import format_csv

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _default_seed() -> int:
    raw = os.environ.get("BLMP_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BLMP_SEED must be an integer, got {raw!r}") from None


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    d = SearchParams()
    p.add_argument("--instance", required=True, help="probes file")
    p.add_argument("--seed", type=int, default=None, help="master seed (default: $BLMP_SEED or 0)")
    p.add_argument("--workers", type=int, default=d.workers)
    budget = p.add_mutually_exclusive_group()
    budget.add_argument("--time-limit", type=float, metavar="SEC")
    budget.add_argument("--rounds", type=int, metavar="N")
    p.add_argument("--pr", type=float, default=d.pr)
    p.add_argument("--max-trials1", type=int, default=d.max_trials1)
    p.add_argument("--max-trials2", type=int, default=d.max_trials2)
    p.add_argument("--max-cost", type=int, default=d.max_cost)
    p.add_argument("--max-cost1", type=int, default=d.max_cost1)
    p.add_argument("--max-cost2", type=int, default=d.max_cost2)
    p.add_argument("--winlength1", type=int, default=d.winlength1)
    p.add_argument("--winlength2", type=int, default=d.winlength2)
    p.add_argument("--checkpoint-every", type=float, metavar="SEC|ROUNDS",
                   help="record best cost every so many seconds (with --time-limit) or rounds")
    p.add_argument("--report", help="write the CSV here instead of stdout")


def _params(args) -> SearchParams:
    if args.time_limit is not None:
        budget = RoundBudget.seconds(args.time_limit)
    else:
        budget = RoundBudget.rounds(args.rounds if args.rounds is not None else 1000)
    return SearchParams(
        workers=args.workers, budget=budget, pr=args.pr,
        max_trials1=args.max_trials1, max_trials2=args.max_trials2,
        max_cost=args.max_cost, max_cost1=args.max_cost1, max_cost2=args.max_cost2,
        winlength1=args.winlength1, winlength2=args.winlength2, seed=args.seed,
    )


def _checkpoint_every(args):
    if args.checkpoint_every is None:
        return None
    if args.checkpoint_every <= 0:
        raise UsageError("--checkpoint-every must be positive")
    if args.time_limit is None:
        return int(args.checkpoint_every)
    return args.checkpoint_every


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_checkpoints(rep) -> None:
    for cp in rep.checkpoints:
        print(f"checkpoint algorithm={rep.algorithm} rounds={cp.rounds} "
              f"elapsed_ms={cp.elapsed_ms:.0f} best_cost={cp.best_cost}", file=sys.stderr)


def cmd_gen(args) -> int:
    sp = generate_probeset(args.dim, args.probelength, args.seed)
    if args.out:
        write_probes_file(sp, args.out)
    else:
        sys.stdout.write(f"{sp.dim} {sp.probelength}\n" + "".join(f"{p}\n" for p in sp.probes))
    return EXIT_OK


def cmd_run(args) -> int:
    sp = read_probes_file(args.instance)
    params = _params(args)
    initial = read_placement_file(args.placement, sp) if args.placement else None
    name = os.path.basename(args.instance)
    if args.script:
        if args.algo not in ("alg1", "alg2"):
            raise UsageError("--script is only meaningful for alg1 and alg2")
        script, _ = harness.load_script(args.script)
        run = alg1_run if args.algo == "alg1" else alg2_run
        pl, _, rep = run(sp, params, script, initial=initial, debug=True)
        rep.instance = name
    else:
        pl, rep = harness.run_algorithm(sp, args.algo, params, instance=name, initial=initial,
                                        checkpoint_every=_checkpoint_every(args))
    _print_checkpoints(rep)
    if args.out:
        write_placement_file(pl, args.out)
    _emit(format_csv([rep]), args.report)
    return EXIT_OK


def cmd_compare(args) -> int:
    sp = read_probes_file(args.instance)
    params = _params(args)
    name = os.path.basename(args.instance)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in harness.ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {', '.join(harness.ALGORITHMS)}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    reports = []
    for a in algos:
        pl, rep = harness.run_algorithm(sp, a, params, instance=name,
                                        checkpoint_every=_checkpoint_every(args))
        _print_checkpoints(rep)
        if args.out:
            write_placement_file(pl, os.path.join(args.out, f"{a}.placement"))
        reports.append(rep)
    _emit(format_csv(reports), args.report)
    return EXIT_OK


def cmd_cost(args) -> int:
    sp = read_probes_file(args.instance)
    pl = read_placement_file(args.placement, sp)
    print(total_cost(sp, pl))
    return EXIT_OK


def cmd_oracle(args) -> int:
    sp = read_probes_file(args.instance)
    res = brute_force_optimum(sp, prune_symmetry=not args.no_symmetry)
    if args.out:
        write_placement_file(res.witness, args.out)
    print(res.optimum_cost)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.instance:
        sp = read_probes_file(args.instance)
    elif args.dim:
        sp = generate_probeset(args.dim, args.probelength, args.seed)
    else:
        raise UsageError("verify needs --instance or --dim")
    res = verify_incremental(sp, args.seed, args.swaps)
    if res.passed:
        print(f"PASS swaps={res.swaps_checked}")
        return EXIT_OK
    step, kept, real = res.first_divergence
    print(f"FAIL at swap {step}: maintained COST={kept}, recomputed={real}")
    return EXIT_VERIFY


def cmd_replay(args) -> int:
    sp, start, _, best_cost, rep = harness.replay(args.script, args.instance, args.placement)
    sys.stdout.write(harness.format_trace(sp, start, best_cost, rep))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="blmp", description="Border length minimization for DNA probe arrays.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--probelength", type=int, default=25)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run one algorithm on one instance")
    p.add_argument("--algo", required=True, choices=harness.ALGORITHMS)
    _add_search_flags(p)
    p.add_argument("--placement", help="start placement (search algorithms only)")
    p.add_argument("--script", help="JSON selection script (alg1/alg2 replay)")
    p.add_argument("-o", "--out", help="write the best placement here")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="run several algorithms on one instance")
    p.add_argument("--algos", default=",".join(harness.ALGORITHMS))
    _add_search_flags(p)
    p.add_argument("-o", "--out", help="directory for <algo>.placement files")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("cost", help="score a placement")
    p.add_argument("--instance", required=True)
    p.add_argument("--placement", required=True)
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("oracle", help="exhaustive optimum for dim <= 3")
    p.add_argument("--instance", required=True)
    p.add_argument("--no-symmetry", action="store_true", help="enumerate without symmetry pruning")
    p.add_argument("-o", "--out", help="write an optimal placement here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="fuzz incremental cost bookkeeping")
    p.add_argument("--instance")
    p.add_argument("--dim", type=int)
    p.add_argument("--probelength", type=int, default=25)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--swaps", type=int, default=10000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="replay the scripted 4x4 worked example")
    p.add_argument("--script")
    p.add_argument("--instance")
    p.add_argument("--placement")
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidInputError, ReplayError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
