"""Command-line entry point: ``welldom check|reduce|verify|enumerate|params|gen``.

Exit codes: 0 success (well / all trials passed), 1 negative answer
(not well / some trial failed), 2 usage, parse, precondition or cap errors.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .chain import chain_parameters
from .core import Graph, Hypergraph, InstanceError
from .enumeration import DEFAULT_CAP, SolutionKind, enumerate_solutions
from .formats import read_instance, write_graph, write_hypergraph
from .generate import random_graph, random_hypergraph
from .reductions import (
    domination_to_hitting_set,
    greedy_minimal_hitting_set,
    hitting_set_to_domination,
    hitting_set_to_total_domination,
    vertex_cover_to_hitting_set,
)
from .trials import drop_first_element_edge, run_total_domination, run_well_domination
from .wellness import KINDS, WellProperty, check

ENUM_KINDS = {
    "maximal-independent-sets": SolutionKind.MAXIMAL_INDEPENDENT_SET,
    "minimal-vertex-covers": SolutionKind.MINIMAL_VERTEX_COVER,
    "minimal-dominating-sets": SolutionKind.MINIMAL_DOMINATING_SET,
    "minimal-total-dominating-sets": SolutionKind.MINIMAL_TOTAL_DOMINATING_SET,
    "minimal-hitting-sets": SolutionKind.MINIMAL_HITTING_SET,
    "minimal-set-covers": SolutionKind.MINIMAL_SET_COVER,
}

VERIFY_DEFAULTS = {"total-domination": (7, 6), "well-domination": (6, 4)}


class UsageError(Exception):
    pass


def _load(path: str, want: type):
    instance = read_instance(path)
    if not isinstance(instance, want):
        raise UsageError(f"{path}: expected a {'graph' if want is Graph else 'hypergraph'} file")
    return instance


def _fmt(solution) -> str:
    return "{" + ",".join(str(x) for x in solution) + "}"


def cmd_check(args) -> int:
    prop = WellProperty(args.property)
    want = Graph if KINDS[prop][0].on_graph else Hypergraph
    report = check(_load(args.instance, want), prop, full=args.full, cap=args.cap)
    print(report.record() if args.output == "record" else report.describe())
    return 0 if report.well else 1


def cmd_reduce(args) -> int:
    if args.reduction in ("vc-to-hs", "dom-to-hs"):
        G = _load(args.instance, Graph)
        H = vertex_cover_to_hitting_set(G) if args.reduction == "vc-to-hs" else domination_to_hitting_set(G, args.mode)
        text = write_hypergraph(H)
        if args.out:
            Path(args.out + ".hyper").write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    H = _load(args.instance, Hypergraph)
    if args.reduction == "hs-to-wtd":
        out = hitting_set_to_total_domination(H, args.variant)
    else:
        k = args.k if args.k is not None else len(greedy_minimal_hitting_set(H))
        out = hitting_set_to_domination(H, k, verify=args.check_k, cap=args.cap)
    graph_text, roles = write_graph(out.instance), out.role_table()
    if args.out:
        Path(args.out + ".graph").write_text(graph_text)
        Path(args.out + ".roles").write_text(roles)
    else:
        sys.stdout.write(graph_text + roles)
    return 0


def cmd_verify(args) -> int:
    max_u, max_s = VERIFY_DEFAULTS[args.theorem]
    max_u = args.max_universe if args.max_universe is not None else max_u
    max_s = args.max_sets if args.max_sets is not None else max_s
    if args.theorem == "total-domination":
        mutate = drop_first_element_edge if args.mutate == "drop-edge" else None
        summary = run_total_domination(args.random, args.seed, max_u, max_s, args.cap, mutate)
    else:
        if args.mutate:
            raise UsageError("--mutate applies to total-domination only")
        summary = run_well_domination(args.random, args.seed, max_u, max_s, args.cap)
    print(summary.record() if args.output == "record" else summary.describe())
    return 0 if summary.passed == len(summary.trials) else 1


def cmd_enumerate(args) -> int:
    kind = ENUM_KINDS[args.kind]
    family = enumerate_solutions(_load(args.instance, Graph if kind.on_graph else Hypergraph), kind, cap=args.cap)
    if args.output == "record":
        print(f"{kind.value} {len(family)} " + " ".join(_fmt(s) for s in family))
    else:
        print(f"{len(family)} {kind.value}s, sizes {list(family.size_values)}")
        for s in family:
            print(_fmt(s))
    return 0


def cmd_params(args) -> int:
    p = chain_parameters(_load(args.instance, Graph), cap=args.cap)
    if args.output == "record":
        print(p.record())
    else:
        print(f"gamma={p.gamma} Gamma={p.Gamma} iota={p.iota} alpha={p.alpha}")
    return 0


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "hyper":
        sys.stdout.write(write_hypergraph(random_hypergraph(rng, args.elements, args.sets)))
    else:
        sys.stdout.write(write_graph(random_graph(rng, args.vertices, args.p)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest ground set enumerated (default %(default)s)")
    common.add_argument("--output", choices=["human", "record"], default="human")

    parser = argparse.ArgumentParser(prog="welldom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide a wellness property")
    p.add_argument("property", choices=[w.value for w in WellProperty])
    p.add_argument("instance")
    p.add_argument("--full", action="store_true", help="enumerate everything instead of stopping at the first size clash")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", parents=[common], help="build a gadget or translated instance")
    p.add_argument("reduction", choices=["hs-to-wtd", "hs-to-wd", "vc-to-hs", "dom-to-hs"])
    p.add_argument("instance")
    p.add_argument("--k", type=int, help="hs-to-wd: target size (default: greedy minimal hitting set size)")
    p.add_argument("--check-k", action="store_true", help="hs-to-wd: confirm by enumeration that some minimal hitting set has size k")
    p.add_argument("--variant", choices=["plain", "split"], default="plain")
    p.add_argument("--mode", choices=["closed", "open"], default="closed")
    p.add_argument("--out", help="write <out>.graph and <out>.roles (or <out>.hyper) instead of stdout")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="randomized check of a gadget correspondence")
    p.add_argument("theorem", choices=sorted(VERIFY_DEFAULTS))
    p.add_argument("--random", type=int, default=200, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-universe", type=int)
    p.add_argument("--max-sets", type=int)
    p.add_argument("--mutate", choices=["drop-edge"], help="negative control: corrupt each gadget before checking")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list every minimal/maximal solution")
    p.add_argument("kind", choices=sorted(ENUM_KINDS))
    p.add_argument("instance")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("params", parents=[common], help="gamma Gamma iota alpha")
    p.add_argument("instance")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("gen", parents=[common], help="seeded random instance")
    p.add_argument("kind", choices=["hyper", "graph"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--elements", type=int, default=5)
    p.add_argument("--sets", type=int, default=4)
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--p", type=float, default=0.3)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.cap < 1:
        print("error: --cap must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InstanceError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
