"""Command-line entry point: ``mssc gen|solve|verify|gap|selftest``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import analysis
from .errors import BudgetExceeded, IncompleteCoverError, InputError, ParseError, UncoverableError
from .generators import SimpleGraph, build_b_q, build_figure1, build_h_g, random_hypergraph
from .hypergraph import check_ordering, first_uncovered_edge, solution_cost
from .io import format_instance, format_solution, parse_edge_list, read_instance, read_solution
from .solvers import DEFAULT_BUDGET, Instance, brute_force_mssc, fpt_decide, greedy_mssc

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_BUDGET = 2
EXIT_INFEASIBLE = 3
EXIT_MISMATCH = 4
DEFAULT_SEED = 0

EPILOG = """\
exit codes:
  0  success
  1  malformed input file or invalid arguments
  2  brute-force budget exceeded
  3  infeasible: uncovered edge, empty edge, or a --max-* bound violated
  4  mismatch: declared cost/k differ from recomputation, or a check failed
"""

log = logging.getLogger("mssc")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse's own exit status 2 would collide with the budget code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------- gen

def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} requires {', '.join(missing)}")


def cmd_gen(args) -> int:
    comments = []
    labels = None
    family = args.family.lower()
    if family == "hg":
        if args.graph is not None:
            if args.graph_type is not None:
                raise UsageError("--graph and --graph-type are mutually exclusive")
            G = parse_edge_list(Path(args.graph).read_text())
            source = f"graph={args.graph} n={G.n}"
        else:
            _need(args, "graph_type", "n")
            G = SimpleGraph.of_type(args.graph_type, args.n)
            source = f"graph-type={args.graph_type} n={args.n}"
        H, labels = build_h_g(G)
        comments.append(f"gen=hG {source} m={G.m} seed={args.seed}")
    elif family == "bq":
        _need(args, "n")
        q = 1 if args.q is None else args.q
        p = 1 if args.p is None else args.p
        H, layout = build_b_q(args.n, q, p)
        labels = {v: f"{lab.cls}.{lab.copy}.{lab.index}" for v, lab in layout.labels.items()}
        comments.append(f"gen=bq n={args.n} q={q} p={p} seed={args.seed}")
    elif family == "fig1":
        H, labels = build_figure1()
        comments.append(f"gen=fig1 seed={args.seed}")
    else:
        _need(args, "n", "m", "rank")
        H = random_hypergraph(args.n, args.m, args.rank, args.seed)
        comments.append(f"gen=random n={args.n} m={args.m} rank={args.rank} seed={args.seed}")
    if labels:
        comments.extend(f"label {v} {labels[v]}" for v in sorted(labels))
    _emit(format_instance(H, comments), args.out)
    log.info("wrote %d vertices, %d edges", H.vertex_count, H.num_edges)
    return EXIT_OK


# ---------------------------------------------------------------- solve

def cmd_solve(args) -> int:
    if args.algo == "fpt":
        if args.k is None or args.w is None:
            raise UsageError("--algo fpt requires --k and --w")
    elif args.k is not None or args.w is not None:
        raise UsageError(f"--algo {args.algo} does not take --k/--w")
    H = read_instance(args.input)
    if args.algo == "brute":
        res = brute_force_mssc(H, budget=args.budget)
        text = format_solution(
            res.witness_min, res.phi, stats={"tau": res.tau, "tau_arrow": res.tau_arrow, "nodes": res.nodes}
        )
    elif args.algo == "greedy":
        order, cost = greedy_mssc(H)
        text = format_solution(order, cost)
    else:
        stats = {}
        decision = fpt_decide(Instance(H, args.k, args.w), stats=stats)
        if decision.answer:
            text = format_solution(decision.ordering, decision.cost, decision="yes", stats=stats)
        else:
            text = format_solution(None, None, decision="no", stats=stats)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    H = read_instance(args.input)
    sol = read_solution(args.solution)
    if sol.ordering is None or sol.cost is None:
        raise ParseError("solution has no 's cost=... k=...' and 'o ...' lines")
    order = check_ordering(H, sol.ordering)
    missing = first_uncovered_edge(H, order)
    if missing is not None:
        print(f"infeasible: edge {{{', '.join(map(str, missing))}}} is uncovered")
        return EXIT_INFEASIBLE
    cost = solution_cost(H, order)
    problems = []
    if sol.cost != cost:
        problems.append(f"declared cost {sol.cost} but recomputed {cost}")
    if sol.k != len(order):
        problems.append(f"declared k {sol.k} but the ordering has {len(order)} vertices")
    if problems:
        print("mismatch: " + "; ".join(problems))
        return EXIT_MISMATCH
    if args.max_cost is not None and cost > args.max_cost:
        print(f"infeasible: cost {cost} exceeds --max-cost {args.max_cost}")
        return EXIT_INFEASIBLE
    if args.max_k is not None and len(order) > args.max_k:
        print(f"infeasible: k {len(order)} exceeds --max-k {args.max_k}")
        return EXIT_INFEASIBLE
    print(f"ok: cost={cost} k={len(order)}")
    return EXIT_OK


# ---------------------------------------------------------------- gap / selftest

def cmd_gap(args) -> int:
    family = {"hg": "hG", "bq": "bq", "random": "random"}[args.family.lower()]
    params = {
        "n": analysis.parse_range(args.n),
        "q": analysis.parse_range(args.q),
        "p": analysis.parse_range(args.p),
        "graph_types": tuple(t.strip() for t in args.graph_type.split(",")),
        "m": analysis.parse_range(args.m),
        "rank": analysis.parse_range(args.rank),
        "seeds": analysis.parse_range(args.seeds),
    }
    rows = analysis.gap_sweep(family, budget=args.budget, threads=args.threads, **params)
    _emit(analysis.reports_to_csv(rows), args.out)
    failed = [(row.id, c.name) for row in rows for c in row.failed]
    for row_id, name in failed:
        print(f"check failed: {row_id} {name}", file=sys.stderr)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_selftest(args) -> int:
    from .acceptance import CRITERIA, AcceptanceContext

    ctx = AcceptanceContext()
    numbers = analysis.parse_range(args.only) if args.only else list(CRITERIA)
    ok = True
    for number in numbers:
        if number not in CRITERIA:
            raise UsageError(f"no criterion {number}")
        res = ctx.run(number)
        print(res.line(), flush=True)
        ok &= res.passed
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mssc",
        description="Minimum sum set cover: generate, solve, verify, and measure.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)

    p = add("gen", "write an instance file")
    p.add_argument("--family", required=True, type=str.lower, choices=["hg", "bq", "fig1", "random"])
    p.add_argument("--graph", help="edge-list file ('n m' header, then 'u v' lines) for hG")
    p.add_argument("--graph-type", choices=["path", "cycle", "complete", "empty"])
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = add("solve", "solve an instance")
    p.add_argument("--algo", required=True, choices=["brute", "fpt", "greedy"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, help="cover size limit (fpt only)")
    p.add_argument("--w", type=int, help="cost limit (fpt only)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="brute-force node budget")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = add("verify", "recompute and check a solution")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--solution", required=True)
    p.add_argument("--max-cost", type=int)
    p.add_argument("--max-k", type=int)
    p.set_defaults(func=cmd_verify)

    p = add("gap", "solve a family exactly and write a CSV of bound checks")
    p.add_argument("--family", required=True, type=str.lower, choices=["hg", "bq", "random"])
    p.add_argument("--n", default="3", help="range like 3..5 or list like 3,5")
    p.add_argument("--q", default="1")
    p.add_argument("--p", default="1")
    p.add_argument("--graph-type", default="path,cycle,complete,empty")
    p.add_argument("--m", default="15")
    p.add_argument("--rank", default="3")
    p.add_argument("--seeds", default=str(DEFAULT_SEED))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1, help="worker processes; output order is fixed")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gap)

    p = add("selftest", "run the acceptance criteria")
    p.add_argument("--only", help="criterion numbers, e.g. 1..4 or 2,9")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UncoverableError, IncompleteCoverError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
