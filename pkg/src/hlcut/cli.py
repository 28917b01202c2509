"""Batch front-end: generate family members, run the exact solvers and the
bound verifiers, print reproduction tables, and write machine-readable
reports.

Exit codes: 0 all checks pass, 1 verified mismatch or counterexample,
2 usage error, 3 incomplete search (budget exhausted).
"""

from __future__ import annotations

import argparse
import sys

from .build import (fig1_graph, from_trace, hypercube, random_hl, read_trace,
                    write_trace)
from .cuts import BRANCH_AND_BOUND, EXHAUSTIVE, CutReport, lambda_sh_exact
from .errors import IncompleteSearchError, UsageError
from .graph import Graph, read_graph, write_graph
from .kappa import kappa_sh_exact
from .lemmas import (LemmaVerdict, check_lemma_32, check_lemma_35,
                     check_lemma_37, check_theorem)
from .reports import write_reports

OK, MISMATCH, USAGE, INCOMPLETE = 0, 1, 2, 3


def _parse_h(value: str, top: int, allow_all: bool = True) -> list[int]:
    if value == "all":
        if not allow_all:
            raise UsageError("'all' is not accepted here")
        if top < 0:
            raise UsageError("graph admits no levels to sweep")
        return list(range(top + 1))
    try:
        h = int(value)
    except ValueError:
        raise UsageError(f"--h must be an integer or 'all', got {value!r}") from None
    if h < 0:
        raise UsageError(f"--h must be nonnegative, got {h}")
    return [h]


def _infer_dimension(g: Graph) -> int | None:
    """Dimension n when the graph looks like a family member (order 2^n,
    n-regular); None otherwise."""
    if g.order == 0 or g.order & (g.order - 1):
        return None
    n = g.order.bit_length() - 1
    if any(a.bit_count() != n for a in g.adj):
        return None
    return n


def cmd_generate(args) -> int:
    if args.kind == "hypercube":
        if args.n is None:
            raise UsageError("--kind hypercube requires --n")
        if args.seed is not None:
            raise UsageError("--seed only applies to --kind random")
        hl = hypercube(args.n)
    elif args.kind == "random":
        if args.n is None:
            raise UsageError("--kind random requires --n")
        if args.seed is None:
            raise UsageError("--kind random requires an explicit --seed")
        hl = random_hl(args.n, args.seed)
    else:
        if args.seed is not None:
            raise UsageError("--seed only applies to --kind random")
        if args.n is not None and args.n != 4:
            raise UsageError("the figure fixture is 4-dimensional; omit --n")
        hl = fig1_graph()
    write_graph(args.out, hl.graph)
    if args.trace is not None:
        write_trace(args.trace, hl.trace)
    print(f"wrote {hl.label}: {hl.graph.order} vertices, "
          f"{hl.graph.num_edges} edges -> {args.out}"
          + (f", trace -> {args.trace}" if args.trace else ""))
    return OK


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    n = _infer_dimension(g)
    if args.h == "all" and n is None:
        raise UsageError("cannot infer the dimension of this graph; "
                         "give a numeric --h instead of 'all'")
    if args.expect_theorem and n is None:
        raise UsageError("--expect-theorem needs a 2^n-vertex n-regular graph")
    levels = _parse_h(args.h, n - 1 if n is not None else -1)
    if args.expect_theorem and any(h > n - 1 for h in levels):
        raise UsageError(f"--expect-theorem needs h < {n} for this graph")
    reports = []
    rows = []
    mismatch = False
    for h in levels:
        report = lambda_sh_exact(g, h, method=args.method,
                                 threads=args.threads, budget=args.budget,
                                 override_gate=args.override_gate)
        reports.append(report)
        value = report.value if isinstance(report, CutReport) else None
        if n is not None and h <= n - 1:
            formula = (1 << h) * (n - h)
            match = value == formula
            mismatch |= not match
            rows.append((h, value, str(formula), "yes" if match else "no"))
        else:
            rows.append((h, value, "-", "-"))
    print(f"{'h':<4}{'value':<14}{'formula':<10}{'match'}")
    for h, value, formula, match in rows:
        shown = "nonexistent" if value is None else str(value)
        print(f"{h:<4}{shown:<14}{formula:<10}{match}")
    if args.out is not None:
        write_reports(args.out, reports)
    if args.expect_theorem and mismatch:
        return MISMATCH
    return OK


_LEMMA_CHECKS = {
    "3.2": (check_lemma_32, 0),      # admits h up to n
    "3.5": (check_lemma_35, 1),      # up to n-1
    "3.7": (check_lemma_37, 1),
    "thm": (None, 1),
}


def cmd_verify(args) -> int:
    trace = read_trace(args.trace)
    hl = from_trace(trace, label=args.trace)
    checker, slack = _LEMMA_CHECKS[args.lemma]
    levels = _parse_h(args.h, hl.n - slack)
    verdicts: list[LemmaVerdict] = []
    for h in levels:
        if args.lemma == "thm":
            v = check_theorem(hl, h, method=args.method, threads=args.threads,
                              budget=args.budget,
                              override_gate=args.override_gate)
        else:
            v = checker(hl, h, override_gate=args.override_gate)
        verdicts.append(v)
        status = "holds" if v.holds else "FAILS"
        extra = ""
        if v.counterexample is not None:
            members = [u for u in range(v.counterexample.bit_length())
                       if v.counterexample >> u & 1]
            extra = f" counterexample={members}"
        print(f"{v.lemma_id}  {v.graph_id}  h={h}: {status} "
              f"(subsets={v.subsets_checked}, tight={v.tight_witnesses})"
              + extra)
    if args.out is not None:
        write_reports(args.out, verdicts)
    return OK if all(v.holds for v in verdicts) else MISMATCH


def cmd_kappa(args) -> int:
    g = read_graph(args.graph)
    levels = _parse_h(args.h, -1, allow_all=False)
    report = kappa_sh_exact(g, levels[0], override_gate=args.override_gate)
    if report.exists:
        members = [u for u in range(report.witness.bit_length())
                   if report.witness >> u & 1]
        print(f"h={report.h}: exists, value {report.value}, "
              f"witness {members} (subsets_checked={report.subsets_checked})")
    else:
        print(f"h={report.h}: nonexistent "
              f"(subsets_checked={report.subsets_checked})")
    if args.out is not None:
        write_reports(args.out, [report])
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlcut",
        description="Exact edge- and vertex-fault tolerance lab for "
                    "hypercube-like networks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph file (and trace)")
    p.add_argument("--kind", required=True,
                   choices=["hypercube", "random", "fig1"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--trace", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="exact minimum degree-preserving cut")
    p.add_argument("--graph", required=True)
    p.add_argument("--h", required=True, help="level, or 'all'")
    p.add_argument("--method", default=EXHAUSTIVE,
                   choices=[EXHAUSTIVE, BRANCH_AND_BOUND])
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=float, default=None,
                   help="seconds before giving up with the incumbent")
    p.add_argument("--expect-theorem", action="store_true",
                   help="exit nonzero unless every value matches 2^h(n-h)")
    p.add_argument("--out", default=None, help="machine report file")
    p.add_argument("--override-gate", action="store_true",
                   help="allow exhaustive scans beyond the default order gate")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a subset bound or the equality")
    p.add_argument("--lemma", required=True, choices=sorted(_LEMMA_CHECKS))
    p.add_argument("--trace", required=True)
    p.add_argument("--h", required=True, help="level, or 'all'")
    p.add_argument("--method", default=EXHAUSTIVE,
                   choices=[EXHAUSTIVE, BRANCH_AND_BOUND])
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--override-gate", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kappa", help="vertex-variant existence and value")
    p.add_argument("--graph", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--override-gate", action="store_true")
    p.set_defaults(func=cmd_kappa)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except IncompleteSearchError as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return INCOMPLETE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
