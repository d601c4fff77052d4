"""Command-line front end.

Exit codes: 0 success, 1 theorem verification failure, 2 usage or domain
error, 3 budget abort. Results go to stdout, diagnostics to stderr.
"""

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .budget import SearchBudget
from .errors import BudgetExceededError, DomainError
from .graph_core import all_pairs_distances, cayley_graph, clique_number
from .closed_forms import canonical_witness, antipodal_family, reports_to_csv, verify_theorems
from .resolving import is_doubly_resolving, is_resolving, is_strong_resolving
from .solvers import (
    min_doubly_resolving_set,
    min_resolving_set,
    min_strong_resolving_set_enum,
    min_strong_resolving_set_vc,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text):
    """``"8"`` -> [8]; ``"8..16"`` -> [8, ..., 16] inclusive."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _budget(args):
    return SearchBudget(max_subsets=args.budget_subsets, max_time=args.budget_ms / 1000)


def _pool_map(fn, items, threads):
    # map() yields in input order, which keeps output deterministic
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        return list(pool.map(fn, items))


# ----------------------------------------------------------------------------


def cmd_graph(args, out):
    fmt = args.format or "dot"
    graph = cayley_graph(args.n, args.k)
    offset = 1 if args.one_based else 0
    if fmt == "dot":
        out.write(graph.to_dot(offset, name=f"Cay_Z{args.n}_S{args.k}"))
    elif fmt == "json":
        out.write(graph.to_json(offset) + "\n")
    elif fmt == "csv":
        out.write(all_pairs_distances(graph).to_csv())
    else:
        for u in range(graph.n):
            out.write(f"{u + offset}: {' '.join(str(v + offset) for v in graph.neighbors(u))}\n")
    return EXIT_OK


def cmd_dims(args, out):
    fmt = args.format or "json"
    if fmt not in ("json", "table"):
        raise UsageError(f"dims supports --format json or table, not {fmt}")
    which = [w.strip() for w in args.which.split(",") if w.strip()]
    for w in which:
        if w not in ("beta", "psi", "sdim"):
            raise UsageError(f"unknown problem {w!r} in --which")
    d = all_pairs_distances(cayley_graph(args.n, args.k))
    budget = _budget(args)
    offset = 1 if args.one_based else 0
    reports = []
    status = EXIT_OK
    try:
        beta = None
        for w in which:
            if w == "beta":
                reports.append(min_resolving_set(d, budget))
                beta = reports[-1].optimum
            elif w == "psi":
                reports.append(min_doubly_resolving_set(d, budget, known_beta=beta))
            else:
                if args.method in ("enum", "both"):
                    reports.append(min_strong_resolving_set_enum(d, budget))
                if args.method in ("vc", "both"):
                    reports.append(min_strong_resolving_set_vc(d, budget))
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        partial = {"error": "budget", "lower": exc.lower, "upper": exc.upper, "nodes": exc.nodes}
        status = EXIT_BUDGET
    else:
        partial = None
    timing = not args.no_timing
    for r in reports:
        if fmt == "json":
            out.write(r.to_json(timing, offset) + "\n")
        else:
            witness = " ".join(str(v + offset) for v in r.witness.vertices)
            out.write(f"{r.problem.value}\t{r.optimum}\t{r.method.value}\t{{{witness}}}\n")
    if partial is not None:
        out.write(json.dumps(partial) + "\n")
    return status


def _even_targets(values):
    targets = []
    for n in values:
        if n % 2 or n < 8:
            print(f"warning: skipping n={n}; the closed forms need n even and n >= 8", file=sys.stderr)
        else:
            targets.append(n)
    return targets


def cmd_verify(args, out):
    fmt = args.format or "csv"
    if fmt not in ("csv", "json", "table"):
        raise UsageError(f"verify supports --format csv, json or table, not {fmt}")
    targets = _even_targets(parse_range(args.n))
    budget = _budget(args)
    reports = _pool_map(lambda n: verify_theorems(n, budget), targets, args.threads)
    if fmt == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    elif fmt == "csv":
        out.write(reports_to_csv(reports))
    else:
        for r in reports:
            out.write(
                f"n={r.n} k={r.k} expected={r.expected} beta={r.beta} psi={r.psi} "
                f"sdim={r.sdim} witness_ok={r.witness_ok} {'pass' if r.passed else 'FAIL'}\n"
            )
    for r in reports:
        for note in r.notes:
            print(f"n={r.n}: {note}", file=sys.stderr)
    if any(r.partial for r in reports):
        return EXIT_BUDGET
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _attempt(solve):
    try:
        return solve()
    except BudgetExceededError:
        return None


def _sweep_cell(n, k, budget):
    graph = cayley_graph(n, k)
    d = all_pairs_distances(graph)
    beta = _attempt(lambda: min_resolving_set(d, budget).optimum)
    psi = _attempt(lambda: min_doubly_resolving_set(d, budget, known_beta=beta).optimum)
    sdim = _attempt(lambda: min_strong_resolving_set_enum(d, budget).optimum)
    omega = _attempt(lambda: clique_number(graph, budget))
    return [n, k, *("?" if v is None else v for v in (beta, psi, sdim, omega)), d.diameter]


def cmd_sweep(args, out):
    budget = _budget(args)
    cells = [(n, k) for n in parse_range(args.n) if n >= 4 for k in range(1, n // 2)]
    rows = _pool_map(lambda nk: _sweep_cell(*nk, budget), cells, args.threads)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("n", "k", "beta", "psi", "sdim", "omega", "diameter"))
    writer.writerows(rows)
    return EXIT_OK


def cmd_witness(args, out):
    fmt = args.format or "table"
    w = canonical_witness(args.n)
    _, d = antipodal_family(args.n)
    offset = 1 if args.one_based else 0
    checks = {
        "resolving": is_resolving(w, d),
        "doubly_resolving": is_doubly_resolving(w, d),
        "strong_resolving": is_strong_resolving(w, d),
    }
    labels = [v + offset for v in w.vertices]
    if fmt == "json":
        out.write(json.dumps({"n": args.n, "k": args.n // 2 - 1, "witness": labels, "checks": checks}) + "\n")
    else:
        out.write(f"witness {{{', '.join(map(str, labels))}}} in Cay(Z_{args.n}, S_{args.n // 2 - 1})\n")
        for name, ok in checks.items():
            out.write(f"  {name:<17} {'yes' if ok else 'no'}\n")
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


# ----------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv", "dot"))
    common.add_argument("--budget-subsets", type=int, default=50_000_000, help="search node limit")
    common.add_argument("--budget-ms", type=int, default=600_000, help="wall-clock limit per search")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--no-timing", action="store_true", help="omit timing fields")
    common.add_argument("--one-based", action="store_true", help="print vertices as 1..n")
    common.add_argument("--method", choices=("enum", "vc", "both"), default="enum", help="sdim solver")

    parser = argparse.ArgumentParser(
        prog="metricdim",
        description="Resolving-set dimensions of the circulant graphs Cay(Z_n, S_k).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", parents=[common], help="export Cay(Z_n, S_k) or its distances")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("dims", parents=[common], help="solve beta, psi and sdim exactly")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--which", default="beta,psi,sdim", help="comma list from beta,psi,sdim")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", parents=[common], help="check beta = psi = sdim = n/2 for k = n/2-1")
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="table over every valid (n, k)")
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("witness", parents=[common], help="canonical witness and its three checks")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
