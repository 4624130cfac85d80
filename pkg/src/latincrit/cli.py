"""Command-line entry point.

Exit codes: 0 success / property holds, 1 property fails (e.g. verify on
a non-critical set), 2 usage or parse error.  Grids read and written in
the canonical grid text format; all randomized subcommands default to
seed 0 so runs are reproducible by default.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bounds as bounds_mod
from .constructions import (
    all_but_first_row_col,
    back_circulant,
    classic_5x5,
    nelder_triangle,
    random_latin_square,
)
from .core import GridError, parse_partial, serialize
from .criticality import (
    KNOWN_LCS,
    largest_critical_in,
    lcs_exhaustive,
    minimize_uc,
    verify_critical,
)
from .enumeration import count_all, iter_reduced
from .solver import NotUniqueError, count_completions, is_uniquely_completable

DEFAULT_COUNT_CAP = 1_000_000


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_partial(fh.read())


def _cmd_complete(args) -> int:
    p = _load(args.file)
    cap = None if args.count_cap == 0 else args.count_cap
    report = count_completions(p, cap)
    suffix = " (capped)" if report.capped else ""
    print(f"completions: {report.count}{suffix}")
    if report.count == 1:
        print("completion:")
        print(serialize(report.witnesses[0]), end="")
    elif args.witnesses:
        for w in report.witnesses:
            print("witness:")
            print(serialize(w), end="")
    return 0


def _cmd_verify(args) -> int:
    p = _load(args.file)
    rep = verify_critical(p)
    print(f"uniquely completable: {'yes' if rep.uniquely_completable else 'no'}")
    print(f"minimal: {'yes' if rep.minimal else 'no'}")
    print(f"critical: {'yes' if rep.critical else 'no'} (size {p.size})")
    if rep.violations:
        print("removable:", " ".join(f"({t.row},{t.col};{t.sym})" for t in rep.violations))
    return 0 if rep.critical else 1


def _cmd_minimize(args) -> int:
    p = _load(args.file)
    try:
        c = minimize_uc(p, removal_order=args.order, seed=args.seed)
    except NotUniqueError as exc:
        print(f"error: input is not uniquely completable ({exc})", file=sys.stderr)
        return 1
    print(serialize(c), end="")
    return 0


def _cmd_lcs(args) -> int:
    n = args.n
    if args.heuristic:
        best = None
        for k in range(args.starts):
            square = random_latin_square(n, seed=args.seed + k)
            res = largest_critical_in(square, exhaustive=False, seed=args.seed + k, starts=1)
            key = (-res.size, res.witness.triples())
            if best is None or key < best[0]:
                best = (key, res.witness, square)
        print(f"lcs({n}) >= {best[1].size} (heuristic lower bound)")
        print("witness square:")
        print(serialize(best[2]), end="")
        print("witness set:")
        print(serialize(best[1]), end="")
        return 0
    rec = lcs_exhaustive(n, allow_large=args.allow_large)
    print(f"lcs({n}) = {rec.value}")
    print("witness square:")
    print(serialize(rec.witness_square), end="")
    print("witness set:")
    print(serialize(rec.witness_set), end="")
    return 0


def _cmd_construct(args) -> int:
    which = args.what
    if which == "back-circulant":
        if args.n is None:
            raise GridError("back-circulant needs --n")
        obj = back_circulant(args.n)
    elif which == "nelder-triangle":
        if args.n is None:
            raise GridError("nelder-triangle needs --n")
        obj = nelder_triangle(args.n)
    elif which == "classic-5x5":
        obj = classic_5x5()
    else:  # minus-first-rc
        if args.infile is None:
            raise GridError("minus-first-rc needs --in FILE with a complete square")
        obj = all_but_first_row_col(_load(args.infile).to_latin())
    print(serialize(obj), end="")
    if not args.verify:
        return 0
    if which == "back-circulant":
        ok = True  # construction validated as a Latin square on creation
        label = "latin"
    elif which == "minus-first-rc":
        ok = is_uniquely_completable(obj)
        label = "uniquely completable"
    else:
        ok = verify_critical(obj).critical
        label = "critical"
    print(f"verified {label}: {'yes' if ok else 'NO'}", file=sys.stderr)
    return 0 if ok else 1


def _cmd_count(args) -> int:
    result = count_all(args.n, allow_large=args.allow_large)
    if args.list:
        first = True
        for square in iter_reduced(args.n, allow_large=args.allow_large):
            if not first:
                print()
            print(serialize(square), end="")
            first = False
        print(f"R({args.n}) = {result.reduced_count}", file=sys.stderr)
        print(f"L({args.n}) = {result.total_count}", file=sys.stderr)
    else:
        print(f"R({args.n}) = {result.reduced_count}")
        print(f"L({args.n}) = {result.total_count}")
    return 0


def _fmt_svr(v) -> str:
    return "" if v is None else str(v)


def _cmd_bounds(args) -> int:
    if args.crossover:
        print(bounds_mod.crossover())
        return 0
    if args.n_from is None or args.n_to is None:
        print("error: bounds needs N_FROM and N_TO (or --crossover)", file=sys.stderr)
        return 2
    if not 1 <= args.n_from <= args.n_to:
        print(f"error: need 1 <= N_FROM <= N_TO, got {args.n_from}..{args.n_to}", file=sys.stderr)
        return 2
    header = [
        "n", "nelder", "bm_upper", "svr", "theorem1",
        "exact_counting_lower", "log_Ln_lower", "log2_shape_term", "ln_n",
    ]
    table = []
    if args.n_from == 1:
        # ln 1 = 0 leaves the analytic bound undefined at n = 1
        table.append(["1", "0", "1", "", "undefined", "undefined", "0.0000", "0.0000", "0.0000"])
    if args.n_to >= 2:
        rows = bounds_mod.bounds_table(max(args.n_from, 2), args.n_to)
    else:
        rows = []
    table += [
        [
            str(r.order),
            str(r.nelder),
            str(r.bm_upper),
            _fmt_svr(r.svr),
            f"{r.theorem1:.4f}",
            f"{r.exact_counting_lower:.4f}",
            f"{r.log_Ln_lower:.4f}",
            f"{r.log_cs_count_upper_coeffs[0]:.4f}",
            f"{r.log_cs_count_upper_coeffs[1]:.4f}",
        ]
        for r in rows
    ]
    if args.csv:
        print(",".join(header))
        for row in table:
            print(",".join(row))
    else:
        widths = [max(len(h), *(len(row[i]) for row in table)) for i, h in enumerate(header)]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for row in table:
            print("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return 0


def _cmd_check_chain(args) -> int:
    n = args.n
    if n not in KNOWN_LCS:
        print(f"error: no known lcs value for order {n}", file=sys.stderr)
        return 2
    chk = bounds_mod.check_chain(n, KNOWN_LCS[n])
    verdict = "holds" if chk.holds else "FAILS"
    print(
        f"chain({n}): lhs {chk.lhs_log:.4f} <= mid {chk.mid_log:.4f} "
        f"<= rhs {chk.rhs_log:.4f} -> {verdict}"
    )
    return 0 if chk.holds else 1


def _cmd_check_stirling(args) -> int:
    failures = [n for n in range(1, args.n_max + 1) if not bounds_mod.stirling_check(n)]
    if failures:
        print(f"stirling FAILS at n = {failures}")
        return 1
    print(f"stirling holds for all n in 1..{args.n_max}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latincrit",
        description="Critical sets of Latin squares: solve, verify, enumerate, bound.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker cap; results are identical for any value (execution is sequential)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="count completions of a grid file")
    p.add_argument("file")
    p.add_argument("--count-cap", type=int, default=DEFAULT_COUNT_CAP,
                   help=f"stop counting here (0 = unbounded; default {DEFAULT_COUNT_CAP})")
    p.add_argument("--witnesses", action="store_true", help="print up to two completions")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("verify", help="criticality report; exit 0 iff critical")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("minimize", help="critical subset of a uniquely completable grid")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", choices=["row-major", "random"], default="row-major")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("lcs", help="largest critical set size at one order")
    p.add_argument("n", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--starts", type=int, default=32, help="heuristic portfolio size")
    p.add_argument("--allow-large", action="store_true", help="permit exhaustive order 5")
    p.set_defaults(func=_cmd_lcs)

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument("what", choices=["back-circulant", "nelder-triangle", "classic-5x5", "minus-first-rc"])
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="infile")
    p.add_argument("--verify", action="store_true",
                   help="check the construction's defining property; exit 1 on violation")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("count", help="exact reduced and total square counts")
    p.add_argument("n", type=int)
    p.add_argument("--list", action="store_true", help="stream the reduced squares")
    p.add_argument("--allow-large", action="store_true", help="permit order 6")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("bounds", help="bound formula table, or the crossover order")
    p.add_argument("n_from", type=int, nargs="?")
    p.add_argument("n_to", type=int, nargs="?")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--crossover", action="store_true",
                   help="print the order from which the analytic bound beats (n^2-n)/2")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("check-chain", help="counting inequality chain at one order")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_check_chain)

    p = sub.add_parser("check-stirling", help="Stirling lower substitute up to n_max")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=_cmd_check_stirling)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error(f"--threads must be >= 1, got {args.threads}")
    try:
        return args.func(args)
    except (GridError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
