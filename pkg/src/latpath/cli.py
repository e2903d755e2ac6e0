"""``latpath`` command line front end."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from . import apps, closedforms, oracle, tutte, verify
from .bipoly import render_univariate
from .errors import ConsistencyError, DomainError, ParsePathError
from .matroid import bases, count_bases, dual, from_spec, k_catalan, kl_catalan, rank
from .nbc import nbc_sets, nbc_size_counts
from .series import tutte_gf_rhs

ENGINES = ("dp", "activity", "corank", "word")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostic instead of the usage dump
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _limit(args, default):
    if args.force:
        print("warning: --force disables the oracle size guard; this may run for a long time", file=sys.stderr)
        return None
    return default


# -- subcommands -------------------------------------------------------------------


def cmd_tutte(args) -> int:
    M = from_spec(args.spec)
    if args.engine == "dp":
        t = tutte.tutte_dp(M)
    elif args.engine == "activity":
        t = tutte.tutte_activity(M, limit=_limit(args, tutte.BASIS_LIMIT))
    elif args.engine == "corank":
        t = tutte.tutte_corank_nullity(M, limit=_limit(args, oracle.ORACLE_LIMIT))
    else:
        if not args.spec.startswith("word:"):
            raise DomainError("the word engine needs a word:<Q> spec")
        t = tutte.tutte_from_word(args.spec[5:])
    if args.eval is not None:
        x, y = args.eval
        value = t.eval_at(x, y)
        _emit(args, {"matroid": str(M), "x": str(x), "y": str(y), "value": str(value)}, str(value))
        return 0
    _emit(args, {"matroid": str(M), "tutte": t.to_triples()}, t.render())
    return 0


def cmd_bases(args) -> int:
    M = from_spec(args.spec)
    if args.count:
        n = count_bases(M)
        _emit(args, {"matroid": str(M), "count": str(n)}, str(n))
        return 0
    found = [sorted(B) for B in bases(M)]
    _emit(args, {"matroid": str(M), "bases": found}, "\n".join(" ".join(map(str, B)) for B in found))
    return 0


def cmd_rank(args) -> int:
    M = from_spec(args.spec)
    subset = args.elements
    bad = [e for e in subset if not 1 <= e <= M.size]
    if bad:
        raise DomainError(f"elements {bad} outside the ground set [1..{M.size}]")
    r = rank(M, subset)
    _emit(args, {"matroid": str(M), "subset": sorted(subset), "rank": r}, str(r))
    return 0


def cmd_dual(args) -> int:
    D = dual(from_spec(args.spec))
    _emit(args, {"lower": D.lower.steps, "upper": D.upper.steps}, f"{D.lower.steps},{D.upper.steps}")
    return 0


def cmd_connected(args) -> int:
    limit = _limit(args, apps.CONNECTED_BRUTE_LIMIT) if args.brute else None
    n = apps.count_connected_lpm(args.size, brute=args.brute, limit=limit)
    _emit(args, {"elements": args.size, "count": str(n), "brute": args.brute}, str(n))
    return 0


def cmd_charpoly(args) -> int:
    M = from_spec(args.spec)
    coeffs = tutte.char_poly(M)
    _emit(args, {"matroid": str(M), "coefficients": [str(c) for c in coeffs]}, render_univariate(coeffs))
    return 0


def cmd_nbc(args) -> int:
    M = from_spec(args.spec)
    limit = _limit(args, oracle.ORACLE_LIMIT)
    if args.sizes:
        counts = nbc_size_counts(M, limit=limit)
        _emit(args, {"matroid": str(M), "sizes": counts}, " ".join(map(str, counts)))
        return 0
    found = [sorted(s) for s in nbc_sets(M, limit=limit)]
    _emit(args, {"matroid": str(M), "nbc": found}, "\n".join(" ".join(map(str, s)) or "{}" for s in found))
    return 0


def cmd_beta(args) -> int:
    M = from_spec(args.spec)
    b = tutte.beta(M)
    _emit(args, {"matroid": str(M), "beta": str(b)}, str(b))
    return 0


def cmd_formula(args) -> int:
    if args.name not in closedforms.FORMULAS:
        raise UsageError(f"unknown formula {args.name!r}; choose from {', '.join(sorted(closedforms.FORMULAS))}")
    func = closedforms.FORMULAS[args.name]
    try:
        value = func(*args.args)
    except TypeError as exc:
        raise UsageError(f"{args.name}: {exc}")
    _emit(args, {"formula": args.name, "args": args.args, "value": str(value)}, str(value))
    return 0


def cmd_gfcheck(args) -> int:
    series = tutte_gf_rhs(args.k, args.order)
    rows = []
    for n in range(args.order + 1):
        ok = series[n] == tutte.tutte_dp(k_catalan(args.k, n))
        rows.append({"n": n, "agree": ok})
    text = "\n".join(f"n={r['n']}: {'agree' if r['agree'] else 'MISMATCH'}" for r in rows)
    _emit(args, {"k": args.k, "order": args.order, "results": rows}, text)
    return 0 if all(r["agree"] for r in rows) else 3


def cmd_tennis(args) -> int:
    count = apps.tennis_ball_count(args.k, args.l, args.n)
    simulated = None
    if args.simulate:
        limit = _limit(args, apps.TENNIS_SIM_LIMIT)
        if limit is None or (args.k + args.l) * args.n <= limit:
            simulated = apps.simulate_tennis(args.k, args.l, args.n, limit=None)
    res = apps.TennisResult(count, simulated)
    if args.simulate and simulated is None:
        note = " (unverified by simulation)"
    elif args.simulate:
        note = " (simulation agrees)" if res.verified else f" (SIMULATION DISAGREES: {simulated})"
    else:
        note = ""
    data = {"count": str(count), "simulated": None if simulated is None else str(simulated)}
    _emit(args, data, f"{count}{note}")
    if simulated is not None and not res.verified:
        return 3
    return 0


def cmd_betaud(args) -> int:
    n = apps.betaud_path_count(args.k, args.n)
    if args.brute:
        other = apps.betaud_path_count_brute(args.k, args.n, limit=_limit(args, apps.BETAUD_ENUM_LIMIT))
        if other != n:
            raise ConsistencyError(f"path DP {n} disagrees with enumeration {other}")
    _emit(args, {"k": args.k, "n": args.n, "count": str(n)}, str(n))
    return 0


def cmd_verify(args) -> int:
    report = None if args.json else print
    results = verify.run(quick=args.quick, max_size=args.max_size, report=report)
    if args.json:
        rows = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        print(json.dumps(rows, sort_keys=True))
    return 0 if all(r.passed for r in results) else 1


def cmd_bench(args) -> int:
    rows = []
    for n in args.ns:
        M = kl_catalan(args.k, args.k, n)
        start = time.perf_counter()
        tutte.tutte_dp(M)
        rows.append((n, M.size, time.perf_counter() - start))
    if args.json:
        # timings vary run to run; only the sizes are stable
        print(json.dumps([{"n": n, "size": s, "seconds": round(t, 3)} for n, s, t in rows], sort_keys=True))
    else:
        print(f"{'n':>6} {'|E|':>6} {'seconds':>10}")
        for n, s, t in rows:
            print(f"{n:>6} {s:>6} {t:>10.3f}")
    return 0


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--text", action="store_false", dest="json", help="plain text output (default)")
    common.add_argument("--force", action="store_true", help="override oracle size guards")

    parser = _Parser(prog="latpath", description="Lattice path matroids and their Tutte polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("tutte", cmd_tutte, "Tutte polynomial of a family member")
    p.add_argument("spec")
    p.add_argument("--engine", choices=ENGINES, default="dp")
    p.add_argument("--eval", nargs=2, type=_rational, metavar=("X", "Y"))

    p = add("bases", cmd_bases, "list or count bases")
    p.add_argument("spec")
    p.add_argument("--count", action="store_true")

    p = add("rank", cmd_rank, "rank of a subset, e.g. 1,3,4")
    p.add_argument("spec")
    p.add_argument("elements", type=_int_list, nargs="?", default=[])

    p = add("dual", cmd_dual, "bounding paths of the dual")
    p.add_argument("spec")

    p = add("connected", cmd_connected, "connected lattice path matroids on SIZE elements")
    p.add_argument("size", type=int)
    p.add_argument("--brute", action="store_true")

    p = add("charpoly", cmd_charpoly, "characteristic polynomial")
    p.add_argument("spec")

    p = add("nbc", cmd_nbc, "nbc-sets")
    p.add_argument("spec")
    p.add_argument("--sizes", action="store_true", help="only the count per size")

    p = add("beta", cmd_beta, "beta invariant")
    p.add_argument("spec")

    p = add("formula", cmd_formula, "evaluate a closed-form count")
    p.add_argument("name")
    p.add_argument("args", type=int, nargs="*")

    p = add("gfcheck", cmd_gfcheck, "compare the generating function with the DP")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, default=6)

    p = add("tennis", cmd_tennis, "tennis ball count")
    for name in ("k", "l", "n"):
        p.add_argument(name, type=int)
    p.add_argument("--simulate", action="store_true")

    p = add("betaud", cmd_betaud, "U/D paths above the beta border")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--brute", action="store_true")

    p = add("verify", cmd_verify, "run the oracle-agreement suite")
    p.add_argument("--quick", action="store_true", help="exhaustive m+r <= 10 part only")
    p.add_argument("--max-size", type=int, default=10)

    p = add("bench", cmd_bench, "time the Tutte DP on M^{k,k}_n")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--ns", type=_int_list, default=[25, 50, 100, 200])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, ParsePathError) as exc:
        print(f"latpath: usage error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"latpath: internal consistency error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"latpath: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
