"""Command-line front end: ``ecctree {compute,enum,extremal,verify,bench}``.

Exit codes: 0 success, 1 a verification FAIL (or an ERRATUM not listed as
expected), 2 usage or input error, 3 empty tree class.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from . import families
from .descriptor import eccentricities_linear, xi_linear, xi_oracle
from .enumeration import ClassFilter, filtered_trees
from .errors import EccTreeError, EmptyClassError
from .extremal import CLAIMS, DEFAULT_EXPECTED_ERRATA, extremal_search, verify_claim, verify_table1
from .table1 import TABLE1_ROWS
from .tree_core import ecc_profile_oracle, parse_tree, serialize_forest, serialize_tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EMPTY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _family_tree(args):
    kind, n = args.family, args.n
    need = {
        "path": ("n",),
        "star": ("n",),
        "broom": ("n", "delta"),
        "second_broom": ("n", "delta"),
        "matching_tree": ("n", "delta"),
        "volkmann": ("n", "delta"),
        "balanced_starlike": ("n", "p"),
        "diameter_tree": ("n", "d"),
        "starlike": ("legs",),
    }[kind]
    missing = [f"--{k.replace('_', '-')}" for k in need if getattr(args, k) is None]
    if missing:
        raise UsageError(f"family {kind} needs {', '.join(missing)}")
    if kind == "starlike":
        return families.starlike(args.legs)
    if kind == "diameter_tree":
        return families.diameter_tree(n, args.d, args.at_floor)
    if kind == "balanced_starlike":
        return families.balanced_starlike(n, args.p)
    if len(need) == 2:
        return families.build(kind, n, args.delta)
    return families.build(kind, n)


def _load_tree(args):
    if (args.file is None) == (args.family is None):
        raise UsageError("give exactly one of --file or --family")
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                return parse_tree(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return _family_tree(args)


def _filter_from(args):
    return ClassFilter(
        max_degree=args.max_deg,
        max_degree_at_most=args.max_deg_at_most,
        pendant_count=args.pendants,
        radius=args.radius,
        diameter=args.diameter,
        perfect_matching=True if args.perfect_matching else None,
    )


def _emit(args, payload, text_lines):
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_compute(args):
    t = _load_tree(args)
    prof = eccentricities_linear(t)
    xi = xi_linear(t)
    payload = {
        "n": t.n,
        "xi_c": xi,
        "radius": prof.radius,
        "diameter": prof.diameter,
        "center": list(prof.center),
    }
    lines = [f"n = {t.n}", f"xi_c = {xi}", f"radius = {prof.radius}", f"diameter = {prof.diameter}",
             f"center = {' '.join(map(str, prof.center))}"]
    if args.oracle:
        slow = xi_oracle(t)
        slow_prof = ecc_profile_oracle(t)
        agree = slow == xi and slow_prof == prof
        payload.update(method="oracle", xi_c=slow, linear_xi_c=xi, agree=agree)
        lines[1] = f"xi_c = {slow} (oracle; linear {xi}, {'agree' if agree else 'DISAGREE'})"
    if args.profile:
        payload["ecc"] = list(prof.ecc)
        payload["deg"] = list(t.degrees)
        lines.append("vertex deg ecc")
        lines += [f"{v} {d} {e}" for v, (d, e) in enumerate(zip(t.degrees, prof.ecc))]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_enum(args):
    f = _filter_from(args)
    trees = filtered_trees(args.n, f, force=args.force)
    keep = args.emit is not None or not args.count_only
    found = []
    count = 0
    for t in trees:
        count += 1
        if keep:
            found.append(t)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(serialize_forest(found))
    payload = {"n": args.n, "filter": f.as_dict(), "count": count}
    if args.json:
        if not args.count_only:
            payload["trees"] = [serialize_tree(t) for t in found]
        _emit(args, payload, [])
    elif args.count_only:
        print(count)
    else:
        sys.stdout.write(serialize_forest(found) if found else "")
        print(f"count = {count}", file=sys.stderr)
    return EXIT_OK


def cmd_extremal(args):
    f = _filter_from(args)
    report = extremal_search(args.n, f, args.objective, witnesses=args.witnesses, workers=args.threads,
                             force=args.force)
    lines = [f"{args.objective} xi_c = {report.value} attained by {report.count} tree(s)"]
    for t in report.witnesses:
        lines += ["", serialize_tree(t)]
    _emit(args, report.to_json(), lines)
    return EXIT_OK


def cmd_verify(args):
    expected = set(args.expect_errata)
    verdicts = []
    names = list(CLAIMS) if args.claim == "all" else [args.claim]
    if args.claim in ("table1", "all"):
        rows = [n for n in TABLE1_ROWS if args.max_n is None or n <= args.max_n]
        verdicts += verify_table1(rows, workers=args.threads)
        if args.claim == "table1":
            names = []
    for name in names:
        verdicts.append(verify_claim(name, max_n=args.max_n, workers=args.threads))
    failed = [v for v in verdicts if v.status == "FAIL" or (v.status == "ERRATUM" and v.claim not in expected)]
    if args.json:
        _emit(args, {"verdicts": [v.to_json() for v in verdicts], "ok": not failed}, [])
    else:
        for v in verdicts:
            print(f"{v.status:8} {v.claim}: {v.details}")
        counts = {s: sum(v.status == s for v in verdicts) for s in ("PASS", "ERRATUM", "FAIL")}
        print(", ".join(f"{k} {c}" for k, c in counts.items()))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args):
    if args.family == "path":
        t = families.path(args.n)
    elif args.family == "volkmann":
        t = families.volkmann(args.n, args.delta)
    else:
        t = families.broom(args.n, args.delta)
    times = []
    value = None
    for _ in range(args.repeat):
        start = time.perf_counter()
        value = xi_linear(t)
        times.append(time.perf_counter() - start)
    payload = {"family": args.family, "n": args.n, "repeat": args.repeat, "xi_c": value,
               "median_seconds": statistics.median(times), "seconds": times}
    lines = [f"{args.family} n={args.n}: xi_c = {value}, linear median {statistics.median(times):.4f}s "
             f"over {args.repeat} run(s)"]
    if args.compare_oracle:
        if args.n > 4000:
            raise UsageError("--compare-oracle is limited to n <= 4000")
        start = time.perf_counter()
        slow = xi_oracle(t)
        elapsed = time.perf_counter() - start
        payload.update(oracle_xi_c=slow, oracle_seconds=elapsed, agree=slow == value)
        lines.append(f"oracle: xi_c = {slow} in {elapsed:.4f}s ({'agree' if slow == value else 'DISAGREE'})")
    _emit(args, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_filter_flags(p):
    p.add_argument("--max-deg", type=int, help="maximum degree equal to D")
    p.add_argument("--max-deg-at-most", type=int, help="maximum degree at most D")
    p.add_argument("--pendants", type=int, help="number of pendant vertices")
    p.add_argument("--radius", type=int)
    p.add_argument("--diameter", type=int)
    p.add_argument("--perfect-matching", action="store_true", help="only trees with a perfect matching")
    p.add_argument("--force", action="store_true", help="allow n above the enumeration cap")


def build_parser():
    parser = argparse.ArgumentParser(prog="ecctree", description="Eccentric connectivity index of trees.")
    parser.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="xi_c of one tree")
    p.add_argument("--file", help="edge-list file")
    p.add_argument("--family", choices=families.FAMILY_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--legs", type=_int_list)
    p.add_argument("--d", type=int, help="diameter for diameter_tree")
    p.add_argument("--p", type=int, help="pendant count for balanced_starlike")
    p.add_argument("--at-floor", type=int, default=0, help="pendants on the lower middle spine vertex")
    p.add_argument("--oracle", action="store_true", help="use the quadratic method and compare")
    p.add_argument("--profile", action="store_true", help="per-vertex degree and eccentricity")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enum", help="enumerate a tree class")
    p.add_argument("--n", type=int, required=True)
    _add_filter_flags(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit", metavar="PATH", help="write the trees as blank-line separated edge lists")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("extremal", help="min or max xi_c over a tree class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", choices=("min", "max"), required=True)
    _add_filter_flags(p)
    p.add_argument("--witnesses", type=int, default=5)
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="check the published claims by enumeration")
    p.add_argument("--claim", required=True, choices=("table1", "all", *CLAIMS))
    p.add_argument("--max-n", type=int)
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--expect-errata", type=lambda s: [x for x in s.split(",") if x],
                   default=list(DEFAULT_EXPECTED_ERRATA),
                   help="comma-separated claims whose ERRATUM verdict does not fail the run")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the linear method")
    p.add_argument("--family", choices=("path", "volkmann", "broom"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--compare-oracle", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    # accept --json after the subcommand too
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--json" in argv:
        argv = ["--json"] + [a for a in argv if a != "--json"]
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptyClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except (EccTreeError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
