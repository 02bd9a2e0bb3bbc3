"""Command line: ``monocurve {analyze,survey,family,lemma,betti}``.

Exit codes: 0 ok, 1 bound violated (or a failed check), 2 bad input,
3 effort cap exceeded, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import EffortCaps
from .errors import EffortCapExceeded, InputError, MonocurveError
from .extremal import (
    bound,
    check_extremal_consequences,
    extremal_family,
    lemma_min_product,
    verify_theorem,
)
from .monomideal import MonomialIdeal, betti_koszul, betti_lcm
from .semigroup import parse_semigroup
from .survey import run_survey

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _caps(args) -> EffortCaps:
    base = EffortCaps.from_env()
    return EffortCaps(
        max_pairs=args.max_pairs if args.max_pairs is not None else base.max_pairs,
        max_degree=args.max_degree if args.max_degree is not None else base.max_degree,
    )


def _embdim_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        vals = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad embdim range {text!r}") from exc
    if not vals or vals[0] < 2:
        raise argparse.ArgumentTypeError("embdim must be >= 2")
    return vals


def cmd_analyze(args) -> int:
    S = parse_semigroup(args.semigroup)
    report = verify_theorem(S, _caps(args), betti=args.betti)
    cons = check_extremal_consequences(S, _caps(args)) if args.consequences and report.extremal else None
    if args.json:
        payload = report.to_dict()
        if cons is not None:
            payload["consequences"] = cons.to_dict()
        print(json.dumps(payload))
    else:
        print(report.summary())
        if cons is not None:
            print(cons.format())
        elif args.consequences:
            print("not extremal: consequence checks skipped")
    if not report.theorem_ok:
        return EXIT_VIOLATION
    return EXIT_OK if cons is None or cons.passed else EXIT_VIOLATION


def cmd_survey(args) -> int:
    rows, summary = run_survey(args.embdim, args.max_gen, args.out, args.cache, args.jobs, _caps(args))
    print(summary.format())
    if args.out:
        print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_VIOLATION if summary.violations or summary.gap_failures else EXIT_OK


def cmd_family(args) -> int:
    S = extremal_family(args.c, args.d)
    print(f"<{S}>  e = bound({args.c}, {args.d}) = {bound(args.c, args.d)}")
    if not args.check:
        return EXIT_OK
    cons = check_extremal_consequences(S, _caps(args))
    print(json.dumps(cons.to_dict(), indent=2) if args.json else cons.format())
    return EXIT_OK if cons.passed else EXIT_VIOLATION


def cmd_lemma(args) -> int:
    c, d = args.c, args.d
    lemma_sums = {(c - 1) * d: ("(d-1)d^(c-2)", (d - 1) * d ** (c - 2)),
                  (c - 1) * d + 1: ("d^(c-1)", d ** (c - 1))}
    print(f"{'sum':>5} {'min':>8}  argmin")
    ok = True
    for s in range(c, c * d + 1):
        res = lemma_min_product(c, d, s)
        arg = " ".join("{" + ",".join(map(str, a)) + "}" for a in res.argmins)
        line = f"{s:>5} {res.minimum:>8}  {arg}"
        if s in lemma_sums:
            name, val = lemma_sums[s]
            good = res.minimum == val if s == (c - 1) * d else res.minimum >= val
            ok &= good
            line += f"   <- {name} = {val} {'ok' if good else 'MISMATCH'}"
        print(line)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_betti(args) -> int:
    names = args.names.split(",") if args.names else None
    L = MonomialIdeal.parse(args.ideal, args.vars, names)
    table = betti_lcm(L)
    if betti_koszul(L) != table:
        raise MonocurveError("lcm-lattice and Koszul Betti numbers disagree")
    print(table.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monocurve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def caps_flags(sp):
        sp.add_argument("--max-pairs", type=int, default=None, help="S-pair cap (env MONOCURVE_MAX_PAIRS)")
        sp.add_argument("--max-degree", type=int, default=None, help="degree cap (env MONOCURVE_MAX_DEGREE)")

    a = sub.add_parser("analyze", help="analyze one semigroup, e.g. 3,4,5")
    a.add_argument("semigroup")
    a.add_argument("--json", action="store_true")
    a.add_argument("--betti", action="store_true", help="include Betti totals of the leading ideal")
    a.add_argument("--consequences", action="store_true", help="run the equality-case checks")
    caps_flags(a)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("survey", help="analyze all semigroups in a range")
    s.add_argument("--embdim", type=_embdim_range, required=True, help="e.g. 3 or 3..5")
    s.add_argument("--max-gen", type=int, required=True)
    s.add_argument("--out", type=Path, default=None, help="CSV output path")
    s.add_argument("--cache", type=Path, default=None, help="JSONL cache path")
    s.add_argument("--jobs", type=int, default=1)
    caps_flags(s)
    s.set_defaults(func=cmd_survey)

    f = sub.add_parser("family", help="semigroup attaining the bound for (c, d)")
    f.add_argument("--c", type=int, required=True)
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--check", action="store_true")
    f.add_argument("--json", action="store_true")
    caps_flags(f)
    f.set_defaults(func=cmd_family)

    lm = sub.add_parser("lemma", help="exhaustive minimum products for (c, d)")
    lm.add_argument("--c", type=int, required=True)
    lm.add_argument("--d", type=int, required=True)
    lm.set_defaults(func=cmd_lemma)

    b = sub.add_parser("betti", help="Betti table of P/L for a monomial ideal")
    b.add_argument("ideal", help='e.g. "x1^2,x1*x2,x2^2"')
    b.add_argument("--vars", type=int, required=True)
    b.add_argument("--names", default=None, help="comma-separated variable names")
    b.set_defaults(func=cmd_betti)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except EffortCapExceeded as exc:
        print(f"effort cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MonocurveError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
