"""Command-line interface: ``pythgen analyze | pair | generate | sweep``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 the pair generates no integer triple.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import oracle
from .exact import DomainError
from .generators import (
    AnalysisReport,
    GeneratorPair,
    MixedRadicandError,
    NonIntegerSide,
    analyze,
    classify_pair,
    pair_from_leg,
    triple_from_pair,
)
from .identities import CHECK_NAMES
from .surdtext import ParseError, parse_value, render
from .triples import InvalidTriple, enumerate_triples, validate

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NON_INTEGER = 3

_INT64_MIN, _INT64_MAX = -(1 << 63), (1 << 63) - 1


def json_int(v: int) -> int | str:
    """Integers outside int64 become strings so no JSON reader loses digits."""
    return int(v) if _INT64_MIN <= v <= _INT64_MAX else str(v)


def _pair_json(p: GeneratorPair, kind=None) -> dict:
    out = {"x": render(p.x), "y": render(p.y)}
    if kind is not None:
        out["kind"] = kind.value
    out["source_leg"] = None if p.source_leg is None else json_int(p.source_leg)
    return out


def report_json(r: AnalysisReport) -> dict:
    t, d = r.triple, r.decomposition
    ids = r.identities
    violations = [
        oracle.ViolationRecord(t, name, expected, actual).as_dict()
        for name, (actual, expected) in ids.witnesses.items()
    ]
    for v in violations:
        v["triple"] = [json_int(s) for s in v["triple"]]
    return {
        "triple": [json_int(s) for s in t.sides()],
        "beta": json_int(d.beta),
        "primitive_part": [json_int(s) for s in (d.m, d.n, d.k)],
        "pairs": [_pair_json(p, k) for p, k in r.pairs],
        "scaled_pairs": [_pair_json(p, classify_pair(p)) for p in (r.scaled or ())],
        "identities": ids.as_dict(),
        "printed_orientation": {
            "quartic_sum": ids.printed_quartic_sum,
            "quartic_diff": ids.printed_quartic_diff,
        },
        "violations": violations,
    }


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _err(msg: str) -> None:
    print(f"pythgen: {msg}", file=sys.stderr)


def _yes(ok: bool) -> str:
    return "true" if ok else "false"


def _print_report(r: AnalysisReport) -> None:
    t, d = r.triple, r.decomposition
    print(f"triple      {t}")
    print(f"beta        {d.beta}   primitive part {d.m} {d.n} {d.k}")
    rows = [(f"leg {p.source_leg}", p, k) for p, k in r.pairs]
    if r.scaled:
        rows += [(f"scaled {p.source_leg}", p, classify_pair(p)) for p in r.scaled]
    wx = max(len(render(p.x)) for _, p, _ in rows)
    wy = max(len(render(p.y)) for _, p, _ in rows)
    for label, p, k in rows:
        print(f"{label:<11} x = {render(p.x):<{wx}}  y = {render(p.y):<{wy}}  {k.value}")
    print("identities")
    for name, ok in r.identities.as_dict().items():
        print(f"  {name:<22} {_yes(ok)}")
    print(
        "printed orientation  (x1+y1)^4 = 4 x2^4: "
        f"{_yes(r.identities.printed_quartic_sum)}, "
        f"(y1-x1)^4 = 4 y2^4: {_yes(r.identities.printed_quartic_diff)}"
    )
    for name, (actual, expected) in r.identities.witnesses.items():
        print(f"  FAILED {name}: got {actual}, expected {expected}")


def run_analyze(args: argparse.Namespace) -> int:
    a, b, c = sorted(args.sides)
    try:
        t = validate(a, b, c)
    except InvalidTriple as e:
        _err(str(e))
        return EXIT_USAGE
    report = analyze(t)
    if args.json:
        print(_dump(report_json(report)))
    else:
        _print_report(report)
    return EXIT_OK if report.identities.all_hold else EXIT_VERIFY_FAILED


def run_pair(args: argparse.Namespace) -> int:
    try:
        x, y = parse_value(args.x), parse_value(args.y)
        pair = GeneratorPair.ordered(x, y)
    except (ParseError, DomainError, MixedRadicandError, ValueError) as e:
        _err(str(e))
        return EXIT_USAGE
    try:
        t = triple_from_pair(pair)
    except NonIntegerSide as e:
        _err(str(e))
        return EXIT_NON_INTEGER
    if args.json:
        print(_dump({"pair": _pair_json(pair), "triple": [json_int(s) for s in t.sides()]}))
    else:
        print(t)
    return EXIT_OK


def run_generate(args: argparse.Namespace) -> int:
    for t in enumerate_triples(args.max_c, args.primitive_only):
        kinds = [classify_pair(pair_from_leg(t, leg)).value for leg in t.legs]
        if args.json:
            print(_dump({"triple": [json_int(s) for s in t.sides()], "kinds": kinds}))
        else:
            print(t, *kinds)
    return EXIT_OK


def run_sweep(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    res = oracle.sweep(args.max_c, args.jobs)
    elapsed = time.perf_counter() - start
    if args.json:
        print(_dump({
            "max_c": json_int(res.max_hyp),
            "triples": res.triple_count,
            "checks": res.pass_counts,
            "violations": [v.as_dict() for v in res.violations],
        }))
    else:
        print(f"max-c       {res.max_hyp}")
        print(f"triples     {res.triple_count}")
        print(f"violations  {len(res.violations)}")
        for name, n in res.pass_counts.items():
            print(f"  {name:<22} {n}/{res.triple_count}")
        for v in res.violations:
            print(f"  VIOLATION {v.triple} {v.check_name}: expected {v.expected}, got {v.actual}")
    # timing goes to stderr so stdout stays identical across --jobs values
    print(f"elapsed {elapsed:.3f} s", file=sys.stderr)
    return EXIT_OK if res.clean else EXIT_VERIFY_FAILED


def _max_c(text: str) -> int:
    n = int(text)
    if n < 5:
        raise argparse.ArgumentTypeError(f"--max-c must be at least 5, got {n}")
    return n


def _jobs(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"--jobs must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pythgen",
        description="Generator pairs of Pythagorean triples, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="both generator pairs of a triple and the identity checks")
    p.add_argument("sides", nargs=3, type=int, metavar="SIDE", help="three sides in any order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_analyze)

    p = sub.add_parser("pair", help="the triple generated by a pair (2xy, y^2-x^2, x^2+y^2)")
    p.add_argument("x", help="value such as 7, 3/2, sqrt(12) or 3/2*sqrt(2)")
    p.add_argument("y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_pair)

    p = sub.add_parser("generate", help="list triples up to a hypotenuse bound")
    p.add_argument("--max-c", type=_max_c, required=True)
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_generate)

    p = sub.add_parser("sweep", help="verify every relation on every triple up to a bound")
    p.add_argument("--max-c", type=_max_c, required=True)
    p.add_argument("--jobs", type=_jobs, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
