"""``zarlab`` command line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import suites
from .dehn import decide, verify_trace
from .presentation import (
    PresentationParams,
    check_metric_condition,
    load_presentation,
    max_piece_length,
    relator,
)
from .word_maps import eval_group, parse_polynomial
from .words import ParseError, parse_word, render_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    try:
        value = Fraction(int(num), int(den)) if sep else Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected <p>/<q>, got {text!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print one JSON object per suite")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing; rely on the exit code")

    parser = argparse.ArgumentParser(prog="zarlab", parents=[common],
                                     description="Small cancellation and word-map toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relator", parents=[common], help="print the relator w_i")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--index", type=int, required=True)

    p = sub.add_parser("sc-check", parents=[common], help="piece analysis and C'(lambda) check")
    p.add_argument("--k", type=int)
    p.add_argument("--max-index", type=int)
    p.add_argument("--lambda", dest="lam", type=_fraction)
    p.add_argument("--presentation")

    p = sub.add_parser("solve", parents=[common], help="decide whether a word is trivial")
    p.add_argument("--k", type=int)
    p.add_argument("--presentation")
    p.add_argument("--word", required=True)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("eval", parents=[common], help="evaluate a word map at a point")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--at", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)
    p = vsub.add_parser("theorem", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p = vsub.add_parser("lemma-decomposition", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p = vsub.add_parser("density", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p = vsub.add_parser("dehn", parents=[common])
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p = vsub.add_parser("word-core", parents=[common])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=10_000)

    sgp = sub.add_parser("sgp", help="monomial semigroup with zero")
    ssub = sgp.add_subparsers(dest="suite", required=True)
    p = ssub.add_parser("verify-example", parents=[common])
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    return parser


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "quiet", False):
        return
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _report(args, report: suites.SuiteReport) -> int:
    _emit(args, report.summary(), report.as_dict())
    return EXIT_OK if report.ok else EXIT_FAIL


def _params(k: int | None) -> PresentationParams:
    if k is None:
        raise UsageError("--k is required")
    try:
        return PresentationParams(k)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _cmd_relator(args) -> int:
    w = relator(_params(args.k), args.index)
    _emit(args, render_word(w), {"k": args.k, "index": args.index, "word": render_word(w)})
    return EXIT_OK


def _cmd_sc_check(args) -> int:
    if args.presentation:
        pres = load_presentation(args.presentation)
        lam = args.lam if args.lam is not None else Fraction(1, 6)
        report = suites.SuiteReport("sc-check", {"presentation": args.presentation, "lambda": str(lam)})
        with suites.timed(report):
            if len(pres.words) >= 2:
                longest, witness = max_piece_length(pres)
                report.details["max_piece_length"] = longest
                if witness:
                    report.details["witness"] = [pres.render(w) for w in witness]
            report.details["members"] = len(pres.words)
            report.record(check_metric_condition(pres, lam), {"check": f"C'({lam})"})
        return _report(args, report)
    if args.max_index is None:
        raise UsageError("sc-check needs --k and --max-index, or --presentation")
    _params(args.k)
    return _report(args, suites.run_sc_check(args.k, args.max_index, args.lam))


def _cmd_solve(args) -> int:
    if args.presentation:
        system = load_presentation(args.presentation)
        word = system.parse(args.word)
        show = system.render
    else:
        system = _params(args.k)
        word = parse_word(args.word)
        show = render_word
    verdict, trace = decide(word, system)
    lines = [verdict.value]
    if args.trace:
        lines += [step.render() for step in trace.steps]
    payload = {
        "word": show(word),
        "verdict": verdict.value,
        "final": show(trace.final),
        "trace_verified": verify_trace(trace, system),
    }
    if args.trace:
        payload["trace"] = trace.as_dicts()
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _cmd_eval(args) -> int:
    params = _params(args.k)
    poly = parse_polynomial(args.poly)
    at = parse_word(args.at)
    value = eval_group(poly, at)
    verdict, _ = decide(value, params)
    _emit(args, f"{render_word(value)}\n{verdict.value}",
          {"poly": str(poly), "at": render_word(at), "value": render_word(value), "verdict": verdict.value})
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite not in ("word-core",):
        _params(args.k)
    if args.suite == "theorem":
        report = suites.run_theorem_check(args.k, args.max_index)
    elif args.suite == "lemma-decomposition":
        report = suites.run_lemma_decomposition_suite(args.k, args.m, args.trials, args.seed, args.max_len)
    elif args.suite == "density":
        report = suites.run_density_suite(args.k, args.trials, args.seed)
    elif args.suite == "dehn":
        report = suites.run_dehn_suite(args.k, args.seed)
    else:
        report = suites.run_word_core_suite(args.seed, args.cases)
    return _report(args, report)


def _cmd_sgp(args) -> int:
    return _report(args, suites.run_example_suite(args.trials, args.seed, args.max_index))


COMMANDS = {
    "relator": _cmd_relator,
    "sc-check": _cmd_sc_check,
    "solve": _cmd_solve,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "sgp": _cmd_sgp,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, ValueError, OSError) as err:
        print(f"zarlab: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
