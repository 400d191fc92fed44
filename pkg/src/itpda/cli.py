"""Command-line interface.

Exit codes: 0 on success / accepted, 1 on rejected or failed, 2 on usage
errors.  Word arguments accept ``@path`` to read the word from a file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .automata import (
    ContourParams,
    accepts_contour_exact,
    accepts_fibonacci_exact,
)
from .engine import (
    NoAcceptingRunError,
    Verdict,
    parse_automaton,
    run,
    trace_accepting,
)
from .fib import fib_index
from .grammars import Grammar, contour_word
from .words import (
    letter_at,
    uw_pair,
    xy_pair,
    zeckendorf_decode,
    zeckendorf_encode,
)
from .disc import RenderOptions, generate_tiles, to_svg

_MATERIALIZE_LIMIT = 25  # words beyond this index must be queried by --index


def _word_arg(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text().strip()
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="itpda",
        description="Iterated pushdown automata, tessellation grammars and contour words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="decide whether a^M is accepted (M Fibonacci)")
    p.add_argument("m", type=int)

    p = sub.add_parser("run", help="run a definition file on a word")
    p.add_argument("file", type=Path)
    p.add_argument("word", type=_word_arg)
    p.add_argument("--fuel", type=int, default=1_000_000)
    p.add_argument("--cap", type=int, default=None, help="total store entry cap")
    p.add_argument("--flag-cap", type=int, default=None, help="inner store length cap")
    p.add_argument("--trace", action="store_true", help="print the witness path")

    p = sub.add_parser("contour", help="emit or decide ball contour words")
    p.add_argument("--tree-p", type=int, required=True)
    p.add_argument("--sectors", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--radius", type=int)
    mode.add_argument("--check", type=_word_arg)

    p = sub.add_parser("words", help="recurrence word pairs")
    p.add_argument("family", choices=("uw", "xy"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--index",
        type=int,
        default=None,
        help="print one separator-relative letter instead of the words",
    )

    p = sub.add_parser("zeck", help="Zeckendorf codes")
    zsub = p.add_subparsers(dest="zeck_command", required=True)
    enc = zsub.add_parser("encode")
    enc.add_argument("m", type=int)
    dec = zsub.add_parser("decode")
    dec.add_argument("bits")

    p = sub.add_parser("render", help="render a {p,q} tiling to SVG")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--highlight", type=int, default=None)
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", dest="as_json")

    return parser


def run_command(argv: list[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args, parser)
    except (ValueError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args, parser) -> int:
    if args.command == "fib":
        if args.m < 0:
            parser.error("m must be >= 0")
        if accepts_fibonacci_exact(args.m) is Verdict.ACCEPTED:
            print(f"accepted (f_{fib_index(args.m)} = {args.m})")
            return 0
        print("rejected")
        return 1

    if args.command == "run":
        automaton = parse_automaton(args.file.read_text())
        if args.trace:
            try:
                path = trace_accepting(
                    automaton,
                    args.word,
                    fuel=args.fuel,
                    store_cap=args.cap,
                    flag_cap=args.flag_cap,
                )
            except NoAcceptingRunError as exc:
                print(f"rejected: {exc}", file=sys.stderr)
                return 1
            for c in path:
                print(c)
            print("accepted")
            return 0
        outcome = run(
            automaton,
            args.word,
            fuel=args.fuel,
            store_cap=args.cap,
            flag_cap=args.flag_cap,
            keep_trace=False,
        )
        print(outcome.verdict.value)
        return 0 if outcome.verdict is Verdict.ACCEPTED else 1

    if args.command == "contour":
        cp = ContourParams(args.tree_p, args.sectors)
        if args.radius is not None:
            if args.radius < 0:
                parser.error("radius must be >= 0")
            print(contour_word(Grammar(cp.tree_p, cp.sectors), args.radius))
            return 0
        verdict = accepts_contour_exact(cp, args.check)
        print(verdict.value)
        return 0 if verdict is Verdict.ACCEPTED else 1

    if args.command == "words":
        if args.n < 0:
            parser.error("n must be >= 0")
        if args.index is not None:
            print(letter_at(args.family, args.n, args.index))
            return 0
        if args.n > _MATERIALIZE_LIMIT:
            parser.error(
                f"n > {_MATERIALIZE_LIMIT} words are too large to print; use --index"
            )
        pair = uw_pair(args.n) if args.family == "uw" else xy_pair(args.n)
        first, second = ("u", "w") if args.family == "uw" else ("x", "y")
        print(f"{first}{pair.n} {pair.first}")
        print(f"{second}{pair.n} {pair.second}")
        return 0

    if args.command == "zeck":
        if args.zeck_command == "encode":
            print(zeckendorf_encode(args.m))
        else:
            print(zeckendorf_decode(args.bits))
        return 0

    if args.command == "render":
        tiles = generate_tiles(args.p, args.q, args.depth)
        svg = to_svg(tiles, RenderOptions(size=args.size, highlight=args.highlight))
        args.out.write_text(svg)
        print(f"{args.out}: {len(tiles)} tiles")
        return 0

    if args.command == "verify":
        results = checks.run_all(quick=args.quick, seed=args.seed)
        if args.as_json:
            records = [
                {
                    "property": r.name,
                    "status": "pass" if r.passed else "fail",
                    "details": r.details,
                }
                for r in results
            ]
            print(json.dumps(records, indent=2))
        else:
            for r in results:
                mark = "PASS" if r.passed else "FAIL"
                print(f"{mark}  {r.name:<28} {r.seconds:7.2f}s  {r.details}")
            passed = sum(r.passed for r in results)
            print(f"{passed}/{len(results)} properties passed")
        return 0 if all(r.passed for r in results) else 1

    parser.error(f"unknown command {args.command!r}")  # pragma: no cover
    return 2  # pragma: no cover


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
