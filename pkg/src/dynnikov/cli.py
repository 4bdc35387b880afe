"""Command line front end.

Coordinates are written ``a_1,...,a_{n-2};b_1,...,b_{n-2}``; prefix with
``extended`` for extended coordinates.  When the coordinate argument is
omitted (or ``-``), one coordinate vector per line is read from stdin.

Exit status: 0 on success, 2 for bad input, 3 for an internal
inconsistency (divergence, inconsistent diagram, integer budget exceeded).
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Iterator, Sequence

from . import bench
from .braid import apply_word, parse_word
from .coords import DynnikovCoordinates, alpha_numbers, beta_numbers, format_coordinates, parse_coordinates
from .errors import BadShape, InputError, InternalError
from .reduction import count_components
from .tracer import curve_diagram, oracle_count

EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1,-2;3,4" and "-2 1" through as positional values
        self._negative_number_matcher = re.compile(r"^-\d")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in re.split(r"[\s,]+", text.strip()) if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _coordinate_lines(arg: str | None) -> Iterator[str]:
    if arg is not None and arg != "-":
        yield arg
        return
    for line in sys.stdin:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def cmd_count(args) -> int:
    for text in _coordinate_lines(args.coords):
        count, trace = count_components(parse_coordinates(text), trace=args.trace)
        if args.trace:
            for line in trace.lines():
                print(line)
        print(count)
    return 0


def cmd_oracle_count(args) -> int:
    for text in _coordinate_lines(args.coords):
        c = parse_coordinates(text)
        if args.dump:
            print(curve_diagram(c).dump())
        print(oracle_count(c))
    return 0


def cmd_apply(args) -> int:
    for text in _coordinate_lines(args.coords):
        c = parse_coordinates(text)
        word = parse_word(args.braid)
        print(format_coordinates(apply_word(c, word), marker=True))
    return 0


def cmd_reconstruct(args) -> int:
    for text in _coordinate_lines(args.coords):
        c = parse_coordinates(text)
        if not isinstance(c, DynnikovCoordinates):
            c = c.as_standard()
        beta = beta_numbers(c)
        alpha = alpha_numbers(c, beta)
        print("beta: " + ",".join(map(str, beta)))
        print("alpha: " + ",".join(map(str, alpha)))
    return 0


def cmd_random(args) -> int:
    if args.range < 1:
        raise BadShape("--range must be >= 1")
    if args.n < 3:
        raise BadShape("--n must be >= 3")
    for c in bench.random_corpus(args.n, args.range, args.samples, args.seed):
        print(format_coordinates(c))
    return 0


def cmd_bench(args) -> int:
    try:
        config = bench.BenchConfig(args.n, args.range, args.samples, args.seed, args.warmup)
    except ValueError as exc:
        raise BadShape(str(exc)) from None
    rows = bench.run_bench(config)
    # keep stdout pure CSV when the CSV goes there
    print(bench.format_table(rows), file=sys.stderr if args.csv == "-" else sys.stdout)
    if args.csv:
        if args.csv == "-":
            bench.write_csv(rows, sys.stdout)
        else:
            with open(args.csv, "w", newline="") as fh:
                bench.write_csv(rows, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dynnikov", description="Count components of integral laminations from Dynnikov coordinates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("count", help="count components with the reduction algorithm")
    s.add_argument("coords", nargs="?")
    s.add_argument("--trace", action="store_true", help="print every move before the count")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("oracle-count", help="count components by tracing the curve diagram")
    s.add_argument("coords", nargs="?")
    s.add_argument("--dump", action="store_true", help="print the per-point matchings first")
    s.set_defaults(func=cmd_oracle_count)

    s = sub.add_parser(
        "apply",
        help="apply a braid word",
        description="Apply a braid word. k is sigma_k, -k its inverse; generators act left to right "
        "(the first listed acts first).",
    )
    s.add_argument("coords", help="coordinates, or - to read lines from stdin")
    s.add_argument("braid", nargs="?", default="")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("reconstruct", help="print the beta and alpha intersection numbers")
    s.add_argument("coords", nargs="?")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("random", help="print random coordinate vectors")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--range", type=int, default=10)
    s.add_argument("--samples", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("bench", help="time the reduction on random coordinates")
    s.add_argument("--n", type=_int_list, default=[10])
    s.add_argument("--range", type=_int_list, default=[10])
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--warmup", type=int, default=10)
    s.add_argument("--csv", help="write CSV to this path (- for stdout)")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
