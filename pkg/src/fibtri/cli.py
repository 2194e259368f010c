"""Command-line entry point: ``fibtri <verb> [options]``.

Exit status: 0 all checks pass, 1 verification failure, 2 usage error,
3 resource exhaustion.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from typing import Iterable, Sequence

from .delannoy import count_restricted_delannoy
from .fibfacts import fib
from .identities import se_difference_table
from .polyfit import DegreeMismatchError, diagonal_polynomial
from .triangles import even_table, odd_table
from .verify import ResourceExhausted, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCES = 0, 1, 2, 3


class OutputFormat(enum.Enum):
    PRETTY = "pretty"
    CSV = "csv"
    JSON = "json"
    BFILE = "bfile"


_FAMILY_SPELLINGS = {
    "d": "d", "d'": "d'", "d''": "d''", "d′": "d'", "d″": "d''",
    "prime": "d'", "double": "d''",
}


class UsageError(Exception):
    pass


def render_rows(label: str, rows: Sequence[Sequence[int]], fmt: OutputFormat) -> str:
    """Render a triangular array.  BFILE indexes entries row-major, leftmost first, from 1."""
    if fmt is OutputFormat.PRETTY:
        return "".join(" ".join(map(str, r)) + "\n" for r in rows)
    if fmt is OutputFormat.CSV:
        return "".join(f"{t},{i},{v}\n" for t, r in enumerate(rows) for i, v in enumerate(r))
    if fmt is OutputFormat.BFILE:
        flat = (v for r in rows for v in r)
        return "".join(f"{n} {v}\n" for n, v in enumerate(flat, start=1))
    doc = {
        "kind": label,
        "max_row": len(rows) - 1,
        "entries": [{"t": t, "i": i, "value": str(v)} for t, r in enumerate(rows) for i, v in enumerate(r)],
    }
    return json.dumps(doc, indent=1) + "\n"


def parse_csv_rows(text: str) -> list[list[int]]:
    """Inverse of the CSV rendering."""
    rows: list[list[int]] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        t, i, v = (int(x) for x in line.split(","))
        if t == len(rows):
            rows.append([])
        if t != len(rows) - 1 or i != len(rows[t]):
            raise ValueError(f"out-of-order entry {line!r}")
        rows[t].append(v)
    return rows


def render_scalar(name: str, arg: int, value, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps({"verb": name, "n": arg, "value": str(value)}) + "\n"
    if fmt is OutputFormat.CSV:
        return f"{arg},{value}\n"
    if fmt is OutputFormat.BFILE:
        return f"{arg} {value}\n"
    return f"{value}\n"


def _scalar_arg(args, default=None) -> int:
    n = args.n if args.n is not None else args.pos_n
    if n is None:
        n = default
    if n is None:
        raise UsageError(f"{args.verb}: missing n (positional or --n)")
    return n


def cmd_triangle(args) -> tuple[str, int]:
    if args.rows < 0:
        raise UsageError("--rows must be >= 0")
    tbl = even_table(args.rows) if args.kind == "even" else odd_table(args.rows)
    return render_rows(args.kind, tbl.rows, args.format), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.rows < 0:
        raise UsageError("--rows must be >= 0")
    n_max = args.n if args.n is not None else min(12, args.rows // 2)
    if n_max < 0:
        raise UsageError("--n must be >= 0")
    report = run_verification(args.rows, n_max)
    if args.format is OutputFormat.JSON:
        text = json.dumps(report.to_dict(), indent=1) + "\n"
    else:
        text = report.render() + "\n"
    return text, EXIT_OK if report.passed else EXIT_FAIL


def cmd_polyfit(args) -> tuple[str, int]:
    kind = args.pos_kind or args.kind
    family = _FAMILY_SPELLINGS.get(args.pos_family or args.family or ("d" if kind == "even" else None))
    index = args.pos_index if args.pos_index is not None else args.index
    if kind not in ("even", "odd"):
        raise UsageError("polyfit: kind must be even or odd")
    if family is None:
        raise UsageError("polyfit: --family must be one of d, d', d''")
    if index is None or index < 0:
        raise UsageError("polyfit: --index must be given and >= 0")
    try:
        poly = diagonal_polynomial(kind, family, index, args.rows)
    except DegreeMismatchError as exc:
        return f"{exc}\n", EXIT_FAIL
    except ValueError as exc:
        raise UsageError(f"polyfit: {exc}") from exc
    if args.format is OutputFormat.JSON:
        doc = {
            "kind": kind, "family": family, "index": index,
            "binomial": list(poly.coeffs), "binomial_form": poly.to_binomial_string(),
            "monomial_form": poly.to_monomial_string(), "t_min": poly.t_min,
        }
        return json.dumps(doc) + "\n", EXIT_OK
    return f"{poly}\n", EXIT_OK


def cmd_delannoy(args) -> tuple[str, int]:
    n = _scalar_arg(args)
    if n < 0:
        raise UsageError("delannoy: n must be >= 0")
    return render_scalar("delannoy", n, count_restricted_delannoy(n), args.format), EXIT_OK


def cmd_fib(args) -> tuple[str, int]:
    n = _scalar_arg(args)
    if n < 1:
        raise UsageError("fib: n must be >= 1")
    return render_scalar("fib", n, fib(n), args.format), EXIT_OK


def cmd_difftable(args) -> tuple[str, int]:
    if args.rows < 0:
        raise UsageError("--rows must be >= 0")
    rows = se_difference_table(odd_table(args.rows), args.rows)
    return render_rows("se-difference", rows, args.format), EXIT_OK


COMMANDS = {
    "triangle": cmd_triangle,
    "verify": cmd_verify,
    "polyfit": cmd_polyfit,
    "delannoy": cmd_delannoy,
    "fib": cmd_fib,
    "difftable": cmd_difftable,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", type=OutputFormat, default=OutputFormat.PRETTY,
                        choices=list(OutputFormat), metavar="{pretty,csv,json,bfile}")
    common.add_argument("--n", type=int, default=None)

    parser = argparse.ArgumentParser(prog="fibtri", description="Fibonacci partition triangles.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("triangle", parents=[common], help="print rows of a triangle")
    p.add_argument("--kind", choices=("even", "odd"), default="even")
    p.add_argument("--rows", "-t", type=int, default=12)

    p = sub.add_parser("verify", parents=[common], help="run every verification suite")
    p.add_argument("--rows", "-t", type=int, default=100)

    p = sub.add_parser("polyfit", parents=[common], help="fit a diagonal with a binomial-basis polynomial")
    p.add_argument("pos_kind", nargs="?", choices=("even", "odd"), metavar="kind")
    p.add_argument("pos_family", nargs="?", metavar="family")
    p.add_argument("pos_index", nargs="?", type=int, metavar="index")
    p.add_argument("--kind", choices=("even", "odd"), default="even")
    p.add_argument("--family", default=None)
    p.add_argument("--index", type=int, default=None)
    p.add_argument("--rows", "-t", type=int, default=100, help="last row of the fitting window")

    for verb, text in (("delannoy", "count restricted Delannoy paths"), ("fib", "Fibonacci number f_n")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("pos_n", nargs="?", type=int, metavar="n")

    p = sub.add_parser("difftable", parents=[common], help="south-east differences of the odd triangle")
    p.add_argument("--rows", "-t", type=int, default=12)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    try:
        text, status = COMMANDS[args.verb](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fibtri: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceExhausted, MemoryError, RecursionError) as exc:
        print(f"fibtri: resources exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCES
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
