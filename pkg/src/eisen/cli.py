"""Command-line front end. Thin client: argument parsing and formatting only,
with all computation delegated to the service handlers.

Exit codes: 0 ok, 1 usage error, 2 nonrepresentable input, 3 construction
failure. Set EISEN_NO_COLOR to disable ANSI styling of text output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from .errors import ConstructionFailed, EisenError, NoRepresentation
from .service import handlers
from .service.models import (
    CorollaryResponse,
    EmbedResponse,
    SolveResponse,
    TableResponse,
    TriplesResponse,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_REPRESENTATION = 2
EXIT_CONSTRUCTION_FAILED = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; this CLI reserves 2 for
    nonrepresentable inputs, so usage errors are remapped to 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bold(text: str) -> str:
    if os.environ.get("EISEN_NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[1m{text}\x1b[0m"


def _json_out(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _csv_rows(header: list[str], rows: list[list]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def _aligned(header: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    print(_bold("  ".join(h.rjust(w) for h, w in zip(header, widths))))
    for row in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))


# --- per-command output ---


def _print_solve(result: SolveResponse, fmt: str) -> None:
    if fmt == "json":
        _json_out(result.model_dump())
    elif fmt == "csv":
        _csv_rows(
            ["p", "n", "a", "b", "A", "B", "form_value", "gcd", "method", "p_divides_a"],
            [[result.p, result.n, result.a, result.b, result.A, result.B,
              result.form_value, result.gcd, result.method, str(result.p_divides_a).lower()]],
        )
    else:
        print(f"a={result.a} b={result.b}")
        print(f"A={result.A} B={result.B}")
        print(
            f"form_value={result.form_value} gcd={result.gcd} "
            f"p_divides_a={str(result.p_divides_a).lower()}"
        )


def _print_table(result: TableResponse, fmt: str) -> None:
    rows = [[str(r.n), r.a, r.b, r.A, r.B] for r in result.rows]
    if fmt == "json":
        _json_out(result.model_dump())
    elif fmt == "csv":
        _csv_rows(["n", "a", "b", "A", "B"], rows)
    else:
        _aligned(["n", "a", "b", "A", "B"], rows)


def _print_corollary(result: CorollaryResponse, fmt: str) -> None:
    rows = [[p.A, p.B, str(p.coprime).lower()] for p in result.pairs]
    if fmt == "json":
        _json_out(result.model_dump())
    elif fmt == "csv":
        _csv_rows(["A", "B", "coprime"], rows)
    else:
        print(_bold(f"{result.n} solution(s) of a^2+ab+b^2 = 7^{result.exponent} = {result.form_value}"))
        _aligned(["A", "B", "coprime"], rows)


def _print_triples(result: TriplesResponse, fmt: str) -> None:
    if fmt == "json":
        _json_out(result.model_dump())
        return
    rows = [
        [str(t.x), str(t.y), str(t.z), t.origin, str(t.primitive).lower()]
        for t in result.triples
    ]
    if fmt == "csv":
        _csv_rows(["x", "y", "z", "origin", "primitive"], rows)
    else:
        _aligned(["x", "y", "z", "origin", "primitive"], rows)
    if result.coverage is not None:
        print(json.dumps(result.coverage.model_dump(), indent=2))


def _print_embed(result: EmbedResponse, fmt: str) -> None:
    if fmt == "json":
        _json_out(result.model_dump())
        return
    labels = result.labels
    lookup = {(e.a, e.b): e.distance for e in result.distances}

    def cell(a: str, b: str) -> str:
        if a == b:
            return "0"
        return str(lookup[(min(a, b), max(a, b))])

    rows = [[a] + [cell(a, b) for b in labels] for a in labels]
    if fmt == "csv":
        _csv_rows(["label"] + labels, rows)
    else:
        print(_bold(f"figure {result.figure}: R^2 = {result.radius_sq}"))
        _aligned([""] + labels, rows)
    if result.checks is not None:
        checks = result.checks
        stat = lambda ok: "PASS" if ok else "FAIL"
        print(f"on_circle: {stat(checks.on_circle)}")
        print(f"expected_distances: {stat(checks.expected_distances)}")
        print(f"all_pairs_integral: {stat(checks.all_pairs_integral)}")
        print(f"ptolemy ({checks.ptolemy_quadruples} quadruples): {stat(checks.ptolemy)}")
        odd = " ".join(f"{k}={v}" for k, v in sorted(checks.odd_degrees.items()))
        print(f"odd_distance_degrees: {odd}")


# --- commands ---


def _cmd_solve(args: argparse.Namespace) -> int:
    result = handlers.solve(args.p, args.n, args.method)
    _print_solve(result, args.format)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    _print_table(handlers.table(args.n_max), args.format)
    return EXIT_OK


def _cmd_corollary(args: argparse.Namespace) -> int:
    _print_corollary(handlers.corollary(args.n), args.format)
    return EXIT_OK


def _cmd_triples(args: argparse.Namespace) -> int:
    _print_triples(handlers.enumerate_triples(args.z_max, args.verify), args.format)
    return EXIT_OK


def _cmd_embed(args: argparse.Namespace) -> int:
    result = handlers.embed(args.figure, args.check)
    if args.svg is not None:
        with open(args.svg, "w", encoding="utf-8") as sink:
            sink.write(handlers.embed_svg(args.figure, args.scale))
    _print_embed(result, args.format)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("eisen.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def _nonnegative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eisen", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="coprime solution of a^2+ab+b^2 = p^n")
    solve.add_argument("--p", type=_positive, required=True)
    solve.add_argument("--n", type=_nonnegative, required=True)
    solve.add_argument("--method", choices=["power", "recurrence", "descent"], default="power")
    _add_format(solve)
    solve.set_defaults(func=_cmd_solve)

    table = sub.add_parser("table", help="the (n, a_n, b_n, A_n, B_n) table for base 7")
    table.add_argument("--n-max", dest="n_max", type=_nonnegative, required=True)
    _add_format(table)
    table.set_defaults(func=_cmd_table)

    corollary = sub.add_parser("corollary", help="n distinct solutions of a^2+ab+b^2 = 7^(2n)")
    corollary.add_argument("--n", type=_positive, required=True)
    _add_format(corollary)
    corollary.set_defaults(func=_cmd_corollary)

    triples = sub.add_parser("triples", help="solutions of x^2+xy+y^2 = z^2 with z <= z-max")
    triples.add_argument("--z-max", dest="z_max", type=_positive, required=True)
    triples.add_argument("--verify", action="store_true", help="compare against brute force")
    _add_format(triples)
    triples.set_defaults(func=_cmd_triples)

    embed = sub.add_parser("embed", help="integer-distance circle embeddings")
    embed.add_argument("--figure", choices=["k222", "k333"], required=True)
    embed.add_argument("--svg", metavar="PATH", help="write an SVG drawing to PATH")
    embed.add_argument("--scale", type=float, default=40.0)
    embed.add_argument("--check", action="store_true", help="run all exactness checks")
    _add_format(embed)
    embed.set_defaults(func=_cmd_embed)

    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoRepresentation as exc:
        print(f"eisen: {exc}", file=sys.stderr)
        return EXIT_NO_REPRESENTATION
    except ConstructionFailed as exc:
        print(f"eisen: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION_FAILED
    except (EisenError, ValueError) as exc:
        print(f"eisen: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
