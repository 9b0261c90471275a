"""Command-line front end: REPL, batch evaluation, catalog dump and selftest."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from .. import catalog, lawcheck
from .evaluate import EvalError, evaluate
from .format import dumps, format_value
from .parser import ParseError, parse

HELP_EPILOG = """\
expressions:
  t(q, T)  j(m, S)  k(U)        elements; q in N|inf, m in N|w|inf
  x + y   x * y                 join, smash
  x <= y  x == y                order, equality (sets: inclusion)
  {0,2,inf} [3,inf] [0,4] N     sets; N is N u {inf}
  per(a, p, {r,...}[, inf])     {n >= a : n mod p in r}, optionally with inf
  ~S  S | S  S & S              complement, union, intersection
  @NAME or @NAME(n)             catalog classes, e.g. @BP @K(2) @TMF
  neg(x) heyting(x,z) comp(x) idem(x) bool(x) sigma(x) proj(eps,a)
  reconstruct(sigma) reconstruct(S1,S2,S3) tail(x) head(x) classify(S)
  sup(x, ...)                   join of the ideal generated by the arguments
  theta(A; qmin|none; empty|unbounded|m)
                                least upper bound of an ideal summary
  catalog()                     list catalog names

subcommands:
  catalog                       dump the catalog
  selftest [--grid small|full] [--seed N] [--samples N]
"""


def diagnostic(text: str, exc: Exception) -> str:
    pos = getattr(exc, "pos", 0)
    return f"{exc}\n  {text}\n  {' ' * pos}^"


def evaluate_line(text: str, mode: str) -> str:
    """Parse, evaluate and format one expression; raises on bad input."""
    return format_value(evaluate(parse(text)), mode)


def run_lines(lines, mode: str, out: TextIO, err: TextIO) -> int:
    status = 0
    for raw in lines:
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            print(evaluate_line(text, mode), file=out)
        except (ParseError, EvalError) as exc:
            print(diagnostic(text, exc), file=err)
            status = 1
    return status


def repl(mode: str, out: TextIO, err: TextIO) -> int:
    print("bousfield engine; empty line or Ctrl-D to quit, 'help' for syntax", file=out)
    while True:
        try:
            text = input("> ")
        except EOFError:
            return 0
        if not text.strip():
            return 0
        if text.strip() == "help":
            print(HELP_EPILOG, file=out)
            continue
        run_lines([text], mode, out, err)


def _selftest(argv: Sequence[str], out: TextIO, json_mode: bool) -> int:
    ap = argparse.ArgumentParser(prog="bousfield selftest")
    ap.add_argument("--grid", choices=("small", "full"), default="small")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    cfg = lawcheck.SMALL_GRID if args.grid == "small" else lawcheck.FULL_GRID
    grid = lawcheck.enumerate_grid(cfg)
    report = lawcheck.check_laws(grid, seed=args.seed, samples=args.samples,
                                 exhaustive_triples=(args.grid == "small"))
    if json_mode or args.json:
        print(dumps(report.to_wire()), file=out)
    else:
        print(report.to_text(), file=out)
    return 0 if report.ok else 2


def _catalog(argv: Sequence[str], out: TextIO, json_mode: bool) -> int:
    ap = argparse.ArgumentParser(prog="bousfield catalog")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if json_mode or args.json:
        print(dumps(catalog.dump()), file=out)
    else:
        for pattern, exactness, relation in catalog.list_names():
            print(f"{pattern:<14} {exactness.value:<9}  {relation}", file=out)
    return 0


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    json_mode = "--json" in argv[:1]
    rest = argv[1:] if json_mode else argv
    if rest and rest[0] == "selftest":
        return _selftest(rest[1:], out, json_mode)
    if rest and rest[0] == "catalog":
        return _catalog(rest[1:], out, json_mode)

    ap = argparse.ArgumentParser(
        prog="bousfield",
        description="Symbolic engine for the combinatorial model of p-local Bousfield classes.",
        epilog=HELP_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("--json", action="store_true", help="emit canonical JSON wire forms")
    ap.add_argument("--eval", dest="expr", action="append",
                    help="evaluate an expression (may be repeated)")
    ap.add_argument("file", nargs="?", help="file with one expression per line ('-' for stdin)")
    args = ap.parse_args(argv)
    mode = "json" if args.json else "text"

    if args.expr:
        return run_lines(args.expr, mode, out, err)
    if args.file:
        if args.file == "-":
            return run_lines(sys.stdin, mode, out, err)
        with open(args.file, encoding="utf-8") as fh:
            return run_lines(fh, mode, out, err)
    return repl(mode, out, err)


if __name__ == "__main__":
    sys.exit(main())
