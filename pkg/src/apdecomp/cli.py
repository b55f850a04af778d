"""Command-line interface: ``apdecomp {find,table,lift,gf}``.

Exit codes: 0 success (empty results included), 1 usage error,
2 family or precondition error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import sys
import time
from typing import Callable, List, Optional, Sequence

from . import __version__
from .arith import RangeError
from .gf import CharacteristicError, ConstructionError, build_field, find_3ap_field
from .lifting import (
    LiftPrimeError, LiftReport, ProductivityError, WrongSubcaseError, lift_decompositions,
    lift_to_prime_power,
)
from .search import find_3ap, find_4ap, make_decomposition
from .tables import TABLES
from .theorems import FamilyError, InvariantViolation

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3

PRECONDITION_ERRORS = (
    FamilyError, CharacteristicError, ConstructionError, ProductivityError,
    WrongSubcaseError, RangeError, LiftPrimeError,
)


class UsageError(ValueError):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _envelope(command: str, params: dict, result, runtime: Optional[float]) -> dict:
    return {
        "command": command,
        "parameters": params,
        "result": result,
        "runtime": runtime,
        "version": __version__,
    }


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([" ".join(map(str, v)) if isinstance(v, (list, tuple)) else v for v in r])
    return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    if isinstance(v, bool):
        return "*" if v else ""
    return str(v)


def _text_table(columns: Sequence[str], rows: Sequence[dict]) -> str:
    cells = [[_cell(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


# -- find -------------------------------------------------------------------------

def cmd_find(args) -> tuple:
    if args.n < 2:
        raise UsageError(f"n must be >= 2, got {args.n}")
    search = find_4ap if args.four else find_3ap
    decs = search(args.n, allow_weak=args.weak, threads=args.threads)
    params = {"n": args.n, "weak": args.weak, "four": args.four}
    result = [d.to_dict() for d in decs]
    if args.format == "csv":
        rows = [(d.n, d.first, d.diff, d.generators, d.orders, d.strength) for d in decs]
        return params, result, _csv(["n", "first", "diff", "generators", "orders", "strength"], rows)
    lines = [str(d) + ("  (weak)" if d.is_weak else "") for d in decs]
    lines.append(f"{len(decs)} decomposition(s)")
    return params, result, "\n".join(lines) + "\n"


# -- table ------------------------------------------------------------------------

def _call_table(fn: Callable, limit: Optional[int], threads: int):
    sig = inspect.signature(fn).parameters
    kwargs = {}
    if limit is not None:
        name = "limit" if "limit" in sig else "prime_limit" if "prime_limit" in sig else None
        if name is None:
            raise UsageError("this table takes no --limit")
        kwargs[name] = limit
    if "threads" in sig:
        kwargs["threads"] = threads
    return fn(**kwargs)


def cmd_table(args) -> tuple:
    rep = _call_table(TABLES[args.which], args.limit, args.threads)
    params = {"which": args.which, "limit": rep.limit, "diff_paper": args.diff_paper}
    result = rep.to_dict()
    if not args.diff_paper:
        for key in ("diffs", "errata"):
            result.pop(key)
    if args.format == "csv":
        return params, result, _csv(rep.columns, [[r.get(c) for c in rep.columns] for r in rep.rows])
    out = [_text_table(rep.columns, rep.rows)]
    for note in rep.notes:
        out.append(f"note: {note}\n")
    if args.diff_paper:
        for e in rep.errata:
            out.append(f"erratum: {e}\n")
        for d in rep.diffs:
            out.append(f"diff: {d}\n")
        out.append("matches printed data\n" if rep.matches else f"{len(rep.diffs)} diff(s) against printed data\n")
    return params, result, "".join(out)


# -- lift -------------------------------------------------------------------------

def _lift_lines(rep: LiftReport) -> List[str]:
    lines = [f"source: {rep.source}", f"  case {rep.case.label}, special lifts {list(rep.special_lifts)}"]
    if rep.spurious_lifts is not None:
        tag = "in AP" if rep.spurious_in_ap else "not in AP"
        lines.append(f"  spurious lifts {list(rep.spurious_lifts)} ({tag})")
    if rep.productive is not None:
        lines.append("  productive" if rep.productive else "  unproductive: special lifts are in AP")
    for d in rep.results:
        lines.append(f"  {d.strength:6s} {d}")
    lines.append(f"  {len(rep.strong)} strong, {len(rep.weak)} weak")
    return lines


def cmd_lift(args) -> tuple:
    n, p = args.n, args.p
    if n < 2:
        raise UsageError(f"n must be >= 2, got {n}")
    if args.gens:
        sources = [make_decomposition(n, args.gens)]
    else:
        sources = find_3ap(n, allow_weak=True)
    params = {"n": n, "p": p, "alpha": args.alpha, "gens": args.gens}
    if args.alpha == 1:
        reports = [lift_decompositions(d, p) for d in sources]
        result = [r.to_dict() for r in reports]
        if args.format == "csv":
            rows = [(d.n, r.source.generators, d.generators, d.orders, d.strength)
                    for r in reports for d in r.results]
            return params, result, _csv(["n", "source", "generators", "orders", "strength"], rows)
        lines = [line for r in reports for line in _lift_lines(r)]
        return params, result, "\n".join(lines) + "\n"
    if n != p:
        raise FamilyError("--alpha > 1 lifts U_p to U_{p^alpha}; n and p must be equal")
    result, lines, rows = [], [], []
    for d in sources:
        try:
            big = lift_to_prime_power(d, args.alpha)
        except ProductivityError as exc:
            result.append({"source": d.to_dict(), "lift": None, "error": str(exc)})
            lines.append(f"{d}  ->  none ({exc})")
            continue
        result.append({"source": d.to_dict(), "lift": big.to_dict(), "error": None})
        lines.append(f"{d}  ->  {big}")
        rows.append((big.n, d.generators, big.generators, big.orders, big.strength))
    if args.format == "csv":
        return params, result, _csv(["n", "source", "generators", "orders", "strength"], rows)
    return params, result, "\n".join(lines) + "\n"


# -- gf ---------------------------------------------------------------------------

def cmd_gf(args) -> tuple:
    f = build_field(args.p, args.k, args.poly)
    decs = find_3ap_field(f, one_per_order_set=not args.all, threads=args.threads)
    params = {"p": args.p, "k": args.k, "poly": list(f.spec.poly), "all": args.all}
    result = {"field": f"GF({args.p}^{args.k})", "polynomial": f.spec.poly_str(),
              "decompositions": [d.to_dict() for d in decs]}
    if args.format == "csv":
        rows = [(d.field.q, d.logs, d.orders) for d in decs]
        return params, result, _csv(["q", "logs", "orders"], rows)
    lines = [f"GF({args.p}^{args.k}) via {f.spec.poly_str()}, z a root"]
    lines += [str(d) for d in decs]
    lines.append(f"{len(decs)} decomposition(s)")
    return params, result, "\n".join(lines) + "\n"


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=1, help="worker threads (output order unaffected)")
    common.add_argument("--timing", action="store_true", help="report wall-clock runtime")

    parser = argparse.ArgumentParser(prog="apdecomp",
                                     description="AP direct-product decompositions of unit groups")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", parents=[common], help="all AP decompositions of U_n")
    p.add_argument("n", type=int)
    p.add_argument("--weak", action="store_true", help="also allow one trivial factor")
    p.add_argument("--four", action="store_true", help="4-term progressions instead of 3")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("table", parents=[common], help="recompute a printed table")
    p.add_argument("which", choices=sorted(TABLES))
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--diff-paper", action="store_true", help="compare against the printed values")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("lift", parents=[common], help="lift decompositions of U_n to U_np")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--alpha", type=int, default=1, help="lift U_p to U_{p^alpha}")
    p.add_argument("--gens", type=_int_list, default=None, help="one source, e.g. 54,1,3")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("gf", parents=[common], help="3AP decompositions of GF(p^k)*")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    p.add_argument("--poly", type=_int_list, default=None,
                   help="defining polynomial, constant term first, e.g. 2,7,1")
    p.add_argument("--all", action="store_true", help="every decomposition, not one per order set")
    p.set_defaults(func=cmd_gf)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        params, result, text = args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    runtime = round(time.perf_counter() - start, 6) if args.timing else None
    if args.format == "json":
        env = _envelope(args.command, params, result, runtime)
        sys.stdout.write(json.dumps(env, indent=2) + "\n")
    else:
        sys.stdout.write(text)
        if runtime is not None:
            print(f"runtime: {runtime:.3f} s", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
