"""Command-line interface: ``scullen <command> ...``.

Exit status: 0 success (and, for ``search``, no hit outside the known
families); 1 a search hit outside the families; 2 usage error; 3 a factoring
budget or enumeration cap was exceeded; 4 I/O or checkpoint failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import bounds
from .abctriple import AbcTriple, InvalidTripleError, abc_check, scan_case1_exceptions
from .arithmetic import FactorizationBudgetExceeded
from .cullen import InvalidIndexError, cullen_value
from .families import family_a_members, family_b_members
from .repunit import detect_repunits
from .search import CheckpointError, SearchConfig, run_search

EXIT_OK = 0
EXIT_NEW_HIT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4

log = logging.getLogger("scullen")


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="scullen",
        description="s-Cullen numbers n*s^n + 1 that are repunits: search, families, bounds, abc triples.",
    )
    p.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    c = sub.add_parser("cullen", help="print C(s, n) = n*s^n + 1")
    c.add_argument("s", type=_natural)
    c.add_argument("n", type=_natural)

    d = sub.add_parser("detect", help="print every repunit form 'b q' of N")
    d.add_argument("N", type=_natural)

    f = sub.add_parser("families", help="list members of the known families")
    f.add_argument("family", choices=["a", "b"])
    f.add_argument("--limit", type=_positive, default=10)

    b = sub.add_parser("bounds", help="decide or enumerate the exclusion inequalities")
    b.add_argument("which", choices=["eq1", "eq3", "general"])
    b.add_argument("--q", type=_natural, help="repunit length for 'general' (q >= 4)")
    mode = b.add_mutually_exclusive_group(required=True)
    mode.add_argument("--enumerate", action="store_true", help="print the full finite exception set")
    mode.add_argument("--check", nargs=2, type=_natural, metavar=("S", "N"))

    a = sub.add_parser("abc", help="abc triples at epsilon = 1/6")
    asub = a.add_subparsers(dest="abc_command", required=True, metavar="ACTION")
    ac = asub.add_parser("check", help="report on one triple")
    for name in ("a", "b", "c"):
        ac.add_argument(name, type=_natural)
    asc = asub.add_parser("scan-case1", help="exceptional b for the triple (b, 1, b+1)")
    asc.add_argument("--b-max", type=_natural, required=True)

    s = sub.add_parser("search", help="exhaustive search over an (s, n) rectangle, JSONL output")
    s.add_argument("--s-min", type=_natural, required=True)
    s.add_argument("--s-max", type=_natural, required=True)
    s.add_argument("--n-min", type=_natural, required=True)
    s.add_argument("--n-max", type=_natural, required=True)
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--checkpoint", metavar="PATH", help="write checkpoints here at column boundaries")
    s.add_argument("--resume", action="store_true", help="continue from --checkpoint (must exist)")
    s.add_argument("--checkpoint-every", type=_positive, default=100, metavar="COLUMNS")
    s.add_argument("--stop-after-s", type=_natural, metavar="S", help="stop after column S, as if interrupted")
    s.add_argument("--exclude-families", action="store_true", help="report only hits outside the known families")
    s.add_argument("--conditional", action="store_true", help="add the abc-conditional exclusion overlay")
    s.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    return p


def _cmd_cullen(args, out) -> int:
    try:
        out.write(f"{cullen_value(args.s, args.n)}\n")
    except InvalidIndexError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def _cmd_detect(args, out) -> int:
    for form in detect_repunits(args.N):
        out.write(f"{form.b} {form.q}\n")
    return EXIT_OK


def _cmd_families(args, out) -> int:
    if args.family == "a":
        for s in family_a_members(args.limit):
            out.write(f"{s}\n")
    else:
        for m in family_b_members(args.limit):
            out.write(f"{m.k} {m.s} {m.b}\n")
    return EXIT_OK


def _cmd_bounds(args, out) -> int:
    if args.which == "general":
        if args.q is None:
            raise UsageError("bounds general needs --q")
        if args.q < 4:
            raise UsageError(f"--q must be >= 4, got {args.q}")
    elif args.q is not None:
        raise UsageError("--q only applies to 'general'")

    if args.enumerate:
        if args.which == "eq1":
            cells = bounds.enumerate_eq1_exceptions()
        elif args.which == "eq3":
            cells = bounds.enumerate_eq3_exceptions()
        else:
            cells = bounds.enumerate_general_q_exceptions(args.q)
        for s, n in sorted(cells):
            out.write(f"{s} {n}\n")
        return EXIT_OK

    s, n = args.check
    try:
        if args.which == "eq1":
            v = bounds.eq1_verdict(s, n)
        elif args.which == "eq3":
            v = bounds.eq3_verdict(s, n)
        else:
            v = bounds.general_q_verdict(s, n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(f"{str(v.holds).lower()} {v.describe()}\n")
    return EXIT_OK


def _cmd_abc(args, out) -> int:
    if args.abc_command == "check":
        try:
            t = AbcTriple(args.a, args.b, args.c)
        except InvalidTripleError as exc:
            raise UsageError(str(exc)) from exc
        out.write(abc_check(t).line() + "\n")
    else:
        for rep in scan_case1_exceptions(args.b_max):
            out.write(rep.line() + "\n")
    return EXIT_OK


def _cmd_search(args, out) -> int:
    try:
        cfg = SearchConfig(
            args.s_min,
            args.s_max,
            args.n_min,
            args.n_max,
            workers=args.workers,
            checkpoint_path=args.checkpoint,
            exclude_families=args.exclude_families,
            report_conditional_exclusions=args.conditional,
            resume=args.resume,
            checkpoint_every=args.checkpoint_every,
            stop_after_s=args.stop_after_s,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    report = run_search(cfg)
    text = report.to_jsonl()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    by_family = report.hits_by_family()
    log.info(
        "scanned %d cells in %.1fs: %d family-A, %d family-B, %d other hits%s",
        report.cells_scanned,
        report.wall_time,
        by_family["A"],
        by_family["B"],
        by_family["none"],
        "" if report.complete else f" (stopped after s={report.completed_s})",
    )
    return EXIT_NEW_HIT if report.new_hits else EXIT_OK


COMMANDS = {
    "cullen": _cmd_cullen,
    "detect": _cmd_detect,
    "families": _cmd_families,
    "bounds": _cmd_bounds,
    "abc": _cmd_abc,
    "search": _cmd_search,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"scullen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FactorizationBudgetExceeded, bounds.BoundsCapExceeded) as exc:
        print(f"scullen: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CheckpointError, OSError) as exc:
        print(f"scullen: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
