"""Command line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 a p = 7 (mod 8) survivor outside the known list was found.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence

from .arith import DomainError, is_prime
from .field import make_field, split_below_minkowski
from .ono import ono_invariant
from .quadform import class_group
from .rows import ReportRow, to_csv, to_json
from .survey import (
    EXPECTED_SURVIVORS,
    first_failure,
    search_range,
    survivor_predicate,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DISCOVERY = 0, 1, 2, 3
JOBS_ENV = "SURVIVORPRIMES_JOBS"


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


class _Output:
    """stdout, or a file when --out is given."""

    def __init__(self, path: str | None) -> None:
        self.path = path
        self.parts: list[str] = []

    def write(self, text: str) -> None:
        self.parts.append(text)

    def line(self, text: str = "") -> None:
        self.parts.append(text + "\n")

    def flush(self) -> None:
        text = "".join(self.parts)
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()


def _cmd_search(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.hi < args.lo:
        parser.error(f"--hi ({args.hi}) is below --lo ({args.lo})")
    try:
        records = search_range(args.lo, args.hi, jobs=args.jobs)
    except DomainError as exc:
        parser.error(str(exc))
    rows = [ReportRow.from_record(r) for r in records]
    out = _Output(args.out)
    out.write(to_csv(rows) if args.format == "csv" else to_json(rows))
    out.flush()
    extras = [r.p for r in records if r.exceptional]
    if extras:
        print(f"new p = 7 (mod 8) survivor(s): {extras}", file=sys.stderr)
        return EXIT_DISCOVERY
    return EXIT_OK


def _cmd_classnum(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        D = make_field(args.p).D if args.p is not None else args.D
        group = class_group(D)
    except DomainError as exc:
        parser.error(str(exc))
    out = _Output(args.out)
    out.line(f"D={D} h={group.h} group={group.label()}")
    if args.forms:
        for f in group.reduced_forms:
            out.line(f"  {f}")
    out.flush()
    return EXIT_OK


def _cmd_ono(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        r = ono_invariant(args.p)
    except DomainError as exc:
        parser.error(str(exc))
    out = _Output(args.out)
    out.line(f"d={r.d} argmax_n={r.argmax_n} h={r.h}")
    out.flush()
    return EXIT_OK


def _describe(out: _Output, rec) -> None:
    out.line(f"p={rec.p} mod8={rec.residue_class} h={rec.h} group={rec.group_label}")
    if rec.ono_d is not None:
        out.line(f"  ono_d={rec.ono_d}")
    if rec.witness is not None:
        name = "t" if rec.residue_class == 7 else "y"
        out.line(f"  witness x={rec.witness[0]} {name}={rec.witness[1]}")
    if rec.p % 4 == 1:
        listed = " ".join(map(str, rec.split_below_sqrt)) or "none"
        out.line(f"  split odd primes below sqrt(p): {listed} (generators scanned up to sqrt(p), not the Minkowski bound)")
    for name, ok in rec.case_checks.items():
        out.line(f"  {name}: {'ok' if ok else 'FAIL'}")


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    p = args.p
    if p < 3 or p % 2 == 0 or not is_prime(p):
        parser.error(f"{p} is not an odd prime")
    out = _Output(args.out)
    rec = survivor_predicate(p)
    listed = p in EXPECTED_SURVIVORS[p % 8]
    if rec is None:
        w = first_failure(p)
        out.line(f"p={p} mod8={p % 8} survivor=false")
        out.line(f"  x={w.x}: {w.value} = {w.factorization} (omega={w.omega})")
        out.flush()
        return EXIT_MISMATCH if listed else EXIT_OK
    _describe(out, rec)
    out.line("  survivor=true")
    for w in rec.witnesses:
        out.line(f"  x={w.x}: {w.value} = {w.factorization}")
    out.flush()
    if rec.exceptional:
        return EXIT_DISCOVERY
    return EXIT_OK if listed and rec.case_check else EXIT_MISMATCH


_SECTION_ORDER = (5, 1, 3, 7)


def _cmd_report(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.bound < 3:
        parser.error("--bound must be at least 3")
    records = search_range(2, args.bound, jobs=args.jobs)
    out = _Output(args.out)
    out.line(f"survivor lists for primes p <= {args.bound}")
    mismatch = discovery = False
    for r in _SECTION_ORDER:
        expected = [q for q in EXPECTED_SURVIVORS[r] if q <= args.bound]
        found = [rec for rec in records if rec.residue_class == r]
        found_ps = [rec.p for rec in found]
        checks_ok = all(rec.case_check for rec in found)
        lists_ok = found_ps == expected
        extras = sorted(set(found_ps) - set(expected))
        if r == 7 and extras and set(expected) <= set(found_ps):
            discovery = True
        elif not lists_ok:
            mismatch = True
        if not checks_ok:
            mismatch = True
        status = "PASS" if lists_ok and checks_ok else "FAIL"
        out.line()
        out.line(f"== p = {r} (mod 8) ==")
        out.line(f"expected: {' '.join(map(str, expected))}")
        out.line(f"found:    {' '.join(map(str, found_ps))}")
        for rec in found:
            _describe(out, rec)
        out.line(f"status: {status}")
    out.line()
    overall = "FAIL" if mismatch else ("DISCOVERY" if discovery else "PASS")
    out.line(f"overall: {overall}")
    out.flush()
    if mismatch:
        return EXIT_MISMATCH
    return EXIT_DISCOVERY if discovery else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="survivorprimes",
        description="Primes p with omega(p + x^2) <= 2 for all odd x^2 < p, and the class group data behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    sp = sub.add_parser("search", help="list survivors in a range")
    sp.add_argument("--lo", type=_positive, required=True)
    sp.add_argument("--hi", type=_positive, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--jobs", type=_positive, default=_default_jobs(), help=f"worker processes (default ${JOBS_ENV} or 1)")
    common(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("classnum", help="class number and group structure")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("-p", type=int, help="odd prime; uses the discriminant of Q(sqrt(-p))")
    g.add_argument("-D", type=int, help="negative discriminant")
    sp.add_argument("--forms", action="store_true", help="also list the reduced forms")
    common(sp)
    sp.set_defaults(func=_cmd_classnum)

    sp = sub.add_parser("ono", help="Ono invariant for p = 7 (mod 8)")
    sp.add_argument("-p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_ono)

    sp = sub.add_parser("verify", help="run the survivor predicate and case checks for one prime")
    sp.add_argument("-p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("report", help="compare computed survivor lists with the known ones")
    sp.add_argument("--bound", type=_positive, default=2_000_000)
    sp.add_argument("--jobs", type=_positive, default=_default_jobs())
    common(sp)
    sp.set_defaults(func=_cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
