"""Batch command-line interface.

Output is line-delimited structured text; `period --human` prints a table
mirroring the classical n | V_n layout instead.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 I/O or corrupted state.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .families import BUILTIN_FAMILIES, FamilySpec, family_numerator_mod, family_value
from .lucas import ComboParams, SeqParams, v_exact, v_mod
from .periods import find_period, residue_table
from .prime_search import CheckpointError, FilterAuditError, search
from .theorems import (
    check_modulus_for,
    check_theorem,
    coverage,
    discover,
    builtin_theorems,
    parse_theorems,
    serialize_theorems,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

CHECKPOINT_DIR_ENV = "LUCASKIT_CHECKPOINT_DIR"


def _add_family_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-f", "--family", choices=sorted(BUILTIN_FAMILIES), help="built-in family name")
    custom = sub.add_argument_group("custom family (all required when -f is omitted)")
    custom.add_argument("-P", type=int, help="recurrence parameter P")
    custom.add_argument("-Q", type=int, help="recurrence parameter Q")
    custom.add_argument("--t0", type=int, help="combination coefficient t0")
    custom.add_argument("--t1", type=int, help="combination coefficient t1")
    custom.add_argument("-c", type=int, help="additive constant")
    custom.add_argument("-d", type=int, help="exact divisor")
    custom.add_argument("-k", type=int, default=2, help="index multiplier (default 2)")
    custom.add_argument("--name", default="F", help="label for a custom family (default F)")


def _resolve_family(args: argparse.Namespace) -> FamilySpec:
    if args.family:
        return BUILTIN_FAMILIES[args.family]
    needed = {"P": args.P, "Q": args.Q, "t0": args.t0, "t1": args.t1, "c": args.c, "d": args.d}
    missing = [flag for flag, value in needed.items() if value is None]
    if missing:
        raise ValueError(f"missing family flags: {', '.join(missing)} (or use -f)")
    return FamilySpec(
        ComboParams(SeqParams(args.P, args.Q), t0=args.t0, t1=args.t1),
        c=args.c,
        d=args.d,
        k=args.k,
        name=args.name,
    )


def _load_theorem_args(args: argparse.Namespace):
    if args.paper:
        return builtin_theorems()
    return parse_theorems(Path(args.file).read_text())


def cmd_v(args: argparse.Namespace) -> int:
    params = SeqParams(args.P, args.Q)
    if args.m is not None:
        print(v_mod(params, args.n, args.m))
    else:
        print(v_exact(params, args.n))
    return EXIT_OK


def cmd_value(args: argparse.Namespace) -> int:
    fam = _resolve_family(args)
    value = family_value(fam, args.p)
    print(value)
    print(f"digits={len(str(value))}")
    return EXIT_OK


def cmd_period(args: argparse.Namespace) -> int:
    record = find_period(SeqParams(args.P, args.Q), args.m)
    upto = args.table if args.table is not None else record.period - 1
    if args.human:
        width = max(len(str(upto)), 1)
        print(f"{'n'.rjust(width)} | V_n mod {record.modulus}")
        for n, residue in enumerate(residue_table(record, upto)):
            print(f"{str(n).rjust(width)} | {residue}")
        return EXIT_OK
    print(f"P={args.P} Q={args.Q} modulus={record.modulus} period={record.period}")
    print("residues=" + ",".join(str(r) for r in record.residues))
    if args.table is not None:
        print("table=" + ",".join(str(r) for r in residue_table(record, upto)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    theorems = _load_theorem_args(args)
    failures = 0
    for thm in theorems:
        verdict = check_theorem(thm)
        line = (
            f"family={thm.family.name} q={thm.q} r={thm.class_residue} "
            f"m={thm.class_modulus} verdict={'valid' if verdict.valid else 'invalid'}"
        )
        if not verdict.valid:
            failures += 1
            if verdict.counterexample is not None:
                line += f" counterexample={verdict.counterexample}"
            line += f" reason={verdict.reason}"
        elif args.deep:
            bad = _deep_audit(thm, args.deep)
            if bad is not None:
                failures += 1
                line = line.replace("verdict=valid", "verdict=invalid")
                line += f" counterexample={bad} reason=deep audit failed at p={bad}"
        print(line)
    print(f"summary total={len(theorems)} valid={len(theorems) - failures} invalid={failures}")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def _deep_audit(thm, limit: int) -> int | None:
    M = check_modulus_for(thm.family, thm.q)
    for p in thm.members():
        if p > limit:
            return None
        if family_numerator_mod(thm.family, p, M) != 0:
            return p
    return None


def cmd_discover(args: argparse.Namespace) -> int:
    fam = _resolve_family(args)
    text = serialize_theorems(discover(fam, args.q_max))
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_coverage(args: argparse.Namespace) -> int:
    fam = _resolve_family(args)
    report = coverage(fam, _load_theorem_args(args), args.modulus)
    print(f"modulus={report.modulus}")
    for r, thm in sorted(report.covered.items()):
        print(f"covered r={r} q={thm.q} class={thm.class_residue}/{thm.class_modulus}")
    print("uncovered=" + ",".join(str(r) for r in report.uncovered))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    fam = _resolve_family(args)
    if args.paper_filters:
        filters = [t for t in builtin_theorems() if t.family == fam]
    elif args.filters:
        filters = [t for t in parse_theorems(Path(args.filters).read_text(), families=[fam])
                   if t.family == fam]
    else:
        filters = []
    checkpoint = args.checkpoint
    if checkpoint is not None:
        base = os.environ.get(CHECKPOINT_DIR_ENV)
        if base and not os.path.isabs(checkpoint):
            checkpoint = os.path.join(base, checkpoint)
    state = search(
        fam,
        args.p_from,
        args.p_to,
        filters,
        primes_only=not args.all_p,
        checkpoint_path=checkpoint,
    )
    print(
        f"family={state.family} from={state.p_from} to={state.p_to} "
        f"primes-only={int(state.primes_only)}"
    )
    for p, digits, verdict in state.hits:
        print(f"hit p={p} digits={digits} verdict={verdict}")
    print(
        f"summary tested={state.tested} skipped={state.total_skipped} hits={len(state.hits)}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucaskit",
        description="Lucas V-sequences, special integer families, divisibility theorems, prime search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_v = sub.add_parser("v", help="evaluate V_n, exactly or mod m")
    p_v.add_argument("-P", type=int, required=True)
    p_v.add_argument("-Q", type=int, required=True)
    p_v.add_argument("-n", type=int, required=True)
    p_v.add_argument("-m", type=int, help="optional modulus")
    p_v.set_defaults(func=cmd_v)

    p_value = sub.add_parser("value", help="evaluate a family value F(p)")
    _add_family_args(p_value)
    p_value.add_argument("-p", type=int, required=True)
    p_value.set_defaults(func=cmd_value)

    p_period = sub.add_parser("period", help="period and residue cycle of V_n mod m")
    p_period.add_argument("-P", type=int, required=True)
    p_period.add_argument("-Q", type=int, required=True)
    p_period.add_argument("-m", type=int, required=True)
    p_period.add_argument("--table", type=int, help="also list rows 0..N")
    p_period.add_argument("--human", action="store_true", help="formatted n | V_n table")
    p_period.set_defaults(func=cmd_period)

    p_verify = sub.add_parser("verify", help="check divisibility theorems")
    src = p_verify.add_mutually_exclusive_group(required=True)
    src.add_argument("--paper", action="store_true", help="check the built-in theorem set")
    src.add_argument("--file", help="theorem file in the serialization format")
    p_verify.add_argument("--deep", type=int, metavar="N",
                          help="also audit divisibility for all class members p <= N")
    p_verify.set_defaults(func=cmd_verify)

    p_discover = sub.add_parser("discover", help="rediscover divisibility theorems")
    _add_family_args(p_discover)
    p_discover.add_argument("--q-max", type=int, required=True)
    p_discover.add_argument("-o", "--output", help="write theorem lines to a file")
    p_discover.set_defaults(func=cmd_discover)

    p_coverage = sub.add_parser("coverage", help="residue-class coverage of a theorem set")
    _add_family_args(p_coverage)
    src = p_coverage.add_mutually_exclusive_group(required=True)
    src.add_argument("--paper", action="store_true")
    src.add_argument("--file")
    p_coverage.add_argument("--modulus", type=int, required=True)
    p_coverage.set_defaults(func=cmd_coverage)

    p_search = sub.add_parser("search", help="probable-prime hunt over a family")
    _add_family_args(p_search)
    p_search.add_argument("--from", dest="p_from", type=int, required=True)
    p_search.add_argument("--to", dest="p_to", type=int, required=True)
    p_search.add_argument("--paper-filters", action="store_true",
                          help="filter with the built-in theorems for the family")
    p_search.add_argument("--filters", help="filter with a theorem file")
    p_search.add_argument("--checkpoint", help=f"checkpoint file (relative paths join ${CHECKPOINT_DIR_ENV})")
    p_search.add_argument("--all-p", action="store_true", help="walk every integer, not just primes")
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except FilterAuditError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (CheckpointError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
