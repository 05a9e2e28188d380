"""Resumable probable-prime search over a family, filtered by divisibility theorems.

The checkpoint file is line-delimited text, one record per event:

    # family-search checkpoint v1
    family=T from=2 to=809 primes-only=1 nfilters=5
    filter T 5 1 5 25 10 2
    ...
    skip p=3 q=11
    test p=2 verdict=proven-prime-small
    hit p=2 digits=2 verdict=proven-prime-small
    next 3
    ...
    summary tested=46 skipped=94 hits=3

Events are appended (and flushed) after every candidate, so a rerun with
identical arguments resumes at the recorded next index without re-testing.
The trailing summary marks a completed range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Sequence

from .families import FamilySpec, family_numerator_mod, family_value
from .primality import classify, primes_upto
from .theorems import DivisibilityTheorem, check_modulus_for, parse_theorems

_HEADER = "# family-search checkpoint v1"

# below this index the exact value is cheap; needed to notice F(p) == q,
# where a filter divisor is the value itself rather than a proper factor
_TINY_INDEX = 32


class CheckpointError(Exception):
    """Checkpoint file is corrupted or belongs to a different search."""


class FilterAuditError(RuntimeError):
    """A sampled skip failed its divisibility audit: some filter is unsound."""


@dataclass
class SearchCheckpoint:
    """Resumable search state; hits are (p, digit count, verdict) by increasing p."""

    family: str
    p_from: int
    p_to: int
    primes_only: bool
    filters: list[DivisibilityTheorem]
    next_p: int
    tested: int = 0
    skipped: dict[str, int] = field(default_factory=dict)
    hits: list[tuple[int, int, str]] = field(default_factory=list)
    complete: bool = False

    @property
    def total_skipped(self) -> int:
        return sum(self.skipped.values())

    @property
    def hit_indexes(self) -> list[int]:
        return [p for p, _, _ in self.hits]


def _filter_line(t: DivisibilityTheorem) -> str:
    return (
        f"filter {t.family.name} {t.q} {t.class_residue} {t.class_modulus} "
        f"{t.proof.check_modulus} {t.proof.period} {t.proof.index_residue}"
    )


def _emit(handle: IO[str] | None, lines: list[str]) -> None:
    # one write + flush per candidate keeps records intact across interrupts
    if handle is not None and lines:
        handle.write("".join(line + "\n" for line in lines))
        handle.flush()


def _drop_orphan_events(path: Path, nfilters: int) -> None:
    """Trim trailing events of an interrupted candidate before appending.

    Without the closing "next" line those events would be replayed twice
    once the candidate re-runs.
    """
    lines = path.read_text().splitlines()
    keep = 2 + nfilters
    for i, line in enumerate(lines):
        if line.startswith(("next ", "summary ")):
            keep = i + 1
    if keep < len(lines):
        path.write_text("".join(line + "\n" for line in lines[:keep]))


def search(
    fam: FamilySpec,
    p_from: int,
    p_to: int,
    filters: Sequence[DivisibilityTheorem] = (),
    *,
    primes_only: bool = True,
    checkpoint_path: str | Path | None = None,
) -> SearchCheckpoint:
    """Hunt for (probable) prime family values over p in [p_from, p_to].

    Candidates covered by a filter theorem are skipped, recording the
    divisor q; every tenth skip is audited against a direct modular
    divisibility check and an unsound filter raises FilterAuditError.
    Remaining candidates are classified exactly; values judged prime or
    probable prime become hits.

    By default only prime p are considered; primes_only=False walks every
    integer in the range.
    """
    if not 1 <= p_from <= p_to:
        raise ValueError("need 1 <= p_from <= p_to")
    ordered = sorted(filters, key=lambda t: (t.class_modulus, t.q, t.class_residue))
    for t in ordered:
        if t.family != fam:
            raise ValueError("filter theorems must target the searched family")
    name = fam.name or "custom"

    path = Path(checkpoint_path) if checkpoint_path is not None else None
    handle: IO[str] | None = None
    if path is not None and path.exists() and path.stat().st_size > 0:
        state = load_checkpoint(path, families=[fam])
        if (
            state.family != name
            or state.p_from != p_from
            or state.p_to != p_to
            or state.primes_only != primes_only
        ):
            raise CheckpointError(f"{path} was written for different search arguments")
        if [_filter_line(t) for t in state.filters] != [_filter_line(t) for t in ordered]:
            raise CheckpointError(f"{path} was written with different filters")
        if state.complete:
            return state
        _drop_orphan_events(path, len(ordered))
        handle = path.open("a")
    else:
        state = SearchCheckpoint(name, p_from, p_to, primes_only, list(ordered), next_p=p_from)
        if path is not None:
            handle = path.open("w")
            _emit(
                handle,
                [
                    _HEADER,
                    f"family={name} from={p_from} to={p_to} "
                    f"primes-only={int(primes_only)} nfilters={len(ordered)}",
                    *(_filter_line(t) for t in ordered),
                ],
            )

    try:
        if primes_only:
            candidates = [p for p in primes_upto(p_to) if p >= state.next_p]
        else:
            candidates = list(range(state.next_p, p_to + 1))
        for p in candidates:
            records = []
            thm = _matching_filter(fam, ordered, p)
            if thm is not None:
                if state.total_skipped % 10 == 0:
                    _audit_skip(fam, thm, p)
                reason = f"q={thm.q}"
                state.skipped[reason] = state.skipped.get(reason, 0) + 1
                records.append(f"skip p={p} q={thm.q}")
            else:
                value = family_value(fam, p)
                verdict = classify(value)
                state.tested += 1
                line = f"test p={p} verdict={verdict.verdict}"
                if verdict.witness is not None:
                    line += f" witness={verdict.witness}"
                records.append(line)
                if verdict.is_prime:
                    digits = len(str(value))
                    state.hits.append((p, digits, verdict.verdict))
                    records.append(f"hit p={p} digits={digits} verdict={verdict.verdict}")
            state.next_p = p + 1
            records.append(f"next {state.next_p}")
            _emit(handle, records)
        state.next_p = max(state.next_p, p_to + 1)
        state.complete = True
        _emit(
            handle,
            [
                f"summary tested={state.tested} skipped={state.total_skipped} "
                f"hits={len(state.hits)}"
            ],
        )
    finally:
        if handle is not None:
            handle.close()
    return state


def _matching_filter(
    fam: FamilySpec, ordered: list[DivisibilityTheorem], p: int
) -> DivisibilityTheorem | None:
    matches = [t for t in ordered if t.contains(p)]
    if not matches:
        return None
    if p <= _TINY_INDEX:
        # q | F(p) proves compositeness only when it is a proper divisor;
        # e.g. T(2) = 31 matches the q=31 filter yet is prime
        value = family_value(fam, p)
        if any(t.q == value for t in matches):
            return None
    return matches[0]


def _audit_skip(fam: FamilySpec, thm: DivisibilityTheorem, p: int) -> None:
    M = check_modulus_for(fam, thm.q)
    if family_numerator_mod(fam, p, M) != 0:
        raise FilterAuditError(
            f"filter q={thm.q} class {thm.class_residue} (mod {thm.class_modulus})"
            f" wrongly skipped p={p}"
        )


def load_checkpoint(
    path: str | Path, families: list[FamilySpec] | None = None
) -> SearchCheckpoint:
    """Parse a checkpoint file; any malformation raises CheckpointError."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CheckpointError(str(exc)) from exc
    lines = text.splitlines()
    if not lines or lines[0] != _HEADER:
        raise CheckpointError(f"{path}: missing checkpoint header")
    if len(lines) < 2:
        raise CheckpointError(f"{path}: missing search arguments")

    meta = _parse_tokens(path, 2, lines[1], {"family", "from", "to", "primes-only", "nfilters"})
    try:
        state = SearchCheckpoint(
            family=meta["family"],
            p_from=int(meta["from"]),
            p_to=int(meta["to"]),
            primes_only=bool(int(meta["primes-only"])),
            filters=[],
            next_p=int(meta["from"]),
        )
        nfilters = int(meta["nfilters"])
    except ValueError as exc:
        raise CheckpointError(f"{path}:2: {exc}") from None

    filter_lines = lines[2 : 2 + nfilters]
    if len(filter_lines) != nfilters or any(not ln.startswith("filter ") for ln in filter_lines):
        raise CheckpointError(f"{path}: expected {nfilters} filter lines")
    try:
        state.filters = parse_theorems(
            "\n".join(ln[len("filter ") :] for ln in filter_lines), families=families
        )
    except ValueError as exc:
        raise CheckpointError(f"{path}: {exc}") from None

    # events buffer per candidate and apply at its closing "next" line, so a
    # run killed between two writes never double-counts on resume
    pending: list[tuple[str, dict[str, str]]] = []

    def apply_pending() -> None:
        for action, fields in pending:
            if action == "skip":
                key = f"q={fields['q']}"
                state.skipped[key] = state.skipped.get(key, 0) + 1
            elif action == "test":
                state.tested += 1
            else:  # hit
                state.hits.append((int(fields["p"]), int(fields["digits"]), fields["verdict"]))
        pending.clear()

    for lineno, line in enumerate(lines[2 + nfilters :], start=3 + nfilters):
        action, _, rest = line.partition(" ")
        if action == "skip":
            pending.append((action, _parse_tokens(path, lineno, rest, {"p", "q"})))
        elif action == "test":
            pending.append(
                (action, _parse_tokens(path, lineno, rest, {"p", "verdict"}, optional={"witness"}))
            )
        elif action == "hit":
            fields = _parse_tokens(path, lineno, rest, {"p", "digits", "verdict"})
            if not (fields["p"].isdigit() and fields["digits"].isdigit()):
                raise CheckpointError(f"{path}:{lineno}: non-integer hit fields")
            pending.append((action, fields))
        elif action == "next":
            try:
                nxt = int(rest)
            except ValueError:
                raise CheckpointError(f"{path}:{lineno}: bad next index {rest!r}") from None
            if nxt <= state.next_p:
                raise CheckpointError(f"{path}:{lineno}: next index does not increase")
            apply_pending()
            state.next_p = nxt
        elif action == "summary":
            fields = _parse_tokens(path, lineno, rest, {"tested", "skipped", "hits"})
            apply_pending()
            if (
                fields["tested"] != str(state.tested)
                or fields["skipped"] != str(state.total_skipped)
                or fields["hits"] != str(len(state.hits))
            ):
                raise CheckpointError(f"{path}:{lineno}: summary does not match the event log")
            state.complete = True
        else:
            raise CheckpointError(f"{path}:{lineno}: unknown record {action!r}")
    # events after the last "next" belong to an interrupted candidate; they
    # are regenerated when that candidate is re-run
    return state


def _parse_tokens(
    path: str | Path,
    lineno: int,
    rest: str,
    required: set[str],
    optional: set[str] = frozenset(),
) -> dict[str, str]:
    fields: dict[str, str] = {}
    for token in rest.split():
        key, sep, value = token.partition("=")
        if not sep or key not in required | optional:
            raise CheckpointError(f"{path}:{lineno}: unexpected token {token!r}")
        fields[key] = value
    if not required <= fields.keys():
        missing = ", ".join(sorted(required - fields.keys()))
        raise CheckpointError(f"{path}:{lineno}: missing fields: {missing}")
    return fields
