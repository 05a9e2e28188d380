"""Period detection for V_n modulo m, with classical-style residue tables."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lucas import SeqParams


class NotPurelyPeriodic(ValueError):
    """gcd(Q, m) != 1, so the pair-state map is not invertible mod m."""


@dataclass(frozen=True)
class PeriodRecord:
    """Minimal period and one full residue cycle of V_n mod modulus."""

    params: SeqParams
    modulus: int
    period: int
    residues: tuple[int, ...]


def find_period(params: SeqParams, m: int) -> PeriodRecord:
    """Minimal period of V_n mod m together with its residue cycle.

    Requires gcd(Q, m) = 1: the step map on pairs is then invertible, the
    sequence is purely periodic from n = 0, and the first return of the
    pair state to (2, P) mod m gives the minimal period directly.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(params.Q, m) != 1:
        raise NotPurelyPeriodic(f"gcd(Q={params.Q}, m={m}) != 1")
    P = params.P % m
    Q = params.Q % m
    start = (2 % m, P)
    a, b = start
    residues = []
    # the pair-state space has at most m*m elements, so return is guaranteed
    for _ in range(m * m + 1):
        residues.append(a)
        a, b = b, (P * b - Q * a) % m
        if (a, b) == start:
            return PeriodRecord(params, m, len(residues), tuple(residues))
    raise RuntimeError(f"period detection exceeded {m * m} steps; this is a bug")


def residue_table(record: PeriodRecord, upto: int) -> list[int]:
    """[V_0 mod m, ..., V_upto mod m] by cycling the stored period."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    residues, period = record.residues, record.period
    return [residues[n % period] for n in range(upto + 1)]
