"""Exact and modular evaluation of Lucas V-sequences and their combinations.

The V-sequence for parameters (P, Q) is defined by V_0 = 2, V_1 = P and
V_n = P*V_{n-1} - Q*V_{n-2}.  The combination sequence for coefficients
(t0, t1) on top of a V-sequence is W_n = t1*V_n - Q*t0*V_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SeqParams:
    """Recurrence parameters; both must be nonzero."""

    P: int
    Q: int

    def __post_init__(self) -> None:
        if self.P == 0 or self.Q == 0:
            raise ValueError("P and Q must be nonzero")


@dataclass(frozen=True)
class ComboParams:
    """A V-sequence plus nonzero combination coefficients t0, t1."""

    base: SeqParams
    t0: int
    t1: int

    def __post_init__(self) -> None:
        if self.t0 == 0 or self.t1 == 0:
            raise ValueError("t0 and t1 must be nonzero")


def _v_pair_exact(params: SeqParams, n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError("index must be nonnegative")
    P, Q = params.P, params.Q
    a, b = 2, P
    for _ in range(n):
        a, b = b, P * b - Q * a
    return a, b


def v_exact(params: SeqParams, n: int) -> int:
    """V_n as an exact integer; n >= 0."""
    return _v_pair_exact(params, n)[0]


def v_pair_mod(params: SeqParams, n: int, m: int) -> tuple[int, int]:
    """(V_n mod m, V_{n+1} mod m) by fast doubling, O(log n) multiplications.

    Walks the bits of n keeping the state (V_k, V_{k+1}, Q^k) and stepping
    with V_{2k} = V_k^2 - 2Q^k and V_{2k+1} = V_k*V_{k+1} - P*Q^k.
    Results are canonical in [0, m) even for negative P or Q.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if n < 0:
        raise ValueError("index must be nonnegative")
    P = params.P % m
    Q = params.Q % m
    a, b = 2 % m, P  # (V_0, V_1)
    qk = 1  # Q^k, kept canonical so negative Q needs no special casing
    for bit in bin(n)[2:] if n else "":
        if bit == "0":
            a, b = (a * a - 2 * qk) % m, (a * b - P * qk) % m
            qk = qk * qk % m
        else:
            a, b = (a * b - P * qk) % m, (b * b - 2 * qk * Q) % m
            qk = qk * qk * Q % m
    return a, b


def v_mod(params: SeqParams, n: int, m: int) -> int:
    """V_n mod m; must agree with v_exact(params, n) % m for all inputs."""
    return v_pair_mod(params, n, m)[0]


def w_exact(combo: ComboParams, n: int) -> int:
    """W_n = t1*V_n - Q*t0*V_{n-1}, exactly; n >= 1."""
    if n < 1:
        raise ValueError("index must be >= 1")
    a, b = _v_pair_exact(combo.base, n - 1)  # (V_{n-1}, V_n)
    return combo.t1 * b - combo.base.Q * combo.t0 * a


def w_mod(combo: ComboParams, n: int, m: int) -> int:
    """W_n mod m from two adjacent V residues; no exact big integers."""
    if n < 1:
        raise ValueError("index must be >= 1")
    a, b = v_pair_mod(combo.base, n - 1, m)
    return (combo.t1 * b - combo.base.Q * combo.t0 * a) % m
