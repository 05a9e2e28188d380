"""Special integer families F(p) = (t1*V_{kp} - Q*t0*V_{kp-1} + c) / d.

The two built-in instances are

    T(p) = (4*V_{2p} - 2*V_{2p-1} + 3) / 5   with (P, Q) = (3, 1)
    Y(p) = (3*V_{2p} -   V_{2p-1} + 1) / 3   with (P, Q) = (4, 1)

The index p may be any positive integer; restricting it to primes is a
caller-side filter, never a precondition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lucas import ComboParams, SeqParams, w_exact, w_mod


class IntegralityViolation(ValueError):
    """The stated divisor d does not divide the combination numerator."""


@dataclass(frozen=True)
class FamilySpec:
    """A family of special integers: combination, constant, divisor, index multiplier."""

    combo: ComboParams
    c: int
    d: int
    k: int = 2
    name: str = ""

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("divisor d must be >= 1")
        if self.k < 1:
            raise ValueError("index multiplier k must be >= 1")
        if any(ch.isspace() for ch in self.name):
            raise ValueError("family name must not contain whitespace")

    @property
    def base(self) -> SeqParams:
        return self.combo.base


FAMILY_T = FamilySpec(ComboParams(SeqParams(3, 1), t0=2, t1=4), c=3, d=5, k=2, name="T")
FAMILY_Y = FamilySpec(ComboParams(SeqParams(4, 1), t0=1, t1=3), c=1, d=3, k=2, name="Y")

BUILTIN_FAMILIES = {fam.name: fam for fam in (FAMILY_T, FAMILY_Y)}


def family_numerator(fam: FamilySpec, p: int) -> int:
    """The exact numerator t1*V_{kp} - Q*t0*V_{kp-1} + c."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return w_exact(fam.combo, fam.k * p) + fam.c


def family_value(fam: FamilySpec, p: int) -> int:
    """F(p) as an exact integer.

    Divisibility of the numerator by d is checked on every call; a failure
    signals a malformed custom FamilySpec and raises IntegralityViolation.
    """
    numerator = family_numerator(fam, p)
    value, rem = divmod(numerator, fam.d)
    if rem:
        raise IntegralityViolation(
            f"{fam.d} does not divide the numerator of {fam.name or 'family'} at p={p}"
        )
    return value


def family_numerator_mod(fam: FamilySpec, p: int, m: int) -> int:
    """Numerator mod m using modular sequence arithmetic only."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return (w_mod(fam.combo, fam.k * p, m) + fam.c) % m


# (class modulus, class residue, prime divisor); scanned in order, so the
# smaller-modulus rule wins when classes overlap, ties by smaller divisor.
_DIVISOR_RULES: dict[str, tuple[tuple[int, int, int], ...]] = {
    "Y": (
        (6, 5, 3),
        (6, 1, 13),
    ),
    "T": (
        (5, 1, 5),
        (5, 3, 11),
        (15, 2, 31),
        (35, 29, 71),
        (65, 7, 131),
    ),
}


def known_divisor(fam: FamilySpec, p: int) -> int | None:
    """The tabulated prime divisor of F(p) for p's residue class, or None.

    The tables hold only the rules for the built-in T and Y families;
    custom families always get None.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    for modulus, residue, q in _DIVISOR_RULES.get(fam.name, ()):
        if p % modulus == residue:
            return q
    return None
