"""Divisibility theorems: verification, mechanical discovery, coverage, gcd witnesses.

A divisibility theorem states "q divides F(p) for every integer
p = class_residue (mod class_modulus) with p >= 1".  Its proof data pins
the period of V modulo a check modulus M and the index residue s at which
the combination numerator vanishes mod M; because the class forces
k*p = s (mod period), that single congruence settles every member at once.

M is q*d when q divides the family divisor d (so d cannot be cancelled
mod q), and plain q otherwise.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

from .families import (
    BUILTIN_FAMILIES,
    FAMILY_T,
    FAMILY_Y,
    FamilySpec,
    family_numerator_mod,
    family_value,
)
from .periods import NotPurelyPeriodic, PeriodRecord, find_period
from .primality import classify, primes_upto

logger = logging.getLogger(__name__)

_SPOT_CHECK_MEMBERS = 50

SERIAL_HEADER = "# family q class_residue class_modulus check_modulus period index_residue"


@dataclass(frozen=True)
class TheoremProof:
    """Congruence bookkeeping that makes a theorem machine-checkable."""

    check_modulus: int
    period: int
    index_residue: int
    numerator_residue: int = 0


@dataclass(frozen=True)
class DivisibilityTheorem:
    """q | F(p) for every p >= 1 with p = class_residue (mod class_modulus)."""

    family: FamilySpec
    q: int
    class_modulus: int
    class_residue: int
    proof: TheoremProof

    def __post_init__(self) -> None:
        if self.class_modulus < 1:
            raise ValueError("class modulus must be >= 1")
        if not 0 <= self.class_residue < self.class_modulus:
            raise ValueError("class residue must lie in [0, class_modulus)")

    @property
    def prime_relevant(self) -> bool:
        """Whether the class contains infinitely many primes (Dirichlet)."""
        return math.gcd(self.class_residue, self.class_modulus) == 1

    def contains(self, p: int) -> bool:
        return p % self.class_modulus == self.class_residue

    def contains_class(self, residue: int, modulus: int) -> bool:
        """True if every integer = residue (mod modulus) is a member."""
        return (
            modulus % self.class_modulus == 0
            and residue % self.class_modulus == self.class_residue
        )

    def members(self):
        """Class members in increasing order, starting from the smallest >= 1."""
        p = self.class_residue if self.class_residue >= 1 else self.class_modulus
        while True:
            yield p
            p += self.class_modulus


@dataclass(frozen=True)
class TheoremVerdict:
    """check_theorem outcome; invalid verdicts carry a counterexample when one exists."""

    valid: bool
    counterexample: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class CoverageReport:
    """Which residues coprime to the modulus are covered by some theorem."""

    modulus: int
    covered: dict[int, DivisibilityTheorem]
    uncovered: tuple[int, ...]


@dataclass(frozen=True)
class GcdWitness:
    """gcd of two same-class family values; gcd 1 rules out a shared fixed divisor."""

    family: FamilySpec
    class_residue: int
    class_modulus: int
    p1: int
    p2: int
    gcd_value: int


def check_modulus_for(fam: FamilySpec, q: int) -> int:
    """The modulus the divisibility check must run at: q*d if q | d, else q."""
    return q * fam.d if fam.d % q == 0 else q


def _numerator_at(fam: FamilySpec, record: PeriodRecord, s: int) -> int:
    res = record.residues
    pi = record.period
    combo = fam.combo
    return (combo.t1 * res[s] - combo.base.Q * combo.t0 * res[(s - 1) % pi] + fam.c) % record.modulus


def _first_failing_member(thm: DivisibilityTheorem, check_modulus: int) -> int | None:
    """Smallest refuting member among the first spot-checked ones, primes preferred.

    A prime counterexample refutes the theorem in the form the source
    statements use (prime p), so one is reported when the window has any.
    """
    fallback = None
    for p in itertools.islice(thm.members(), _SPOT_CHECK_MEMBERS):
        if family_numerator_mod(thm.family, p, check_modulus) != 0:
            if classify(p).is_prime:
                return p
            if fallback is None:
                fallback = p
    return fallback


def check_theorem(thm: DivisibilityTheorem) -> TheoremVerdict:
    """Verify a theorem's proof data and spot-check its first 50 members.

    Valid means: the check modulus and period are as stated, the class pins
    k*p to the stated index residue with vanishing numerator over one
    period, and direct modular divisibility holds for the leading members.
    """
    fam = thm.family
    M = check_modulus_for(fam, thm.q)

    def invalid(reason: str) -> TheoremVerdict:
        return TheoremVerdict(False, _first_failing_member(thm, M), reason)

    if M != thm.proof.check_modulus:
        return invalid(f"check modulus should be {M}, proof says {thm.proof.check_modulus}")
    try:
        record = find_period(fam.base, M)
    except NotPurelyPeriodic as exc:
        return invalid(str(exc))
    pi = record.period
    if pi != thm.proof.period:
        return invalid(f"period of V mod {M} is {pi}, proof says {thm.proof.period}")
    if thm.proof.numerator_residue != 0:
        return invalid("proof numerator residue must be 0")
    s = thm.proof.index_residue
    if not 0 <= s < pi:
        return invalid(f"index residue {s} outside [0, {pi})")
    if (fam.k * thm.class_modulus) % pi != 0 or (fam.k * thm.class_residue) % pi != s:
        return invalid(f"class does not pin k*p = {s} (mod {pi})")
    if _numerator_at(fam, record, s) != 0:
        return invalid(f"combination numerator at index {s} is nonzero mod {M}")
    bad = _first_failing_member(thm, M)
    if bad is not None:
        return TheoremVerdict(
            False, bad, f"{thm.q} does not divide the family value at p={bad}"
        )
    return TheoremVerdict(True)


def _index_class(k: int, s: int, pi: int) -> tuple[int, int] | None:
    """Translate "k*p = s (mod pi)" into a residue class of p, or None.

    Solvable iff gcd(k, pi) divides s; for k = 2 this is the familiar split:
    odd period gives p = s/2 (mod pi) via the inverse of 2, even period
    admits only even s and gives modulus pi/2.
    """
    g = math.gcd(k, pi)
    if s % g:
        return None
    m = pi // g
    if m == 1:
        return 0, 1
    r = (s // g) * pow(k // g, -1, m) % m
    return r, m


def discover(
    fam: FamilySpec, q_max: int, *, prime_relevant_only: bool = False
) -> list[DivisibilityTheorem]:
    """All theorems "q | F(p) on a residue class" for primes q <= q_max.

    For each candidate q the residue cycle of V modulo the check modulus is
    scanned for indexes with vanishing combination numerator, and each such
    index is translated into a class of p.  Classes are emitted at their
    smallest modulus.  Candidates with gcd(Q, M) != 1 are skipped with a
    logged notice.  Output is deduplicated (smallest index residue kept)
    and sorted by (q, class_modulus, class_residue).
    """
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    found: dict[tuple[int, int, int], DivisibilityTheorem] = {}
    for q in primes_upto(q_max):
        M = check_modulus_for(fam, q)
        if math.gcd(fam.base.Q, M) != 1:
            logger.info("discover: skipping q=%d, gcd(Q=%d, M=%d) != 1", q, fam.base.Q, M)
            continue
        record = find_period(fam.base, M)
        pi = record.period
        for s in range(pi):
            if _numerator_at(fam, record, s) != 0:
                continue
            cls = _index_class(fam.k, s, pi)
            if cls is None:
                continue
            r, m = cls
            key = (q, m, r)
            prior = found.get(key)
            if prior is None or s < prior.proof.index_residue:
                found[key] = DivisibilityTheorem(fam, q, m, r, TheoremProof(M, pi, s))
    theorems = [found[key] for key in sorted(found)]
    if prime_relevant_only:
        theorems = [t for t in theorems if t.prime_relevant]
    return theorems


def coverage(
    fam: FamilySpec, theorems: list[DivisibilityTheorem], modulus: int
) -> CoverageReport:
    """Partition the residues coprime to modulus into covered and uncovered.

    A residue r is covered when some theorem's class contains every integer
    = r (mod modulus); partial overlaps do not count.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    mine = sorted(
        (t for t in theorems if t.family == fam),
        key=lambda t: (t.q, t.class_modulus, t.class_residue),
    )
    covered: dict[int, DivisibilityTheorem] = {}
    uncovered = []
    for r in range(modulus):
        if math.gcd(r, modulus) != 1:
            continue
        witness = next((t for t in mine if t.contains_class(r, modulus)), None)
        if witness is None:
            uncovered.append(r)
        else:
            covered[r] = witness
    return CoverageReport(modulus, covered, tuple(uncovered))


def gcd_witness(
    fam: FamilySpec, class_residue: int, class_modulus: int, p1: int, p2: int
) -> GcdWitness:
    """Exact gcd of F(p1) and F(p2) for two distinct members of one class."""
    if class_modulus < 1:
        raise ValueError("class modulus must be >= 1")
    if p1 == p2:
        raise ValueError("p1 and p2 must be distinct")
    if p1 % class_modulus != class_residue % class_modulus:
        raise ValueError(f"p1={p1} is not in the class {class_residue} (mod {class_modulus})")
    if p2 % class_modulus != class_residue % class_modulus:
        raise ValueError(f"p2={p2} is not in the class {class_residue} (mod {class_modulus})")
    g = math.gcd(family_value(fam, p1), family_value(fam, p2))
    return GcdWitness(fam, class_residue, class_modulus, p1, p2, g)


def builtin_theorems() -> list[DivisibilityTheorem]:
    """The seven built-in divisibility rules for Y and T, as classically stated."""
    return [
        DivisibilityTheorem(FAMILY_Y, 3, 6, 5, TheoremProof(9, 6, 4)),
        DivisibilityTheorem(FAMILY_Y, 13, 6, 1, TheoremProof(13, 12, 2)),
        DivisibilityTheorem(FAMILY_T, 5, 5, 1, TheoremProof(25, 10, 2)),
        DivisibilityTheorem(FAMILY_T, 11, 5, 3, TheoremProof(11, 5, 1)),
        DivisibilityTheorem(FAMILY_T, 31, 15, 2, TheoremProof(31, 15, 4)),
        DivisibilityTheorem(FAMILY_T, 71, 35, 29, TheoremProof(71, 35, 23)),
        DivisibilityTheorem(FAMILY_T, 131, 65, 7, TheoremProof(131, 65, 14)),
    ]


def serialize_theorems(theorems: list[DivisibilityTheorem]) -> str:
    """One line per theorem: family q r m M period s, space separated.

    The format is stable and bit-exact across runs for equal input.
    """
    lines = [SERIAL_HEADER]
    for t in theorems:
        if not t.family.name:
            raise ValueError("only named families can be serialized")
        lines.append(
            f"{t.family.name} {t.q} {t.class_residue} {t.class_modulus} "
            f"{t.proof.check_modulus} {t.proof.period} {t.proof.index_residue}"
        )
    return "\n".join(lines) + "\n"


def parse_theorems(
    text: str, families: list[FamilySpec] | None = None
) -> list[DivisibilityTheorem]:
    """Inverse of serialize_theorems.

    Family names resolve against the built-ins plus any extra specs passed
    in; unknown names and malformed lines raise ValueError.
    """
    registry = dict(BUILTIN_FAMILIES)
    if families:
        registry.update({f.name: f for f in families if f.name})
    theorems = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 7:
            raise ValueError(f"theorem line {lineno}: expected 7 fields, got {len(parts)}")
        name = parts[0]
        if name not in registry:
            raise ValueError(f"theorem line {lineno}: unknown family {name!r}")
        try:
            q, r, m, M, period, s = (int(x) for x in parts[1:])
        except ValueError:
            raise ValueError(f"theorem line {lineno}: non-integer field") from None
        theorems.append(
            DivisibilityTheorem(registry[name], q, m, r, TheoremProof(M, period, s))
        )
    return theorems
