"""Lucas V-sequence toolkit.

Exact and modular Lucas V-sequences, special integer families built on
them, modular period detection, divisibility-theorem discovery and
verification, and a checkpointed probable-prime search.
"""

from .families import (
    BUILTIN_FAMILIES,
    FAMILY_T,
    FAMILY_Y,
    FamilySpec,
    IntegralityViolation,
    family_numerator,
    family_numerator_mod,
    family_value,
    known_divisor,
)
from .lucas import ComboParams, SeqParams, v_exact, v_mod, v_pair_mod, w_exact, w_mod
from .periods import NotPurelyPeriodic, PeriodRecord, find_period, residue_table
from .primality import (
    COMPOSITE_BY_TEST,
    COMPOSITE_UNIT,
    COMPOSITE_WITH_FACTOR,
    PROBABLE_PRIME,
    PROVEN_PRIME_SMALL,
    PrimalityVerdict,
    classify,
    is_probable_prime,
    primes_upto,
)
from .prime_search import (
    CheckpointError,
    FilterAuditError,
    SearchCheckpoint,
    load_checkpoint,
    search,
)
from .theorems import (
    CoverageReport,
    DivisibilityTheorem,
    GcdWitness,
    TheoremProof,
    TheoremVerdict,
    check_modulus_for,
    check_theorem,
    coverage,
    discover,
    gcd_witness,
    builtin_theorems,
    parse_theorems,
    serialize_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_FAMILIES",
    "COMPOSITE_BY_TEST",
    "COMPOSITE_UNIT",
    "COMPOSITE_WITH_FACTOR",
    "CheckpointError",
    "ComboParams",
    "CoverageReport",
    "DivisibilityTheorem",
    "FAMILY_T",
    "FAMILY_Y",
    "FamilySpec",
    "FilterAuditError",
    "GcdWitness",
    "IntegralityViolation",
    "NotPurelyPeriodic",
    "PROBABLE_PRIME",
    "PROVEN_PRIME_SMALL",
    "PeriodRecord",
    "PrimalityVerdict",
    "SearchCheckpoint",
    "SeqParams",
    "TheoremProof",
    "TheoremVerdict",
    "check_modulus_for",
    "check_theorem",
    "classify",
    "coverage",
    "discover",
    "family_numerator",
    "family_numerator_mod",
    "family_value",
    "find_period",
    "gcd_witness",
    "is_probable_prime",
    "known_divisor",
    "load_checkpoint",
    "builtin_theorems",
    "parse_theorems",
    "primes_upto",
    "residue_table",
    "search",
    "serialize_theorems",
    "v_exact",
    "v_mod",
    "v_pair_mod",
    "w_exact",
    "w_mod",
]
