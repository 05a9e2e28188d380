import math

import pytest

from lucaskit import (
    FAMILY_T,
    FAMILY_Y,
    ComboParams,
    FamilySpec,
    IntegralityViolation,
    SeqParams,
    family_numerator,
    family_numerator_mod,
    family_value,
    known_divisor,
)
from oracles import primes_upto_trial, t_value_naive, y_value_naive

# frozen from direct recurrence computation
T_SMALL = {1: 5, 2: 31, 3: 209, 4: 1429, 5: 9791, 6: 67105, 7: 459941}
Y_SMALL = {1: 13, 2: 177, 3: 2461, 4: 34273, 5: 477357}


def test_builtin_instances():
    assert FAMILY_T.base == SeqParams(3, 1)
    assert (FAMILY_T.combo.t0, FAMILY_T.combo.t1) == (2, 4)
    assert (FAMILY_T.c, FAMILY_T.d, FAMILY_T.k) == (3, 5, 2)
    assert FAMILY_Y.base == SeqParams(4, 1)
    assert (FAMILY_Y.combo.t0, FAMILY_Y.combo.t1) == (1, 3)
    assert (FAMILY_Y.c, FAMILY_Y.d, FAMILY_Y.k) == (1, 3, 2)


def test_family_values_small():
    for p, expected in T_SMALL.items():
        assert family_value(FAMILY_T, p) == expected
    for p, expected in Y_SMALL.items():
        assert family_value(FAMILY_Y, p) == expected


def test_known_factorizations():
    assert family_value(FAMILY_Y, 2) == 3 * 59
    assert family_value(FAMILY_Y, 3) == 23 * 107
    assert family_value(FAMILY_T, 7) == 131 * 3511


def test_values_match_naive_oracle():
    for p in range(1, 60):
        assert family_value(FAMILY_T, p) == t_value_naive(p)
        assert family_value(FAMILY_Y, p) == y_value_naive(p)


def test_index_validation():
    with pytest.raises(ValueError):
        family_value(FAMILY_T, 0)
    with pytest.raises(ValueError):
        family_numerator_mod(FAMILY_T, 0, 7)
    with pytest.raises(ValueError):
        family_numerator_mod(FAMILY_T, 3, 1)


def test_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(FAMILY_T.combo, c=3, d=0)
    with pytest.raises(ValueError):
        FamilySpec(FAMILY_T.combo, c=3, d=5, k=0)
    with pytest.raises(ValueError):
        FamilySpec(FAMILY_T.combo, c=3, d=5, name="bad name")


def test_integrality_violation_for_malformed_family():
    bad = FamilySpec(ComboParams(SeqParams(3, 1), t0=2, t1=4), c=3, d=7, name="bad")
    with pytest.raises(IntegralityViolation):
        family_value(bad, 1)


def test_numerator_mod_examples():
    # classes where the numerator vanishes
    for p in (5, 11, 17, 23):  # p = 5 (mod 6)
        assert family_numerator_mod(FAMILY_Y, p, 9) == 0
    assert family_numerator_mod(FAMILY_T, 11, 25) == 0
    assert family_numerator_mod(FAMILY_T, 1, 7) == 4


def test_numerator_mod_consistency_with_exact():
    for p in range(1, 201, 7):
        exact_t = family_value(FAMILY_T, p)
        exact_y = family_value(FAMILY_Y, p)
        for m in (2, 3, 9, 100, 9973):
            assert family_numerator_mod(FAMILY_T, p, m) == (5 * exact_t) % m
            assert family_numerator_mod(FAMILY_Y, p, m) == (3 * exact_y) % m


def test_integrality_up_to_2000():
    for p in range(1, 2001):
        assert family_numerator_mod(FAMILY_T, p, 5) == 0
        assert family_numerator_mod(FAMILY_Y, p, 3) == 0
    # exact spot checks on top of the modular sweep
    for p in (1, 2, 50, 500, 2000):
        assert family_numerator(FAMILY_T, p) % 5 == 0
        assert family_numerator(FAMILY_Y, p) % 3 == 0


def test_known_divisor_rules():
    assert known_divisor(FAMILY_Y, 11) == 3
    assert known_divisor(FAMILY_Y, 7) == 13
    assert known_divisor(FAMILY_Y, 2) is None
    assert known_divisor(FAMILY_Y, 3) is None
    assert known_divisor(FAMILY_T, 11) == 5
    assert known_divisor(FAMILY_T, 3) == 11
    assert known_divisor(FAMILY_T, 17) == 31
    assert known_divisor(FAMILY_T, 29) == 71
    # 7 = 7 (mod 65), so the tabulated 131 rule applies; indeed T(7) = 131 * 3511
    assert known_divisor(FAMILY_T, 7) == 131
    assert known_divisor(FAMILY_T, 19) is None
    assert known_divisor(FAMILY_T, 37) is None


def test_known_divisor_prefers_smaller_modulus():
    # p = 137 satisfies both the (2 mod 15 -> 31) and (7 mod 65 -> 131) rules
    assert 137 % 15 == 2 and 137 % 65 == 7
    assert known_divisor(FAMILY_T, 137) == 31


def test_known_divisor_none_for_custom_family():
    custom = FamilySpec(ComboParams(SeqParams(3, 1), t0=2, t1=4), c=3, d=5, name="X")
    assert known_divisor(custom, 11) is None


def test_divisor_soundness_up_to_5000():
    # every returned divisor actually divides the value, composite p included
    for fam, d in ((FAMILY_T, 5), (FAMILY_Y, 3)):
        for p in range(1, 5001):
            q = known_divisor(fam, p)
            if q is None:
                continue
            check_modulus = q * d if d % q == 0 else q
            assert family_numerator_mod(fam, p, check_modulus) == 0, (fam.name, p, q)
    # exact confirmation on a sample
    for p in (11, 28, 105, 1001, 4997):
        q = known_divisor(FAMILY_T, p)
        if q is not None:
            assert family_value(FAMILY_T, p) % q == 0
        q = known_divisor(FAMILY_Y, p)
        if q is not None:
            assert family_value(FAMILY_Y, p) % q == 0


def test_growth_is_monotone():
    prev_t = family_value(FAMILY_T, 1)
    prev_y = family_value(FAMILY_Y, 1)
    for p in range(2, 202):
        cur_t = family_value(FAMILY_T, p)
        cur_y = family_value(FAMILY_Y, p)
        assert cur_t > prev_t
        assert cur_y > prev_y
        prev_t, prev_y = cur_t, cur_y


def test_divisors_hold_for_prime_members_small():
    # cross-check rule table against exact values at every prime p <= 300
    for p in primes_upto_trial(300):
        for fam in (FAMILY_T, FAMILY_Y):
            q = known_divisor(fam, p)
            if q is not None:
                assert family_value(fam, p) % q == 0
