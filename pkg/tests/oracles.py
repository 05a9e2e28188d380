"""Independent brute-force oracles used to pin expected test values.

Everything here deliberately avoids the library's fast paths: sequences
are stepped term by term and primality is settled by trial division.
"""

import math


def v_naive_list(P, Q, n):
    """[V_0, ..., V_n] by stepping the recurrence directly."""
    values = [2, P]
    for _ in range(n - 1):
        values.append(P * values[-1] - Q * values[-2])
    return values[: n + 1]


def v_naive(P, Q, n):
    return v_naive_list(P, Q, max(n, 1))[n]


def v_naive_mod(P, Q, n, m):
    """V_n mod m by stepping with reduced terms."""
    a, b = 2 % m, P % m
    for _ in range(n):
        a, b = b, (P * b - Q * a) % m
    return a


def v_naive_mod_walk(P, Q, n_max, m):
    """[V_0 mod m, ..., V_{n_max} mod m] in one pass."""
    out = [2 % m]
    a, b = 2 % m, P % m
    for _ in range(n_max):
        a, b = b, (P * b - Q * a) % m
        out.append(a)
    return out


def family_value_naive(P, Q, t0, t1, c, d, k, p):
    """(t1*V_{kp} - Q*t0*V_{kp-1} + c) / d via the naive sequence."""
    vs = v_naive_list(P, Q, k * p)
    numerator = t1 * vs[k * p] - Q * t0 * vs[k * p - 1] + c
    assert numerator % d == 0
    return numerator // d


def t_value_naive(p):
    return family_value_naive(3, 1, 2, 4, 3, 5, 2, p)


def y_value_naive(p):
    return family_value_naive(4, 1, 1, 3, 1, 3, 2, p)


def is_prime_trial(n):
    """Complete trial division; correct for any n >= 1 that fits the time budget."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    limit = math.isqrt(n)
    while f <= limit:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto_trial(limit):
    return [n for n in range(2, limit + 1) if is_prime_trial(n)]
