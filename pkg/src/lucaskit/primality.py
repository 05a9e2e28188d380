"""Primality classification for arbitrary-precision integers.

Small inputs are settled by trial division; 64-bit inputs by the strong
test to the first twelve prime bases (a published complete base set for
that range); anything larger gets the combined strong base-2 plus strong
Lucas-Selfridge probable-prime test, which has no known counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

COMPOSITE_WITH_FACTOR = "composite-with-factor"
COMPOSITE_BY_TEST = "composite-by-test"
COMPOSITE_UNIT = "composite-by-convention"
PROBABLE_PRIME = "probable-prime"
PROVEN_PRIME_SMALL = "proven-prime-small"

_PRIME_VERDICTS = frozenset({PROBABLE_PRIME, PROVEN_PRIME_SMALL})

# the first 12 prime bases are a complete strong-test base set well past 2**64
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64

_TRIAL_BOUND = 1000


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of classify(); witness is a factor or a refuting test base."""

    n: int
    verdict: str
    witness: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.verdict in _PRIME_VERDICTS


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


_TRIAL_PRIMES = tuple(primes_upto(_TRIAL_BOUND))


def classify(n: int) -> PrimalityVerdict:
    """Classify n >= 1.

    Composite verdicts are always correct.  Prime verdicts are proven for
    n < 2**64 and "probable-prime" (Baillie-PSW strength) above that.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return PrimalityVerdict(1, COMPOSITE_UNIT)
    for p in _TRIAL_PRIMES:
        if p * p > n:
            return PrimalityVerdict(n, PROVEN_PRIME_SMALL)
        if n % p == 0:
            if n == p:
                return PrimalityVerdict(n, PROVEN_PRIME_SMALL)
            return PrimalityVerdict(n, COMPOSITE_WITH_FACTOR, witness=p)
    if n < _DETERMINISTIC_LIMIT:
        for a in _DETERMINISTIC_BASES:
            if not _strong_prp(n, a):
                return PrimalityVerdict(n, COMPOSITE_BY_TEST, witness=a)
        return PrimalityVerdict(n, PROVEN_PRIME_SMALL)
    if not _strong_prp(n, 2):
        return PrimalityVerdict(n, COMPOSITE_BY_TEST, witness=2)
    if not _strong_lucas_prp(n):
        return PrimalityVerdict(n, COMPOSITE_BY_TEST)
    return PrimalityVerdict(n, PROBABLE_PRIME)


def is_probable_prime(n: int) -> bool:
    """Convenience wrapper: n >= 2 and classify(n) reports prime."""
    return n >= 2 and classify(n).is_prime


def _strong_prp(n: int, a: int) -> bool:
    """Strong Fermat probable-prime test to base a; n odd and coprime to a here."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
        if x == 1:
            return False
    return False


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi symbol requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _lucas_uv_mod(n: int, P: int, Q: int, k: int) -> tuple[int, int, int]:
    """(U_k, V_k, Q^k) mod n by the binary ladder; k >= 1, n odd."""
    D = P * P - 4 * Q
    u, v, qk = 1, P % n, Q % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            # odd step: the /2 in the index-raising identities is a modular
            # halving, valid because n is odd
            u, v = P * u + v, D * u + P * v
            if u & 1:
                u += n
            if v & 1:
                v += n
            u = (u >> 1) % n
            v = (v >> 1) % n
            qk = qk * Q % n
    return u % n, v % n, qk


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas test with Selfridge parameters; n odd, no tiny factors.

    Squares are rejected up front since the Selfridge search for a D with
    Jacobi(D, n) = -1 cannot terminate on them.
    """
    r = math.isqrt(n)
    if r * r == n:
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and D % n != 0:
            return False  # D shares a factor with n
        D = -(D + 2) if D > 0 else -(D - 2)
    Q = (1 - D) // 4
    d = n + 1
    s = (d & -d).bit_length() - 1
    d >>= s
    u, v, qk = _lucas_uv_mod(n, 1, Q, d)
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False
