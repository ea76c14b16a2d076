"""Exact integer primitives: gcd, exact division, primality, prime-square divisors.

Python ints are unbounded, so nothing here can overflow.
"""
from __future__ import annotations

import math

from .errors import NotDivisible, NotPrime, UnsupportedMagnitude

PRIME_BOUND = 1 << 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# (exclusive upper bound, witnesses) - the smallest strong pseudoprime to all
# listed bases is the bound itself.
_WITNESS_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, _SMALL_PRIMES),
)


def gcd(x: int, y: int) -> int:
    """Nonnegative gcd; ``gcd(0, 0) == 0``."""
    return math.gcd(x, y)


def divide_exact(n: int, d: int) -> int:
    """Return ``n // d`` when ``d`` divides ``n``, else raise :class:`NotDivisible`.

    Raises ``ZeroDivisionError`` for ``d == 0``.
    """
    if d == 0:
        raise ZeroDivisionError("divide_exact by zero")
    m, r = divmod(n, d)
    if r:
        raise NotDivisible(n, d)
    return m


def divides(d: int, n: int) -> bool:
    return d != 0 and n % d == 0


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality for ``n < 2**64``.

    Small-prime trial division followed by Miller-Rabin with a witness set
    known to have no strong pseudoprimes below ``n``. Raises
    :class:`UnsupportedMagnitude` for ``n >= 2**64`` instead of guessing.
    """
    if n >= PRIME_BOUND:
        raise UnsupportedMagnitude(n, PRIME_BOUND)
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    if n < 37 * 37:
        return True

    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for bound, witnesses in _WITNESS_TIERS:
        if n < bound:
            break
    return all(_strong_probable_prime(n, w, d, s) for w in witnesses)


def signed_divisors_of_prime_square(q: int) -> list[int]:
    """All integer divisors of ``q**2`` for prime ``q``, ascending.

    >>> signed_divisors_of_prime_square(3)
    [-9, -3, -1, 1, 3, 9]
    """
    if not is_prime(q):
        raise NotPrime("q", q)
    positive = [1, q, q * q]
    return [-e for e in reversed(positive)] + positive
