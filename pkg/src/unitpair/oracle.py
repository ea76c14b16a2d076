"""Brute-force enumeration of all integer solutions of 1/a + 1/b = n/d.

Clearing denominators gives n*a*b = d*(a + b), i.e. (n*a - d)*(n*b - d) = d**2,
so n*a - d runs over the signed divisors of d**2. Walking that finite list
finds every solution. Nothing here knows about the zeta parameterization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import PRIME_BOUND, is_prime
from .errors import FactorizationOutOfRange, ValidationError
from .solver import ORACLE, PrimePair, Provenance, Solution, SolutionSet

TRIAL_DIVISION_LIMIT = 10**6

Factorization = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class OracleInstance:
    target: Fraction
    d_squared_divisors: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.target.numerator

    @property
    def d(self) -> int:
        return self.target.denominator


@dataclass
class CertificationReport:
    pair: PrimePair
    closed_form_count: int
    oracle_count: int
    missing: list[tuple[int, int]] = field(default_factory=list)
    extra: list[tuple[int, int]] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.missing and not self.extra

    def __str__(self) -> str:
        status = "match" if self.match else "MISMATCH"
        line = f"{status}, {self.closed_form_count} = {self.oracle_count}"
        if not self.match:
            line += f"; missing {self.missing}; extra {self.extra}"
        return line


def trial_factor(n: int, limit: int = TRIAL_DIVISION_LIMIT) -> list[tuple[int, int]]:
    """Factor ``n > 0`` by trial division with divisors up to ``limit``.

    Raises :class:`FactorizationOutOfRange` if a cofactor remains whose prime
    factors all exceed ``limit``.
    """
    factors = []
    rest = n
    f = 2
    while f <= limit and f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            factors.append((f, e))
        f += 1 if f == 2 else 2
    if rest > 1:
        if rest > limit:
            raise FactorizationOutOfRange(n, rest, limit)
        factors.append((rest, 1))
    return factors


def _check_factors(d: int, known: Factorization) -> None:
    product = 1
    for prime, exp in known:
        if exp < 1:
            raise ValidationError(f"exponent for {prime} must be positive, got {exp}")
        if prime < PRIME_BOUND and not is_prime(prime):
            raise ValidationError(f"{prime} in the factor list is not prime")
        product *= prime**exp
    if product != d:
        raise ValidationError(f"factors multiply to {product}, not {d}")


def _restrict(known: Factorization, d: int) -> list[tuple[int, int]]:
    """Factorization of ``d`` read off a factorization of a multiple of ``d``."""
    out = []
    for prime, _ in known:
        e = 0
        while d % prime == 0:
            d //= prime
            e += 1
        if e:
            out.append((prime, e))
    return out


def divisors_from_factorization(factors: Factorization) -> list[int]:
    divs = [1]
    for prime, exp in factors:
        divs = [x * prime**i for x in divs for i in range(exp + 1)]
    return sorted(divs)


def build_instance(n: int, d: int, known_factors: Optional[Factorization] = None) -> OracleInstance:
    """Prepare the divisor walk for 1/a + 1/b = n/d.

    ``known_factors`` is a list of ``(prime, exponent)`` for the given ``d``; the
    target is reduced to lowest terms first.
    """
    if n <= 0 or d <= 0:
        raise ValidationError(f"n and d must be positive, got {n}/{d}")
    target = Fraction(n, d)
    if known_factors is not None:
        known_factors = [(int(p), int(e)) for p, e in known_factors]
        _check_factors(d, known_factors)
        factors = _restrict(known_factors, target.denominator)
    else:
        factors = trial_factor(target.denominator)
    squared = [(prime, 2 * exp) for prime, exp in factors]
    positive = divisors_from_factorization(squared)
    signed = [-e for e in reversed(positive)] + positive
    return OracleInstance(target, tuple(signed))


def enumerate_all(inst: OracleInstance) -> SolutionSet:
    n, d = inst.n, inst.d
    d2 = d * d
    found = []
    for e in inst.d_squared_divisors:
        a_num = d + e
        b_num = d + d2 // e
        # both checks are kept on purpose
        if a_num % n or b_num % n:
            continue
        a, b = a_num // n, b_num // n
        if a == 0 or b == 0:
            continue
        found.append(Solution(a, b, Provenance(ORACLE, e)))
    return SolutionSet.build(None, found)


def oracle_for_pair(pair: PrimePair) -> SolutionSet:
    inst = build_instance(pair.q_plus_1, pair.pq, [(pair.p, 1), (pair.q, 1)])
    result = enumerate_all(inst)
    return SolutionSet(pair, result.solutions)


def certify(pair: PrimePair, closed_form: SolutionSet) -> CertificationReport:
    """Compare ``closed_form`` against the divisor walk for the same pair."""
    expected = oracle_for_pair(pair).as_set()
    got = closed_form.as_set()
    return CertificationReport(
        pair=pair,
        closed_form_count=len(got),
        oracle_count=len(expected),
        missing=sorted(expected - got),
        extra=sorted(got - expected),
    )
