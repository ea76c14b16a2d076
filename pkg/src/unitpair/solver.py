"""Closed-form solutions of 1/a + 1/b = (q+1)/(pq).

For distinct primes p, q with q+1 | p-1 every integer solution is either one
of the two trivial pairs (p, pq), (pq, p), or comes from a divisor zeta of q**2
with zeta = 1 (mod q+1) via

    a = (zeta*p**2 + p*q) / (q+1),    b = (zeta*p*q + q**2) / (zeta*(q+1))

together with its swap (b, a).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .arith import PRIME_BOUND, divide_exact, gcd, is_prime, signed_divisors_of_prime_square
from .errors import Degenerate, DivisibilityFails, NotDistinct, NotDivisible, NotPrime, UnsupportedMagnitude


@dataclass(frozen=True)
class PrimePair:
    p: int
    q: int

    @property
    def q_plus_1(self) -> int:
        return self.q + 1

    @property
    def pq(self) -> int:
        return self.p * self.q

    @property
    def p_minus_1(self) -> int:
        return self.p - 1

    @property
    def target(self) -> Fraction:
        return Fraction(self.q + 1, self.pq)


@dataclass(frozen=True)
class ZetaParam:
    zeta: int
    alpha: int


TRIVIAL = "trivial"
ZETA = "zeta"
ORACLE = "oracle"


@dataclass(frozen=True)
class Provenance:
    """Where a solution came from.

    ``kind`` is one of ``"trivial"``, ``"zeta"`` or ``"oracle"``; ``value`` is the
    zeta value or the oracle divisor. ``swapped`` marks the (b, a) image of a
    zeta solution.
    """

    kind: str
    value: Optional[int] = None
    swapped: bool = False

    def __str__(self) -> str:
        if self.kind == TRIVIAL:
            return TRIVIAL
        tag = f"{self.kind}:{self.value}"
        return tag + "-swap" if self.swapped else tag


@dataclass(frozen=True)
class Solution:
    a: int
    b: int
    provenance: Provenance = field(compare=False)
    k: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise Degenerate(f"solution has a zero entry: ({self.a}, {self.b})")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def swapped(self, p: Optional[int] = None) -> "Solution":
        """The (b, a) image; ``k`` is recomputed when ``p`` is given and divides the new a."""
        prov = self.provenance
        if prov.kind != TRIVIAL:
            prov = Provenance(prov.kind, prov.value, not prov.swapped)
        k = self.b // p if p and self.b % p == 0 else None
        return Solution(self.b, self.a, prov, k)


@dataclass(frozen=True)
class SolutionSet:
    """Deduplicated solutions sorted ascending by (a, b)."""

    pair: Optional[PrimePair]
    solutions: tuple[Solution, ...]

    @classmethod
    def build(cls, pair: Optional[PrimePair], solutions: Iterable[Solution]) -> "SolutionSet":
        seen: dict[tuple[int, int], Solution] = {}
        for s in solutions:
            seen.setdefault(s.pair, s)
        return cls(pair, tuple(seen[key] for key in sorted(seen)))

    def pairs(self) -> list[tuple[int, int]]:
        return [s.pair for s in self.solutions]

    def as_set(self) -> set[tuple[int, int]]:
        return {s.pair for s in self.solutions}

    def positive(self) -> "SolutionSet":
        return SolutionSet(self.pair, tuple(s for s in self.solutions if s.a > 0 and s.b > 0))

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[Solution]:
        return iter(self.solutions)


def validate_pair(p: int, q: int) -> PrimePair:
    """Check the theorem's hypothesis and return a :class:`PrimePair`.

    Raises the specific :class:`~unitpair.errors.ValidationError` subclass for the
    first failed precondition, or :class:`UnsupportedMagnitude`.
    """
    for value in (p, q):
        if value >= PRIME_BOUND:
            raise UnsupportedMagnitude(value, PRIME_BOUND)
    if not is_prime(p):
        raise NotPrime("p", p)
    if not is_prime(q):
        raise NotPrime("q", q)
    if p == q:
        raise NotDistinct(p)
    if (p - 1) % (q + 1):
        raise DivisibilityFails(p, q)
    pair = PrimePair(p, q)
    # p > q+1 >= 3 so p cannot divide q+1; q divides neither q+1 nor, hence, the gcd.
    assert gcd(pair.q_plus_1, pair.pq) == 1
    return pair


def enumerate_zeta(pair: PrimePair) -> list[ZetaParam]:
    """Divisors zeta of q**2 with zeta = 1 (mod q+1), each with alpha = (zeta-1)/(q+1)."""
    m = pair.q_plus_1
    return [
        ZetaParam(z, divide_exact(z - 1, m))
        for z in signed_divisors_of_prime_square(pair.q)
        if (z - 1) % m == 0
    ]


def trivial_solutions(pair: PrimePair) -> list[Solution]:
    prov = Provenance(TRIVIAL)
    return [
        Solution(pair.p, pair.pq, prov, k=1),
        Solution(pair.pq, pair.p, prov, k=pair.q),
    ]


def solution_from_zeta(pair: PrimePair, z: ZetaParam) -> Solution:
    """Evaluate the zeta formula with exact division at every step.

    Raises :class:`Degenerate` if any division is inexact or a or b is zero.
    """
    p, q, m, zeta = pair.p, pair.q, pair.q_plus_1, z.zeta
    try:
        a = divide_exact(zeta * p * p + p * q, m)
        b = divide_exact(zeta * p * q + q * q, zeta * m)
        k = divide_exact(zeta * p + q, m)
    except (NotDivisible, ZeroDivisionError) as exc:
        raise Degenerate(f"zeta={zeta}: {exc}") from exc
    if a == 0 or b == 0:
        raise Degenerate(f"zeta={zeta} gives a zero entry ({a}, {b})")
    return Solution(a, b, Provenance(ZETA, zeta), k)


def swapped_solution_from_zeta(pair: PrimePair, z: ZetaParam) -> Solution:
    """Evaluate the mirrored formula (a and b exchanged) directly, without swapping."""
    p, q, m, zeta = pair.p, pair.q, pair.q_plus_1, z.zeta
    try:
        a = divide_exact(zeta * p * q + q * q, zeta * m)
        b = divide_exact(zeta * p * p + p * q, m)
    except (NotDivisible, ZeroDivisionError) as exc:
        raise Degenerate(f"zeta={zeta}: {exc}") from exc
    k = a // p if a % p == 0 else None
    return Solution(a, b, Provenance(ZETA, zeta, swapped=True), k)


def solve(pair: PrimePair, positive_only: bool = False) -> SolutionSet:
    """All integer solutions for ``pair`` (only a, b > 0 when ``positive_only``)."""
    found = list(trivial_solutions(pair))
    for z in enumerate_zeta(pair):
        try:
            s = solution_from_zeta(pair, z)
        except Degenerate:
            continue
        found.append(s)
        found.append(s.swapped(pair.p))
    result = SolutionSet.build(pair, found)
    return result.positive() if positive_only else result


def verify_solution(pair: PrimePair, a: int, b: int) -> bool:
    if a == 0 or b == 0:
        return False
    return pair.pq * (a + b) == pair.q_plus_1 * a * b
