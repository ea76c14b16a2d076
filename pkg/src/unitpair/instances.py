"""Valid (p, q) pairs: primes p = 1 (mod q+1) for a given prime q."""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .arith import PRIME_BOUND, is_prime
from .errors import NotPrime, UnsupportedMagnitude, ValidationError
from .solver import PrimePair, validate_pair


@dataclass(frozen=True)
class SearchQuery:
    q: int
    p_min: int
    p_max: int
    limit: int = 1000

    def __post_init__(self):
        if not 2 <= self.p_min <= self.p_max:
            raise ValidationError(f"need 2 <= min <= max, got [{self.p_min}, {self.p_max}]")
        if self.p_max >= PRIME_BOUND:
            raise UnsupportedMagnitude(self.p_max, PRIME_BOUND)
        if self.limit < 1:
            raise ValidationError(f"limit must be >= 1, got {self.limit}")


def find_pairs(query: SearchQuery) -> list[PrimePair]:
    """Scan the progression 1, 1 + (q+1), 1 + 2(q+1), ... inside [p_min, p_max]."""
    q = query.q
    if q >= PRIME_BOUND:
        raise UnsupportedMagnitude(q, PRIME_BOUND)
    if not is_prime(q):
        raise NotPrime("q", q)
    step = q + 1
    # first p >= p_min with p = 1 (mod step)
    p = query.p_min + (1 - query.p_min) % step
    out = []
    while p <= query.p_max and len(out) < query.limit:
        if p != q and is_prime(p):
            out.append(validate_pair(p, q))
        p += step
    return out


CORPUS_QS = (2, 3, 5, 7, 11, 13)
CORPUS_PQ_MAX = 10**9
_CORPUS_HEAD = ((7, 2), (5, 3), (1009, 2))
_PER_BAND = 5
_BAND_STARTS = tuple(10**j for j in range(1, 9)) + (990_000_000,)


@functools.cache
def _full_corpus() -> tuple[PrimePair, ...]:
    pairs = [validate_pair(p, q) for p, q in _CORPUS_HEAD]
    seen = {(pr.p, pr.q) for pr in pairs}
    for q in CORPUS_QS:
        p_max = CORPUS_PQ_MAX // q
        for start in _BAND_STARTS:
            p_min = max(2, start // q)
            if p_min > p_max:
                continue
            for pr in find_pairs(SearchQuery(q, p_min, p_max, _PER_BAND)):
                if (pr.p, pr.q) not in seen:
                    seen.add((pr.p, pr.q))
                    pairs.append(pr)
    return tuple(pairs)



def corpus_size() -> int:
    return len(_full_corpus())


def corpus(seed_count: int) -> list[PrimePair]:
    """The first ``seed_count`` pairs of the fixed certification corpus.

    The corpus opens with (7, 2), (5, 3), (1009, 2); after that, for each q in
    2, 3, 5, 7, 11, 13 and each pq band starting at 10, 100, ..., 10**8 and
    9.9 * 10**8, the five smallest valid p in the band (pq <= 10**9).
    """
    if seed_count < 1:
        raise ValidationError(f"seed_count must be >= 1, got {seed_count}")
    full = _full_corpus()
    if seed_count > len(full):
        raise ValidationError(f"corpus has only {len(full)} pairs, asked for {seed_count}")
    return list(full[:seed_count])
