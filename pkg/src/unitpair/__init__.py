"""Integer solutions of 1/a + 1/b = (q+1)/(pq) and an independent divisor-walk oracle."""
from .arith import divide_exact, gcd, is_prime, signed_divisors_of_prime_square
from .errors import (
    Degenerate,
    DivisibilityFails,
    FactorizationOutOfRange,
    NotDistinct,
    NotDivisible,
    NotPrime,
    UnsupportedMagnitude,
    ValidationError,
)
from .instances import SearchQuery, corpus, find_pairs
from .oracle import CertificationReport, OracleInstance, build_instance, certify, enumerate_all
from .solver import (
    PrimePair,
    Provenance,
    Solution,
    SolutionSet,
    ZetaParam,
    enumerate_zeta,
    solution_from_zeta,
    solve,
    trivial_solutions,
    validate_pair,
    verify_solution,
)

__all__ = [
    "CertificationReport", "Degenerate", "DivisibilityFails", "FactorizationOutOfRange",
    "NotDistinct", "NotDivisible", "NotPrime", "OracleInstance", "PrimePair", "Provenance",
    "SearchQuery", "Solution", "SolutionSet", "UnsupportedMagnitude", "ValidationError",
    "ZetaParam", "build_instance", "certify", "corpus", "divide_exact", "enumerate_all",
    "enumerate_zeta", "find_pairs", "gcd", "is_prime", "signed_divisors_of_prime_square",
    "solution_from_zeta", "solve", "trivial_solutions", "validate_pair", "verify_solution",
]
