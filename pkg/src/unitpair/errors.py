"""Exception types shared across the package."""


class UnitPairError(Exception):
    pass


class ValidationError(UnitPairError, ValueError):
    """Input does not satisfy the preconditions of an operation."""


class NotPrime(ValidationError):
    def __init__(self, which: str, value: int):
        self.which = which
        self.value = value
        super().__init__(f"{which} is not prime: {value}")


class NotDistinct(ValidationError):
    def __init__(self, value: int):
        self.value = value
        super().__init__(f"p and q must be distinct (both are {value})")


class DivisibilityFails(ValidationError):
    def __init__(self, p: int, q: int):
        self.p = p
        self.q = q
        super().__init__(f"q+1 does not divide p-1 ({q + 1} does not divide {p - 1})")


class UnsupportedMagnitude(UnitPairError, ValueError):
    def __init__(self, value: int, bound: int):
        self.value = value
        self.bound = bound
        super().__init__(f"{value} is outside the supported range (must be < {bound})")


class FactorizationOutOfRange(UnitPairError, ValueError):
    def __init__(self, value: int, remainder: int, limit: int):
        self.value = value
        self.remainder = remainder
        super().__init__(
            f"{value} has a cofactor {remainder} with no prime factor <= {limit}; "
            "supply known factors"
        )


class NotDivisible(UnitPairError, ArithmeticError):
    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        super().__init__(f"{d} does not divide {n}")


class Degenerate(UnitPairError, ArithmeticError):
    """A zeta value produced no admissible solution (inexact division or a zero entry)."""
