from fractions import Fraction

import pytest


def scan_solutions(n: int, d: int) -> set[tuple[int, int]]:
    """Every integer (a, b) with 1/a + 1/b = n/d, by scanning a.

    |n*a - d| divides d**2, so |a| <= (d + d**2) / n bounds the scan.
    """
    bound = (d + d * d) // n + 1
    target = Fraction(n, d)
    found = set()
    for a in range(-bound, bound + 1):
        if a == 0:
            continue
        rest = target - Fraction(1, a)
        if rest != 0 and rest.numerator in (1, -1):
            found.add((a, rest.denominator * rest.numerator))
    return found


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@pytest.fixture
def scan():
    return scan_solutions


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
