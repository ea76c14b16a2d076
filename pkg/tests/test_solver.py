import pytest
from hypothesis import given, settings, strategies as st

from unitpair.arith import is_prime
from unitpair.errors import DivisibilityFails, NotDistinct, NotPrime, UnsupportedMagnitude
from unitpair.instances import corpus
from unitpair.solver import (
    Degenerate,
    Solution,
    Provenance,
    enumerate_zeta,
    solution_from_zeta,
    solve,
    swapped_solution_from_zeta,
    trivial_solutions,
    validate_pair,
    verify_solution,
)

PUTNAM_POSITIVE = [
    (673, 1358114), (674, 340033), (1009, 2018),
    (2018, 1009), (340033, 674), (1358114, 673),
]
SEVEN_TWO_FULL = [(-28, 4), (4, -28), (5, 70), (6, 21), (7, 14), (14, 7), (21, 6), (70, 5)]
FIVE_THREE_POSITIVE = [(4, 60), (5, 15), (6, 10), (10, 6), (15, 5), (60, 4)]


def test_validate_pair_ok():
    pair = validate_pair(1009, 2)
    assert (pair.q_plus_1, pair.pq, pair.p_minus_1) == (3, 2018, 1008)


@pytest.mark.parametrize(
    "p, q, exc",
    [(7, 7, NotDistinct), (5, 2, DivisibilityFails), (9, 2, NotPrime), (7, 4, NotPrime), (2, 7, DivisibilityFails)],
)
def test_validate_pair_errors(p, q, exc):
    with pytest.raises(exc):
        validate_pair(p, q)


def test_validate_pair_names_the_failing_argument():
    with pytest.raises(NotPrime) as info:
        validate_pair(7, 4)
    assert info.value.which == "q"


def test_validate_pair_magnitude():
    with pytest.raises(UnsupportedMagnitude):
        validate_pair(1 << 64, 2)


@pytest.mark.parametrize(
    "p, q, zetas, alphas",
    [(7, 2, [-2, 1, 4], [-1, 0, 1]), (5, 3, [-3, 1, 9], [-1, 0, 2]), (1009, 2, [-2, 1, 4], [-1, 0, 1])],
)
def test_enumerate_zeta(p, q, zetas, alphas):
    got = enumerate_zeta(validate_pair(p, q))
    assert [z.zeta for z in got] == zetas
    assert [z.alpha for z in got] == alphas


def test_enumerate_zeta_by_filter():
    # filter every signed divisor of q^2 by hand
    for pair in corpus(40):
        q = pair.q
        brute = [e for e in range(-q * q, q * q + 1) if e and (q * q) % e == 0 and (e - 1) % (q + 1) == 0]
        assert [z.zeta for z in enumerate_zeta(pair)] == brute == [-q, 1, q * q]


def test_trivial_solutions():
    got = trivial_solutions(validate_pair(1009, 2))
    assert [s.pair for s in got] == [(1009, 2018), (2018, 1009)]
    assert [s.k for s in got] == [1, 2]
    assert all(str(s.provenance) == "trivial" for s in got)
    assert [s.pair for s in trivial_solutions(validate_pair(7, 2))] == [(7, 14), (14, 7)]
    assert [s.pair for s in trivial_solutions(validate_pair(5, 3))] == [(5, 15), (15, 5)]


@pytest.mark.parametrize(
    "p, q, zeta, expected",
    [(7, 2, 1, (21, 6)), (7, 2, 4, (70, 5)), (7, 2, -2, (-28, 4)), (1009, 2, 4, (1358114, 673))],
)
def test_solution_from_zeta(p, q, zeta, expected):
    pair = validate_pair(p, q)
    (z,) = [z for z in enumerate_zeta(pair) if z.zeta == zeta]
    s = solution_from_zeta(pair, z)
    assert s.pair == expected
    assert s.provenance == Provenance("zeta", zeta)
    assert s.a == p * s.k
    assert s.k * (q + 1) == zeta * p + q


def test_solution_from_zeta_hand_arithmetic():
    assert ((49 + 14) // 3, (14 + 4) // 3) == (21, 6)
    assert ((196 + 14) // 3, (56 + 4) // 12) == (70, 5)
    assert ((-98 + 14) // 3, (-28 + 4) // -6) == (-28, 4)


def test_solution_from_zeta_degenerate_on_inexact():
    from unitpair.solver import ZetaParam

    pair = validate_pair(7, 2)
    with pytest.raises(Degenerate):
        solution_from_zeta(pair, ZetaParam(2, 0))


def test_solution_rejects_zero():
    with pytest.raises(Degenerate):
        Solution(0, 3, Provenance("oracle", 1))


def test_solve_examples():
    assert solve(validate_pair(1009, 2), positive_only=True).pairs() == PUTNAM_POSITIVE
    assert solve(validate_pair(7, 2)).pairs() == SEVEN_TWO_FULL
    assert solve(validate_pair(5, 3), positive_only=True).pairs() == FIVE_THREE_POSITIVE


def test_mirrored_formula_is_the_swap():
    for pair in corpus(20):
        for z in enumerate_zeta(pair):
            direct = swapped_solution_from_zeta(pair, z)
            swapped = solution_from_zeta(pair, z).swapped(pair.p)
            assert direct.pair == swapped.pair
            assert direct.provenance == swapped.provenance


@pytest.mark.parametrize(
    "p, q, a, b, ok",
    [(1009, 2, 1009, 2018, True), (7, 2, 21, 6, True), (7, 2, 21, 7, False), (7, 2, 0, 5, False), (7, 2, 5, 0, False)],
)
def test_verify_solution(p, q, a, b, ok):
    assert verify_solution(validate_pair(p, q), a, b) is ok


def test_verify_21_6_by_hand():
    assert 14 * 27 == 378 == 3 * 126


@st.composite
def valid_pairs(draw):
    q = draw(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 65537]))
    m = draw(st.integers(1, 10**12))
    p = 1 + m * (q + 1)
    while not is_prime(p):
        p += q + 1
    return validate_pair(p, q)


@settings(max_examples=200)
@given(valid_pairs())
def test_solve_invariants(pair):
    full = solve(pair)
    pairs = full.pairs()
    assert pairs == sorted(set(pairs))
    assert set(pairs) == {(b, a) for a, b in pairs}
    assert len(full) == 8
    assert len(solve(pair, positive_only=True)) == 6
    for s in full:
        assert verify_solution(pair, s.a, s.b)
        assert s.a != s.b
        if s.k is not None:
            assert s.a == pair.p * s.k
        if s.provenance.kind == "zeta" and not s.provenance.swapped:
            assert s.k * pair.q_plus_1 == s.provenance.value * pair.p + pair.q


@settings(max_examples=200)
@given(valid_pairs())
def test_integrality_of_every_division(pair):
    for z in enumerate_zeta(pair):
        m = pair.q_plus_1
        assert (z.zeta * pair.p**2 + pair.pq) % m == 0
        assert (z.zeta * pair.pq + pair.q**2) % m == 0
        assert (z.zeta * pair.pq + pair.q**2) % z.zeta == 0
        solution_from_zeta(pair, z)


@settings(max_examples=200)
@given(valid_pairs())
def test_equal_entries_impossible(pair):
    assert (2 * pair.pq) % pair.q_plus_1 != 0
