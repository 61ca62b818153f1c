import random
from fractions import Fraction

import pytest

from rcfm.diagseq import (
    DiagonalProfile,
    constant_profile,
    profile_add,
    profile_equal,
    profile_eval,
    profile_shift_mul,
    tail_support_bound,
)
from rcfm.errors import OffsetMismatch, OutOfDomain, PoleAt, ZeroProfile
from rcfm.exact import ONE, ZERO, J
from rcfm.generators import random_profile

from oracles import matmul

S1 = constant_profile(1)
Sm1 = constant_profile(-1)
T1 = DiagonalProfile(1, (), J + ONE)
Tm1 = DiagonalProfile(-1, (), J.reciprocal())


def to_dense(p, n):
    """n x n window of the single-diagonal matrix carrying profile p."""
    W = [[Fraction(0)] * n for _ in range(n)]
    for j in range(max(1, p.start), n + 1):
        i = j + p.offset
        if 1 <= i <= n:
            W[i - 1][j - 1] = profile_eval(p, j)
    return W


def test_eval_examples():
    assert profile_eval(S1, 9) == 1
    assert Tm1.start == 2
    assert profile_eval(Tm1, 4) == Fraction(1, 4)
    assert profile_eval(T1, 2) == 3


def test_eval_out_of_domain():
    with pytest.raises(OutOfDomain):
        profile_eval(Tm1, 1)


def test_add_examples():
    assert profile_add(constant_profile(0, 1), constant_profile(0, -1)).is_zero()
    q = DiagonalProfile(1, [5], ZERO)
    got = profile_add(S1, q)
    assert got.head == (Fraction(6),) and got.tail == ONE
    assert [profile_eval(got, j) for j in (1, 2, 3)] == [6, 1, 1]
    assert profile_add(T1, DiagonalProfile(1)) == T1


def test_add_offset_mismatch():
    with pytest.raises(OffsetMismatch):
        profile_add(S1, Sm1)


@pytest.mark.parametrize(
    "a, b, head, tail",
    [
        (Sm1, S1, (), ONE),
        (S1, Sm1, (Fraction(0),), ONE),
        (Tm1, T1, (), ONE),
    ],
)
def test_shift_mul_examples(a, b, head, tail):
    got = profile_shift_mul(a, b)
    assert got.offset == 0 and got.head == head and got.tail == tail
    n = 8
    # the window product is exact away from the bottom-right edge
    prod = matmul(to_dense(a, n + 2), to_dense(b, n + 2))
    assert [row[:n] for row in prod[:n]] == to_dense(got, n)


def test_equal_examples():
    assert profile_equal(S1, S1)
    assert profile_equal(DiagonalProfile(0, (), (J + ONE) / (J + ONE)), constant_profile(0))
    assert not profile_equal(S1, constant_profile(2))


def test_head_minimized_on_construction():
    p = DiagonalProfile(0, [1, 5, 3, 4], J)
    assert p.head == (1, 5)
    assert DiagonalProfile(0, [1, 2, 3], J).head == ()


def test_pole_beyond_head_rejected():
    with pytest.raises(PoleAt):
        DiagonalProfile(0, [1], (J - ONE * 3).reciprocal())
    p = DiagonalProfile(0, [1, 1, 7], (J - ONE * 3).reciprocal())
    assert profile_eval(p, 4) == 1


def test_support_bound_examples():
    assert tail_support_bound(S1) == 1
    p = DiagonalProfile(0, [1, 0, 2], ONE)
    assert [profile_eval(p, j) for j in range(1, 6)] == [1, 0, 2, 1, 1]
    assert tail_support_bound(p) == 3
    q = DiagonalProfile(0, (), J - ONE * 4)
    assert tail_support_bound(q) == 5
    with pytest.raises(ZeroProfile):
        tail_support_bound(DiagonalProfile(0, [1], ZERO))


# -- properties -------------------------------------------------------------------


def test_add_and_mul_pointwise():
    rng = random.Random(11)
    for _ in range(40):
        d1, d2 = rng.randint(-3, 3), rng.randint(-3, 3)
        p, q = random_profile(rng, d1), random_profile(rng, d1)
        s = profile_add(p, q)
        b = random_profile(rng, d2)
        m = profile_shift_mul(p, b)
        for _ in range(50):
            j = rng.randint(s.start, 60)
            assert profile_eval(s, j) == profile_eval(p, j) + profile_eval(q, j)
            j = rng.randint(m.start, 60)
            if j >= b.start and j + d2 >= p.start:
                want = profile_eval(p, j + d2) * profile_eval(b, j)
            else:
                want = 0
            assert profile_eval(m, j) == want


def test_canonical_idempotent_and_pointwise_equal():
    rng = random.Random(12)
    for _ in range(60):
        p = random_profile(rng, rng.randint(-3, 3))
        again = DiagonalProfile(p.offset, p.head, p.tail)
        assert again == p
        longer = DiagonalProfile(p.offset, p.values(p.start, p.start + 6), p.tail)
        assert longer == p


def test_support_bound_spot_checks():
    rng = random.Random(13)
    for _ in range(60):
        p = random_profile(rng, rng.randint(-3, 3))
        J0 = tail_support_bound(p)
        for _ in range(30):
            assert profile_eval(p, rng.randint(J0, J0 + 200)) != 0
        if J0 > p.start:
            assert profile_eval(p, J0 - 1) == 0
