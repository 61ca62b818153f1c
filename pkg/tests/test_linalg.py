import random
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from rcfm import linalg

entries = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def dense(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(lambda c: dense(r, c))))
def test_rank_matches_sympy(rows):
    assert linalg.rank(rows) == sympy.Matrix(rows).rank()


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(lambda c: dense(r, c))))
def test_nullspace_is_kernel(rows):
    n = len(rows[0])
    basis = linalg.nullspace(rows, n)
    assert len(basis) == n - linalg.rank(rows)
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in rows)
    if basis:
        assert linalg.rank(basis) == len(basis)


def test_rank_deficient_hand_example():
    # second row is twice the first
    assert linalg.rank([[1, 2], [2, 4]]) == 1


def test_empty_block():
    assert linalg.rank([], 3) == 0
    assert len(linalg.nullspace([], 3)) == 3


def test_solve_consistent_and_not():
    rng = random.Random(5)
    for _ in range(30):
        A = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
        x0 = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
        b = [sum(a * x for a, x in zip(row, x0)) for row in A]
        x, rc, ra = linalg.solve(A, b, 4)
        assert x is not None and rc == ra
        assert [sum(a * y for a, y in zip(row, x)) for row in A] == b
    x, rc, ra = linalg.solve([[1, 1], [2, 2]], [1, 3], 2)
    assert x is None and (rc, ra) == (1, 2)
