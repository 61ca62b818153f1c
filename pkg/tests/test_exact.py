from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from rcfm.errors import PoleAt, SchemaError, ZeroDenominator, ZeroPolynomial
from rcfm.exact import (
    ONE,
    ZERO,
    J,
    Polynomial,
    RationalFunction,
    cauchy_bound,
    format_scalar,
    integer_roots_geq,
    parse_scalar,
    poly_from_roots,
    ratfunc_arith,
    ratfunc_eval,
    ratfunc_make,
)


def P(*cs):
    return Polynomial(cs)


# -- ratfunc_make -----------------------------------------------------------


def test_make_cancels_common_factor():
    assert ratfunc_make(P(2, 2), P(2)) == RationalFunction.poly(P(1, 1))


def test_make_cancels_gcd():
    assert ratfunc_make(P(-1, 0, 1), P(-1, 1)) == J + ONE


def test_make_zero_normalizes_denominator():
    f = ratfunc_make(P(), P(5, 1))
    assert f.is_zero()
    assert f.den == P(1)


def test_make_rejects_zero_denominator():
    with pytest.raises(ZeroDenominator):
        ratfunc_make(P(1), P())


def test_denominator_is_monic():
    f = ratfunc_make(P(3), P(4, -2))
    assert f.den.leading == 1
    assert f(1) == Fraction(3, 2)


# -- ratfunc_eval -------------------------------------------------------------


@pytest.mark.parametrize(
    "f, j, expected",
    [
        (J.reciprocal(), 3, Fraction(1, 3)),
        (J + ONE, 4, Fraction(5)),
        # substitution: (1+2)/(1+1)
        ((J + ONE * 2) / (J + ONE), 1, Fraction(3, 2)),
    ],
)
def test_eval_examples(f, j, expected):
    assert ratfunc_eval(f, j) == expected


def test_eval_pole():
    with pytest.raises(PoleAt) as err:
        (J - ONE * 2).reciprocal()(2)
    assert err.value.j == 2


# -- ratfunc_arith ------------------------------------------------------------


def test_add_reciprocal_and_one():
    got = ratfunc_arith("add", J.reciprocal(), ONE)
    for j in range(1, 6):
        assert got(j) == Fraction(1, j) + 1
    assert got == (J + ONE) / J


def test_mul_cancels_to_one():
    assert ratfunc_arith("mul", J.reciprocal(), J) == ONE


def test_shift():
    assert ratfunc_arith("shift", J.reciprocal(), 1) == (J + ONE).reciprocal()


# -- integer roots --------------------------------------------------------------


def test_roots_two_factors():
    assert integer_roots_geq(poly_from_roots([3, 7]), 1) == {3, 7}


def test_roots_none_real():
    assert integer_roots_geq(P(1, 0, 1), 1) == set()


def test_roots_rational_root_skipped():
    p = P(-2, 1) * P(-5, 2)
    brute = {j for j in range(1, 7) if p(j) == 0}
    assert brute == {2}
    assert integer_roots_geq(p, 1) == brute


def test_roots_respect_lower_bound():
    p = poly_from_roots([-4, 0, 2, 9])
    assert integer_roots_geq(p, 1) == {2, 9}
    assert integer_roots_geq(p, -10) == {-4, 0, 2, 9}


def test_roots_with_large_constant_term():
    p = poly_from_roots([10**7 + 19, 12], lead=3)
    assert integer_roots_geq(p, 1) == {12, 10**7 + 19}


def test_roots_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        integer_roots_geq(P(), 1)


# -- serialization ------------------------------------------------------------


@pytest.mark.parametrize("text", ["-3/7", "5", "0", "12/5"])
def test_scalar_round_trip(text):
    assert format_scalar(parse_scalar(text)) == text


@pytest.mark.parametrize("text", ["6/4", "1/1", "+3", "1.5", " 2", "3/0", "-0", "03"])
def test_scalar_rejects_noncanonical(text):
    with pytest.raises(SchemaError):
        parse_scalar(text)


def test_ratfunc_json_round_trip():
    f = (J + ONE * 2) / (J * J + ONE)
    assert RationalFunction.from_json(f.to_json()) == f
    assert f.to_json() == {"num": ["2", "1"], "den": ["1", "0", "1"]}


# -- properties ---------------------------------------------------------------

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small, min_size=0, max_size=4).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RationalFunction, polys, nonzero_polys)


def _poles(f):
    return integer_roots_geq(f.den, -10**6) if not f.den.is_constant() else set()


@settings(max_examples=60, deadline=None)
@given(ratfuncs, ratfuncs, st.lists(st.integers(-50, 50), min_size=100, max_size=100), st.integers(-3, 3))
def test_pointwise_arith(f, g, points, k):
    bad = _poles(f) | _poles(g)
    s, m, sh = f + g, f * g, f.shift(k)
    for j in points:
        if j not in bad:
            assert s(j) == f(j) + g(j)
            assert m(j) == f(j) * g(j)
        if j + k not in _poles(f):
            assert sh(j) == f(j + k)


@settings(max_examples=100, deadline=None)
@given(ratfuncs)
def test_make_idempotent(f):
    assert ratfunc_make(f.num, f.den) == f


@settings(max_examples=100, deadline=None)
@given(nonzero_polys, st.integers(-20, 5))
def test_roots_match_brute_force(p, j0):
    B = cauchy_bound(p)
    assert integer_roots_geq(p, j0) == {j for j in range(j0, B + 1) if p(j) == 0}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), max_size=4), st.integers(1, 6), st.integers(-10, 10))
def test_roots_of_products(roots, lead, j0):
    p = poly_from_roots(roots, lead) * P(1, 0, 1)
    assume(not p.is_zero())
    assert integer_roots_geq(p, j0) == {r for r in roots if r >= j0}
