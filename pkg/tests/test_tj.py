import random

import pytest

from rcfm.errors import NotInvertible
from rcfm.exact import ONE, J
from rcfm.generators import random_invertible
from rcfm.matrix import HyperDiagonal, T, identity, mul, shift
from rcfm.tj import (
    ONE_TJ,
    PHI,
    PSI,
    XI,
    X,
    Y,
    Distinguishable,
    Embedding,
    Inconclusive,
    TJElement,
    embedding_hom_check,
    equivalence_check,
    index_obstruction,
    injectivity_check,
    random_element,
    random_word,
    tj_add,
    tj_embed,
    tj_mul,
    tj_normalize,
)


def test_normal_form_examples():
    assert tj_normalize("xy") == ONE_TJ
    assert tj_normalize("yx") == TJElement.monomial(1, 1)
    assert tj_normalize("xxyy") == ONE_TJ
    assert tj_normalize("xyyx") == TJElement.monomial(1, 1)
    assert tj_normalize("xxy") == X
    assert tj_normalize("xyy") == Y
    assert str(tj_normalize([(1, "yx"), (-1, "")])) == "-1 + yx"


def test_mul_and_add():
    assert tj_mul(X, Y) == ONE_TJ
    assert tj_mul(Y, X) == TJElement.monomial(1, 1)
    assert tj_add(X, TJElement.monomial(0, 1, -1)) == TJElement({})
    e = tj_add(ONE_TJ, TJElement.monomial(1, 1, -1))
    assert tj_mul(e, e) == e  # 1 - yx is idempotent


def test_json_round_trip():
    e = tj_normalize([(2, "yyx"), (-1, "x")])
    assert TJElement.from_json(e.to_json()) == e


def test_confluence_against_rewriting():
    rng = random.Random(20)
    for _ in range(200):
        u, v = random_word(rng), random_word(rng)
        assert tj_normalize(u + v) == tj_mul(tj_normalize(u), tj_normalize(v))


def test_algebra_axioms():
    rng = random.Random(21)
    for _ in range(50):
        a, b, c = (random_element(rng) for _ in range(3))
        assert tj_mul(tj_mul(a, b), c) == tj_mul(a, tj_mul(b, c))
        assert tj_mul(a, tj_add(b, c)) == tj_add(tj_mul(a, b), tj_mul(a, c))


def test_embeddings_satisfy_relation():
    for E in (PHI, PSI, XI):
        assert mul(E.image_x, E.image_y) == identity()
        assert mul(E.image_y, E.image_x) != identity()
    with pytest.raises(ValueError):
        Embedding("bad", shift(1), shift(-1))


def test_embed_idempotent():
    e = tj_add(ONE_TJ, TJElement.monomial(1, 1, -1))
    assert tj_embed(PHI, e) == identity() - mul(shift(1), shift(-1))


def test_hom_checks():
    rng = random.Random(22)
    for E in (PHI, PSI, XI):
        for _ in range(20):
            assert embedding_hom_check(E, random_element(rng), random_element(rng))


def test_injectivity():
    assert injectivity_check(PHI, 4)
    assert injectivity_check(PSI, 3)
    assert injectivity_check(XI, 3)
    degenerate = Embedding.__new__(Embedding)
    object.__setattr__(degenerate, "name", "degenerate")
    object.__setattr__(degenerate, "image_x", identity())
    object.__setattr__(degenerate, "image_y", identity())
    assert not injectivity_check(degenerate, 2)


def test_factorial_conjugation_relates_phi_and_psi():
    assert equivalence_check(PHI, PSI, HyperDiagonal(1, J + ONE))
    assert not equivalence_check(PHI, PSI, HyperDiagonal(1, ONE * 2))
    assert equivalence_check(PHI, PHI, (identity(), identity()))
    with pytest.raises(NotInvertible):
        equivalence_check(PHI, XI, (shift(1), shift(-1)))


def test_index_obstruction():
    assert index_obstruction(PHI, XI) == Distinguishable(1, 2)
    assert index_obstruction(PHI, PSI) == Inconclusive(1, 1)


def test_no_random_conjugator_relates_phi_and_xi():
    rng = random.Random(23)
    for _ in range(15):
        assert not equivalence_check(PHI, XI, random_invertible(rng))
