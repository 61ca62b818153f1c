"""
The algebra <x, y | xy = 1> and its embeddings into row-and-column-finite
matrices.

Elements are kept in the normal-form basis ``y^a x^b``.  Rewriting
``xy -> 1`` terminates (each step shortens the word) and has no critical
pairs (``xy`` cannot overlap itself), so normal forms are unique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .errors import NotInvertible, SchemaError
from .exact import format_scalar, parse_scalar, scalar
from .fredholm import index, witness_verify
from .matrix import (
    HyperDiagonal,
    RcfMatrix,
    T,
    add,
    hyperdiag_conjugate,
    identity,
    mul,
    scalar_mul,
    shift,
    window,
    zero,
)


class TJElement:
    """Linear combination of normal monomials ``y^a x^b``, stored as ``{(a, b): c}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError("monomial exponents must be nonnegative")
            acc[(a, b)] = acc.get((a, b), Fraction(0)) + scalar(c)
        self.terms = {k: v for k, v in sorted(acc.items()) if v != 0}

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> TJElement:
        return cls({(a, b): c})

    def __eq__(self, other):
        if isinstance(other, TJElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other):
        return tj_add(self, other)

    def __mul__(self, other):
        return tj_mul(self, other)

    def __repr__(self):
        return f"TJElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.terms.items():
            mono = "".join(
                s for s in (_power("y", a), _power("x", b)) if s
            ) or "1"
            if mono == "1":
                parts.append(format_scalar(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_scalar(c)}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [{"a": a, "b": b, "c": format_scalar(c)} for (a, b), c in self.terms.items()]}

    @classmethod
    def from_json(cls, obj) -> TJElement:
        try:
            return cls({(t["a"], t["b"]): parse_scalar(t["c"], f"/terms/{k}/c") for k, t in enumerate(obj["terms"])})
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed TJ element: {exc}") from None


def _power(s: str, n: int) -> str:
    return "" if n == 0 else s if n == 1 else f"{s}^{n}"


def rewrite_word(word: str) -> tuple[int, int]:
    """Apply ``xy -> 1`` to exhaustion; the result is ``y^a x^b`` as ``(a, b)``."""
    w = word
    while "xy" in w:
        w = w.replace("xy", "")
    a = len(w) - len(w.lstrip("y"))
    rest = w[a:]
    if rest.strip("x"):
        raise AssertionError(f"rewriting left a non-normal word {w!r}")
    return a, len(rest)


def tj_normalize(word) -> TJElement:
    """Normal form of a word over ``{x, y}`` or a list of ``(coeff, word)`` pairs."""
    if isinstance(word, str):
        word = [(1, word)]
    acc = {}
    for c, w in word:
        w = w.replace(" ", "").replace("*", "")
        if set(w) - {"x", "y"}:
            raise ValueError(f"word {w!r} uses letters other than x and y")
        key = rewrite_word(w)
        acc[key] = acc.get(key, Fraction(0)) + scalar(c)
    return TJElement(acc)


def tj_add(u: TJElement, v: TJElement) -> TJElement:
    acc = dict(u.terms)
    for k, c in v.terms.items():
        acc[k] = acc.get(k, Fraction(0)) + c
    return TJElement(acc)


def tj_mul(u: TJElement, v: TJElement) -> TJElement:
    """Product via ``x^b y^c = y^(c-b)`` if ``c >= b`` else ``x^(b-c)``."""
    acc: dict[tuple[int, int], Fraction] = {}
    for (a, b), s in u.terms.items():
        for (c, d), t in v.terms.items():
            key = (a + c - b, d) if c >= b else (a, b - c + d)
            acc[key] = acc.get(key, Fraction(0)) + s * t
    return TJElement(acc)


X = TJElement.monomial(0, 1)
Y = TJElement.monomial(1, 0)
ONE_TJ = TJElement.monomial(0, 0)


# ---------------------------------------------------------------------------
# embeddings


@dataclass(frozen=True)
class Embedding:
    name: str
    image_x: RcfMatrix
    image_y: RcfMatrix

    def __post_init__(self):
        if mul(self.image_x, self.image_y) != identity():
            raise ValueError(f"embedding {self.name}: image of xy is not the identity")


PHI = Embedding("Phi", shift(-1), shift(1))
PSI = Embedding("Psi", T(-1), T(1))
XI = Embedding("Xi", shift(-2), shift(2))

EMBEDDINGS = {e.name: e for e in (PHI, PSI, XI)}


def embedding(name: str) -> Embedding:
    try:
        return EMBEDDINGS[name]
    except KeyError:
        raise ValueError(f"unknown embedding {name!r}; expected one of {sorted(EMBEDDINGS)}") from None


def _powers(M: RcfMatrix, n: int, cache: dict) -> RcfMatrix:
    if n not in cache:
        cache[n] = identity() if n == 0 else mul(_powers(M, n - 1, cache), M)
    return cache[n]


def tj_embed(E: Embedding, t: TJElement, _cache=None) -> RcfMatrix:
    """Image of ``t``: each ``y^a x^b`` goes to ``Y^a X^b``."""
    if _cache is None:
        _cache = ({}, {})
    xs, ys = _cache
    out = zero()
    for (a, b), c in t.terms.items():
        term = mul(_powers(E.image_y, a, ys), _powers(E.image_x, b, xs))
        out = add(out, scalar_mul(c, term))
    return out


def embedding_hom_check(E: Embedding, u: TJElement, v: TJElement) -> bool:
    return tj_embed(E, tj_mul(u, v)) == mul(tj_embed(E, u), tj_embed(E, v))


def injectivity_check(E: Embedding, D: int) -> bool:
    """Exact linear independence of the images of ``y^a x^b``, ``a, b <= D``.

    Images are compared on the leading ``(2D+2) x (2D+2)`` window; independence
    there implies independence of the infinite matrices.
    """
    if D < 1:
        raise ValueError("degree bound must be at least 1")
    n = 2 * D + 2
    cache = ({}, {})
    rows = []
    for a in range(D + 1):
        for b in range(D + 1):
            M = tj_embed(E, TJElement.monomial(a, b), cache)
            rows.append([v for line in window(M, (1, n), (1, n)) for v in line])
    return linalg.rank(rows, n * n) == len(rows)


def _conjugate(U, M: RcfMatrix) -> RcfMatrix:
    if isinstance(U, HyperDiagonal):
        return hyperdiag_conjugate(U, M)
    Um, Uinv = U
    return mul(mul(Um, M), Uinv)


def equivalence_check(E1: Embedding, E2: Embedding, U) -> bool:
    """Does ``U E1(.) U^{-1} = E2(.)`` hold on both generators?

    ``U`` is a :class:`HyperDiagonal` or a pair ``(U, U^{-1})`` whose
    inverse relation is verified first.
    """
    if not isinstance(U, HyperDiagonal):
        Um, Uinv = U
        I = identity()
        if mul(Um, Uinv) != I or mul(Uinv, Um) != I:
            raise NotInvertible("conjugating pair is not mutually inverse")
    return _conjugate(U, E1.image_x) == E2.image_x and _conjugate(U, E1.image_y) == E2.image_y


@dataclass(frozen=True)
class Distinguishable:
    index1: int
    index2: int


@dataclass(frozen=True)
class Inconclusive:
    index1: int
    index2: int


def index_obstruction(E1: Embedding, E2: Embedding):
    """Compare the indices of the images of ``x``.

    Conjugation preserves the index, so different indices rule out any
    invertible conjugator; equal indices decide nothing.
    """
    i1 = index(witness_verify(E1.image_x, E1.image_y))
    i2 = index(witness_verify(E2.image_x, E2.image_y))
    return Distinguishable(i1, i2) if i1 != i2 else Inconclusive(i1, i2)


def random_word(rng: random.Random, max_len: int = 10) -> str:
    return "".join(rng.choice("xy") for _ in range(rng.randint(0, max_len)))


def random_element(rng: random.Random, terms: int = 3, max_len: int = 6) -> TJElement:
    return tj_normalize([(rng.randint(-3, 3) or 1, random_word(rng, max_len)) for _ in range(terms)])
