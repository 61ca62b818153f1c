"""Random matrices, witnesses and invertible conjugators for experiments and tests.

Every generator takes an explicit :class:`random.Random` so runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .diagseq import DiagonalProfile
from .exact import ONE, J, RationalFunction
from .fredholm import FredholmWitness, witness_compose, witness_verify
from .matrix import (
    HyperDiagonal,
    RcfMatrix,
    T,
    canonicalize,
    diag,
    finite,
    identity,
    mul,
    scalar_mul,
    shift,
    unit,
)

# tails that are pole-free and zero-free on j >= 1
SAFE_TAILS = (
    ONE,
    ONE * 2,
    ONE * Fraction(-1, 3),
    J,
    J + ONE,
    J.reciprocal(),
    (J + ONE * 2) / (J + ONE),
    J * J + ONE,
)

# tails with integer zeros, which push the kernel bound out
ZERO_TAILS = (
    J - ONE * 3,
    (J - ONE * 2) * (J - ONE * 5),
    (J - ONE * 4) / (J + ONE),
)

HYPER_RATIOS = (
    J + ONE,
    ONE * 2,
    (J + ONE * 2) / (J + ONE),
    J / (J + ONE * 3),
    ONE * Fraction(-1, 2),
)

INVERTIBLE_DIAGONALS = (
    ONE * 3,
    (J + ONE) / J,
    (J + ONE * 2) / (J + ONE),
    -(J + ONE * 5),
)


def small_scalar(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if v or not nonzero:
            return v


def random_finite(rng: random.Random, size: int = 12, nnz: int = 4) -> RcfMatrix:
    """Finite matrix with up to ``nnz`` entries in ``[1, size]^2``."""
    return finite({(rng.randint(1, size), rng.randint(1, size)): small_scalar(rng) for _ in range(nnz)})


def random_profile(rng: random.Random, offset: int, zeros: bool = True) -> DiagonalProfile:
    pool = SAFE_TAILS + (ZERO_TAILS if zeros else ())
    tail = pool[rng.randrange(len(pool))] * small_scalar(rng, nonzero=True)
    head = [small_scalar(rng) for _ in range(rng.randint(0, 3))]
    return DiagonalProfile(offset, head, tail)


def random_matrix(rng: random.Random, max_offset: int = 2, patch: int = 3, zeros: bool = True) -> RcfMatrix:
    """Random band of 1-3 rational-tail diagonals plus a small patch."""
    offsets = rng.sample(range(-max_offset, max_offset + 1), rng.randint(1, 3))
    band = [random_profile(rng, d, zeros) for d in offsets]
    return canonicalize(band, random_finite(rng, 8, patch).patch)


def random_invertible(rng: random.Random, factors: int = 3) -> tuple[RcfMatrix, RcfMatrix]:
    """``(U, U^{-1})`` as a product of elementary and rational diagonal factors."""
    U = identity()
    Ui = identity()
    for _ in range(factors):
        if rng.random() < 0.6:
            i, j = rng.sample(range(1, 9), 2)
            c = small_scalar(rng, nonzero=True)
            F, Fi = identity() + scalar_mul(c, unit(i, j)), identity() - scalar_mul(c, unit(i, j))
        else:
            f = INVERTIBLE_DIAGONALS[rng.randrange(len(INVERTIBLE_DIAGONALS))]
            F, Fi = diag(f), diag(f.reciprocal())
        U, Ui = mul(U, F), mul(Fi, Ui)
    return U, Ui


def random_hyper(rng: random.Random) -> HyperDiagonal:
    return HyperDiagonal(small_scalar(rng, nonzero=True), HYPER_RATIOS[rng.randrange(len(HYPER_RATIOS))])


def base_witness(rng: random.Random, max_shift: int = 3) -> FredholmWitness:
    """Scaled shifts ``c S_i`` and the two ``T`` generators."""
    r = rng.random()
    if r < 0.15:
        s = rng.choice((1, -1))
        return witness_verify(T(s), T(-s))
    i = rng.randint(-max_shift, max_shift)
    c = small_scalar(rng, nonzero=True)
    return witness_verify(scalar_mul(c, shift(i)), scalar_mul(1 / c, shift(-i)))


def random_witness(rng: random.Random, depth: int = 1) -> FredholmWitness:
    """A base witness, then a random perturbation and/or hyperdiagonal conjugation."""
    W = base_witness(rng)
    for _ in range(depth):
        r = rng.random()
        if r < 0.4:
            W = witness_compose("perturb", W, random_finite(rng))
        elif r < 0.7:
            W = witness_compose("conjugate", W, random_hyper(rng))
        elif r < 0.85:
            W = witness_compose("conjugate", W, *random_invertible(rng, 2))
    return W
