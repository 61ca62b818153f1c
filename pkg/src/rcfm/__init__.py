"""
Exact algebraic Fredholm theory for row-and-column-finite infinite matrices.

Matrices are finitely described as a band of eventually-rational diagonals
plus a finite patch; all arithmetic is exact over the rationals.  See
:mod:`rcfm.matrix` for the representation, :mod:`rcfm.fredholm` for
witnesses, dimensions and the index, and :mod:`rcfm.tj` for the algebra
``<x, y | xy = 1>`` and its matrix embeddings.
"""

from .exact import J, ONE, Polynomial, RationalFunction, integer_roots_geq
from .diagseq import DiagonalProfile
from .matrix import (
    FinitePatch,
    FinSuppVector,
    HyperDiagonal,
    RcfMatrix,
    T,
    canonicalize,
    diag,
    entry,
    equals,
    finite,
    hyperdiag_conjugate,
    identity,
    is_finite,
    mod_finite_equal,
    mul,
    shift,
    toeplitz,
    transpose,
    unit,
    window,
    zero,
)
from .fredholm import (
    FredholmWitness,
    cokernel_dim_witnessed,
    index,
    kernel_dim,
    toeplitz_fredholm_decide,
    witness_compose,
    witness_verify,
)
from .tj import PHI, PSI, XI, TJElement, tj_embed, tj_normalize

__version__ = "0.1.0"
