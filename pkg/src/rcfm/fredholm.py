"""
Fredholm witnesses, kernel and cokernel dimensions, and the index.

A matrix ``A`` is Fredholm when some ``A0`` makes both ``A A0 - I`` and
``A0 A - I`` finite.  Nothing here decides Fredholmness for an arbitrary
matrix; every positive claim is backed by an explicit inverse modulo
finite matrices that is checked symbolically.

Dimensions come with certificates: the finite block or generator set whose
exact rank determines the answer, together with the bound that makes the
reduction sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import linalg
from .diagseq import DiagonalProfile, tail_support_bound
from .errors import (
    ClassMismatch,
    InternalInconsistency,
    InvalidWitness,
    NotAWitness,
    NotFinite,
    NotInvertible,
    ZeroMatrix,
)
from .exact import Polynomial, RationalFunction, format_scalar
from .matrix import (
    FinitePatch,
    FinSuppVector,
    HyperDiagonal,
    RcfMatrix,
    add,
    canonicalize,
    hyperdiag_conjugate,
    identity,
    is_finite,
    mul,
    scalar_mul,
    shift,
    sub,
    unit,
    window,
)

INFINITE = math.inf


@dataclass(frozen=True)
class FredholmWitness:
    """``a`` together with a two-sided inverse ``a0`` modulo finite matrices.

    ``defect_right = a a0 - I`` and ``defect_left = a0 a - I``, both finite.
    Build instances with :func:`witness_verify`.
    """

    a: RcfMatrix
    a0: RcfMatrix
    defect_right: FinitePatch
    defect_left: FinitePatch
    _index: list = field(default_factory=list, repr=False, compare=False)


@dataclass(frozen=True)
class DimReport:
    value: Union[int, float]
    certificate: dict

    @property
    def finite(self) -> bool:
        return self.value != INFINITE

    def to_json(self) -> dict:
        return {
            "value": "infinite" if self.value == INFINITE else self.value,
            "certificate": self.certificate,
        }


def witness_verify(a: RcfMatrix, a0: RcfMatrix) -> FredholmWitness:
    I = identity()
    right = sub(mul(a, a0), I)
    if not right.is_finite():
        raise NotAWitness("right", "a*a0 - I is not a finite matrix")
    left = sub(mul(a0, a), I)
    if not left.is_finite():
        raise NotAWitness("left", "a0*a - I is not a finite matrix")
    return FredholmWitness(a, a0, right.patch, left.patch)


def _inverse_pair(U, Uinv):
    I = identity()
    if not (mul(U, Uinv) == I and mul(Uinv, U) == I):
        raise NotInvertible("supplied matrices are not mutually inverse")


def witness_compose(mode: str, *args) -> FredholmWitness:
    """Build a new witness from old ones.

    Modes:
    - ``"mul", W1, W2`` -- witness for ``W1.a W2.a`` with inverse ``W2.a0 W1.a0``
    - ``"perturb", W, F`` -- witness for ``W.a + F`` keeping ``W.a0``
    - ``"invert", W`` -- swap the roles of ``a`` and ``a0``
    - ``"conjugate", W, U[, Uinv]`` -- witness for ``U^{-1} A U``; ``U`` is a
      :class:`HyperDiagonal` or a matrix with its exact inverse ``Uinv``
    """
    if mode == "mul":
        w1, w2 = args
        return witness_verify(mul(w1.a, w2.a), mul(w2.a0, w1.a0))
    if mode == "perturb":
        w, F = args
        if not is_finite(F):
            raise ValueError("perturbation must be a finite matrix")
        return witness_verify(add(w.a, F), w.a0)
    if mode == "invert":
        (w,) = args
        return witness_verify(w.a0, w.a)
    if mode == "conjugate":
        w, U, *rest = args
        if isinstance(U, HyperDiagonal):
            Ui = U.inverse()
            return witness_verify(hyperdiag_conjugate(Ui, w.a), hyperdiag_conjugate(Ui, w.a0))
        (Uinv,) = rest
        _inverse_pair(U, Uinv)
        return witness_verify(mul(mul(Uinv, w.a), U), mul(mul(Uinv, w.a0), U))
    raise ValueError(f"unknown compose mode {mode!r}")


# ---------------------------------------------------------------------------
# kernel


def kernel_bound(A: RcfMatrix) -> int:
    """Every kernel vector of ``x -> A x`` is supported in ``[1, M]``.

    Beyond ``M`` the deepest diagonal is nonzero and the patch is out of
    reach, so row ``m + L`` reads ``s(m) v_m = 0`` for a vector whose last
    nonzero coordinate is ``m``.
    """
    L = A.lmax
    s = A.band[L]
    return max(
        s.start - 1,
        tail_support_bound(s) - 1,
        A.patch.col_bound,
        A.patch.row_bound - L,
        0,
    )


def kernel_dim(A: RcfMatrix, *, with_basis: bool = False):
    """Exact ``dim ker`` of the column action, with a certificate.

    Returns a :class:`DimReport`, or ``(report, basis)`` when
    ``with_basis`` is set.  A finite matrix has infinite kernel.
    """
    if A.is_finite():
        rep = DimReport(INFINITE, {"reason": "no band: finite matrix", "patch_col_bound": A.patch.col_bound})
        return (rep, []) if with_basis else rep
    L = A.lmax
    M = kernel_bound(A)
    R = max(M + L, A.patch.row_bound, 1)
    cert = {"kernel_bound": M, "rows": R, "cols": M, "lmax": L}
    if M == 0:
        rep = DimReport(0, cert)
        return (rep, []) if with_basis else rep
    block = window(A, (1, R), (1, M))
    basis = linalg.nullspace(block, M)
    rep = DimReport(len(basis), cert)
    if with_basis:
        vecs = [FinSuppVector({k + 1: x for k, x in enumerate(v)}) for v in basis]
        return rep, vecs
    return rep


def truncation_nullity(A: RcfMatrix, n: int) -> int:
    """Nullity of the block ``A[1..n+Lmax, 1..n]`` (brute-force oracle)."""
    L = A.lmax or 0
    rows = max(n + L, 1)
    block = window(A, (1, rows), (1, n))
    return n - linalg.rank(block, n)


# ---------------------------------------------------------------------------
# cokernel


def cokernel_dim_witnessed(W: FredholmWitness) -> DimReport:
    """Exact ``dim V / A V`` using the witness to cut ``V`` down to ``N`` coordinates.

    With ``A A0 = I + s`` every ``e_j``, ``j > N``, is in the image, and
    columns ``A e_j`` with ``j > J*`` live below row ``N``.  The cokernel is
    then ``N`` minus the rank of the truncated generators.
    """
    if not isinstance(W, FredholmWitness):
        raise InvalidWitness("expected a FredholmWitness")
    A = W.a
    s = W.defect_right
    N = max(s.row_bound, s.col_bound, 1)
    ub = max(0, A.umax or 0)
    jstar = max(N + ub, A.patch.col_bound)
    sd = s.as_dict()
    gens = []
    for j in range(1, N + 1):
        gens.append([(1 if i == j else 0) + sd.get((i, j), 0) for i in range(1, N + 1)])
    if jstar:
        cols = window(A, (1, N), (1, jstar))
        for j in range(jstar):
            gens.append([cols[i][j] for i in range(N)])
    r = linalg.rank(gens, N)
    cert = {"witness_bound": N, "generator_count": len(gens), "column_bound": jstar, "rank": r}
    return DimReport(N - r, cert)


def cokernel_truncation_profile(A: RcfMatrix, n0: int, n1: int) -> dict[int, int]:
    """``dim coker`` of the finite blocks ``A[1..n+Lmax, 1..n]``, for inspection only."""
    L = A.lmax or 0
    out = {}
    for n in range(n0, n1 + 1):
        rows = max(n + L, 1)
        out[n] = rows - linalg.rank(window(A, (1, rows), (1, n)), n)
    return out


# ---------------------------------------------------------------------------
# index


def index(W: FredholmWitness) -> int:
    """``dim ker - dim coker``, always recomputed from the two dimensions."""
    if W._index:
        return W._index[0]
    k = kernel_dim(W.a)
    c = cokernel_dim_witnessed(W)
    if not (k.finite and c.finite):
        raise InternalInconsistency("a witnessed Fredholm matrix reported an infinite dimension")
    W._index.append(int(k.value - c.value))
    return W._index[0]


def index_report(W: FredholmWitness) -> dict:
    k, basis = kernel_dim(W.a, with_basis=True)
    c = cokernel_dim_witnessed(W)
    if not (k.finite and c.finite):
        raise InternalInconsistency("a witnessed Fredholm matrix reported an infinite dimension")
    return {
        "index": int(k.value - c.value),
        "kernel": {**k.to_json(), "basis": [v.to_json() for v in basis]},
        "cokernel": c.to_json(),
    }


# ---------------------------------------------------------------------------
# constant-diagonal matrices


@dataclass(frozen=True)
class Fredholm:
    witness: FredholmWitness
    index: int


@dataclass(frozen=True)
class NotFredholmInClass:
    symbol: dict
    reason: str = "symbol is not a monomial"


def symbol_of(A: RcfMatrix) -> dict[int, Fraction]:
    """Laurent symbol ``{d: c_d}`` of a matrix whose band tails are constant."""
    sym = {}
    for d, p in A.band.items():
        if not p.tail.is_constant():
            raise ClassMismatch(f"diagonal {d} has non-constant tail {p.tail}")
        sym[d] = p.tail.constant_value()
    return sym


def format_symbol(sym: dict[int, Fraction], var: str = "x") -> str:
    """Render a Laurent symbol, highest power first: ``{0: 1, -1: -1}`` gives ``1 - x^-1``."""
    if not sym:
        return "0"
    parts = []
    for d in sorted(sym, reverse=True):
        c = sym[d]
        mag = abs(c)
        if d == 0:
            body = format_scalar(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{format_scalar(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def toeplitz_fredholm_decide(A: RcfMatrix):
    """Fredholm iff the constant-tail symbol is a nonzero monomial ``c x^k``.

    The positive branch returns the explicit witness ``(1/c) S_{-k}``.  The
    negative branch is a classification rule for this class, corroborated
    by :func:`banded_inverse_refute`, not a runtime proof.
    """
    sym = symbol_of(A)
    if not sym:
        return NotFredholmInClass(sym, "zero symbol")
    if len(sym) == 1:
        (k, c), = sym.items()
        W = witness_verify(A, scalar_mul(1 / c, shift(-k)))
        return Fredholm(W, index(W))
    return NotFredholmInClass(sym)


@dataclass(frozen=True)
class RefutationCertificate:
    bandwidth: int
    tail_degree: int
    head: int
    unknowns: int
    equations: int
    rank_coefficients: int
    rank_augmented: int

    def to_json(self) -> dict:
        return {
            "result": "RefutationCertificate",
            "bandwidth": self.bandwidth,
            "tail_degree": self.tail_degree,
            "head": self.head,
            "unknowns": self.unknowns,
            "equations": self.equations,
            "rank_coefficients": self.rank_coefficients,
            "rank_augmented": self.rank_augmented,
        }


@dataclass(frozen=True)
class CounterexampleWitness:
    inverse: RcfMatrix
    witness: FredholmWitness


def banded_inverse_refute(A: RcfMatrix, W: int, D: int, H: int):
    """Search exactly for a banded inverse of ``A`` modulo finite matrices.

    Candidates ``B`` have diagonals at offsets ``-W..W`` whose tails are
    polynomials of degree ``<= D`` and whose heads have length ``<= H``.
    Congruence modulo finite matrices only sees the tails, so the head
    unknowns never enter an equation; they are counted but unconstrained.
    Matching coefficients of ``j`` in both products ``A B`` and ``B A``
    gives a linear system.  Inconsistency is the refutation.
    """
    sym = symbol_of(A)
    offsets = list(range(-W, W + 1))
    col = {(e, k): n for n, (e, k) in enumerate((e, k) for e in offsets for k in range(D + 1))}
    nunk = len(col)
    # polynomial identities in j, one coefficient vector per (product, offset f)
    eqs: list[tuple[dict[int, list[Fraction]], int]] = []
    fs = range(min(sym, default=0) - W, max(sym, default=0) + W + 1)
    for f in fs:
        # (A B) at offset f, column j: sum_e c_{f-e} b_e(j)
        rows = {}
        for e in offsets:
            c = sym.get(f - e)
            if c:
                for k in range(D + 1):
                    rows.setdefault(k, [Fraction(0)] * nunk)[col[(e, k)]] += c
        eqs.append((rows, f))
        # (B A) at offset f, column j: sum_d c_d b_{f-d}(j + d)
        rows = {}
        for d, c in sym.items():
            e = f - d
            if not -W <= e <= W:
                continue
            for k in range(D + 1):
                # (j + d)^k = sum_p binom(k, p) d^(k-p) j^p
                for p in range(k + 1):
                    rows.setdefault(p, [Fraction(0)] * nunk)[col[(e, k)]] += c * math.comb(k, p) * Fraction(d) ** (k - p)
        eqs.append((rows, f))
    matrix_rows = []
    rhs = []
    for rows, f in eqs:
        for p in range(D + 1):
            matrix_rows.append(rows.get(p, [Fraction(0)] * nunk))
            rhs.append(Fraction(1) if (f == 0 and p == 0) else Fraction(0))
    x, rc, ra = linalg.solve(matrix_rows, rhs, nunk)
    head_unknowns = len(offsets) * H
    if x is None:
        return RefutationCertificate(W, D, H, nunk + head_unknowns, len(matrix_rows), rc, ra)
    profiles = []
    for e in offsets:
        poly = Polynomial([x[col[(e, k)]] for k in range(D + 1)])
        if not poly.is_zero():
            profiles.append(DiagonalProfile(e, (), RationalFunction.poly(poly)))
    B = canonicalize(profiles)
    return CounterexampleWitness(B, witness_verify(A, B))


# ---------------------------------------------------------------------------
# minimal ideal


def matrix_unit_from_ideal(a: RcfMatrix, k: int, l: int):
    """Recover ``e_{kl}`` from a nonzero finite ``a`` as ``c * e_{ki} a e_{jl}``."""
    if not a.is_finite():
        raise NotFinite("expected a finite matrix")
    if a.patch.is_zero():
        raise ZeroMatrix("the zero matrix generates the zero ideal")
    i, j, v = a.patch.entries[0]
    return unit(k, i), 1 / v, unit(j, l)
