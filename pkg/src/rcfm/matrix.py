"""
Row-and-column-finite infinite matrices described by a band and a patch.

A matrix is the sum of a band (finitely many diagonals, each an eventually
rational :class:`~rcfm.diagseq.DiagonalProfile` with nonzero tail) and a
finite patch of extra entries.  Canonical form keeps patch entries off the
band diagonals by folding them into the profile heads, so two matrices are
equal exactly when their canonical descriptions agree.

Indices are 1-based throughout, as in ``e_{ij}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import jsonschema

from .diagseq import (
    DiagonalProfile,
    constant_profile,
    profile_add,
    profile_eval,
    profile_shift_mul,
    start_of,
)
from .errors import (
    InvalidHyperRatio,
    NotFinite,
    NotMaterializable,
    SchemaError,
)
from .exact import (
    ONE,
    RationalFunction,
    format_scalar,
    integer_roots_geq,
    parse_scalar,
    scalar,
)
from . import linalg

SCHEMA_VERSION = 1


class FinSuppVector:
    """Finitely supported coordinate vector ``{index: nonzero value}``."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[int, object] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, Fraction] = {}
        for i, v in items:
            if i < 1:
                raise IndexError(f"vector index {i} < 1")
            acc[i] = acc.get(i, Fraction(0)) + scalar(v)
        self.entries: tuple[tuple[int, Fraction], ...] = tuple(
            sorted((i, v) for i, v in acc.items() if v != 0)
        )

    @classmethod
    def unit(cls, i: int) -> FinSuppVector:
        return cls({i: 1})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def support_max(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def __getitem__(self, i: int) -> Fraction:
        return self.as_dict().get(i, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, FinSuppVector):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = ", ".join(f"{i}: {format_scalar(v)}" for i, v in self.entries)
        return f"FinSuppVector({{{body}}})"

    def to_json(self) -> list:
        return [[i, format_scalar(v)] for i, v in self.entries]


class FinitePatch:
    """A finite matrix ``{(row, col): nonzero value}`` inside the infinite one."""

    __slots__ = ("entries", "row_bound", "col_bound")

    def __init__(self, entries: Mapping[tuple[int, int], object] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[tuple[int, int], Fraction] = {}
        for key, v in items:
            i, j = key
            if i < 1 or j < 1:
                raise IndexError(f"patch position {(i, j)} outside Z+ x Z+")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + scalar(v)
        self.entries: tuple[tuple[int, int, Fraction], ...] = tuple(
            sorted((i, j, v) for (i, j), v in acc.items() if v != 0)
        )
        self.row_bound = max((e[0] for e in self.entries), default=0)
        self.col_bound = max((e[1] for e in self.entries), default=0)

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): v for i, j, v in self.entries}

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if isinstance(other, FinitePatch):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {format_scalar(v)}" for i, j, v in self.entries)
        return f"FinitePatch({{{body}}})"


class RcfMatrix:
    """Canonical band + patch description of a row-and-column-finite matrix.

    Construct through :func:`canonicalize`, the builders, or arithmetic;
    the plain constructor assumes its input is already canonical.
    """

    __slots__ = ("band", "patch", "_hash")

    def __init__(self, band: Mapping[int, DiagonalProfile], patch: FinitePatch):
        self.band: dict[int, DiagonalProfile] = dict(sorted(band.items()))
        self.patch = patch
        self._hash = None

    # -- structure -------------------------------------------------------

    @property
    def lmax(self) -> int | None:
        """Largest band offset (deepest subdiagonal), ``None`` if no band."""
        return max(self.band) if self.band else None

    @property
    def umax(self) -> int | None:
        """Negated smallest band offset, ``None`` if no band."""
        return -min(self.band) if self.band else None

    def is_finite(self) -> bool:
        return not self.band

    def __eq__(self, other):
        if isinstance(other, RcfMatrix):
            return self.band == other.band and self.patch == other.patch
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.band.values()), self.patch))
        return self._hash

    def __repr__(self):
        band = ", ".join(repr(p) for p in self.band.values())
        return f"RcfMatrix(band=[{band}], patch={self.patch!r})"

    # -- arithmetic sugar ------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(other))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, RcfMatrix):
            return mul(self, other)
        return scalar_mul(other, self)

    def __rmul__(self, other):
        return scalar_mul(other, self)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative matrix powers are not defined")
        result = identity()
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    @property
    def T(self):
        return transpose(self)

    # -- access ----------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return entry(self, i, j)

    def column(self, j: int) -> FinSuppVector:
        """Column ``j`` as a finite vector."""
        out: dict[int, Fraction] = {}
        for d, p in self.band.items():
            if j >= p.start:
                out[j + d] = profile_eval(p, j)
        for i, jj, v in self.patch.entries:
            if jj == j:
                out[i] = out.get(i, Fraction(0)) + v
        return FinSuppVector(out)

    def row(self, i: int) -> FinSuppVector:
        """Row ``i`` as a finite vector indexed by column."""
        out: dict[int, Fraction] = {}
        for d, p in self.band.items():
            j = i - d
            if j >= p.start:
                out[j] = profile_eval(p, j)
        for ii, j, v in self.patch.entries:
            if ii == i:
                out[j] = out.get(j, Fraction(0)) + v
        return FinSuppVector(out)


# ---------------------------------------------------------------------------
# canonical form


def canonicalize(band: Iterable[DiagonalProfile] | Mapping[int, DiagonalProfile] = (),
                 patch: Mapping[tuple[int, int], object] | FinitePatch | Iterable = ()) -> RcfMatrix:
    """Bring a raw band-plus-patch description to canonical form.

    Profiles at the same offset are summed, diagonals whose tail vanishes
    are moved entirely into the patch, and patch entries lying on a
    surviving diagonal are folded into that diagonal's head.
    """
    profiles = band.values() if isinstance(band, Mapping) else band
    if isinstance(patch, FinitePatch):
        raw_patch = patch.as_dict()
    else:
        raw_patch = dict(FinitePatch(patch).as_dict())
    merged: dict[int, DiagonalProfile] = {}
    for p in profiles:
        merged[p.offset] = profile_add(merged[p.offset], p) if p.offset in merged else p
    cleaned: dict[int, DiagonalProfile] = {}
    for d, p in merged.items():
        if p.tail.is_zero():
            for k, v in enumerate(p.head):
                if v:
                    j = p.start + k
                    key = (j + d, j)
                    raw_patch[key] = raw_patch.get(key, Fraction(0)) + v
        else:
            cleaned[d] = p
    on_band: dict[int, dict[int, Fraction]] = {}
    rest: dict[tuple[int, int], Fraction] = {}
    for (i, j), v in raw_patch.items():
        if v == 0:
            continue
        d = i - j
        if d in cleaned:
            on_band.setdefault(d, {})[j] = on_band.get(d, {}).get(j, Fraction(0)) + v
        else:
            rest[(i, j)] = v
    for d, extra in on_band.items():
        p = cleaned[d]
        vals = p.with_head_through(max(extra))
        for j, v in extra.items():
            vals[j - p.start] += v
        cleaned[d] = DiagonalProfile(d, vals, p.tail)
    return RcfMatrix(cleaned, FinitePatch(rest))


# ---------------------------------------------------------------------------
# builders


def zero() -> RcfMatrix:
    return RcfMatrix({}, FinitePatch())


def identity() -> RcfMatrix:
    return RcfMatrix({0: constant_profile(0, 1)}, FinitePatch())


def shift(i: int) -> RcfMatrix:
    """``S_i``: ones on the i-th subdiagonal (superdiagonal when ``i < 0``)."""
    return RcfMatrix({i: constant_profile(i, 1)}, FinitePatch())


def unit(i: int, j: int) -> RcfMatrix:
    """Matrix unit ``e_{ij}``."""
    return RcfMatrix({}, FinitePatch({(i, j): 1}))


def finite(entries) -> RcfMatrix:
    """Finite matrix from ``{(i, j): value}`` or a nested list starting at (1, 1)."""
    if isinstance(entries, Mapping) or isinstance(entries, FinitePatch):
        return canonicalize((), entries)
    flat = {(r + 1, c + 1): v for r, row in enumerate(entries) for c, v in enumerate(row)}
    return canonicalize((), flat)


def diag_profile(offset: int, tail: RationalFunction, head: Iterable = ()) -> RcfMatrix:
    return canonicalize([DiagonalProfile(offset, head, tail)])


def diag(f: RationalFunction) -> RcfMatrix:
    """Diagonal matrix with entries ``f(1), f(2), ...``."""
    return diag_profile(0, f)


def T(sign: int) -> RcfMatrix:
    """``T_1 = sum (j+1) e_{j+1,j}`` and ``T_{-1} = sum 1/(i+1) e_{i,i+1}``."""
    from .exact import J

    if sign == 1:
        return diag_profile(1, J + ONE)
    if sign == -1:
        # column index of e_{i,i+1} is j = i + 1, so the entry is 1/j
        return diag_profile(-1, J.reciprocal())
    raise ValueError("T(k) is defined for k = 1 and k = -1 only")


def toeplitz(diagonals: Iterable[tuple[int, object]]) -> RcfMatrix:
    """Constant diagonals ``[(offset, value), ...]``, offsets as for ``S_i``."""
    return canonicalize([constant_profile(d, c) for d, c in diagonals if scalar(c) != 0])


@dataclass(frozen=True)
class HyperDiagonal:
    """Invertible diagonal ``u`` with ``u_1 = a1`` and ``u_{j+1} = ratio(j) u_j``."""

    a1: Fraction
    ratio: RationalFunction

    def __post_init__(self):
        object.__setattr__(self, "a1", scalar(self.a1))
        check_hyper(self)

    def u(self, j: int) -> Fraction:
        val = self.a1
        for t in range(1, j):
            val *= self.ratio(t)
        return val

    def inverse(self) -> HyperDiagonal:
        return HyperDiagonal(1 / self.a1, self.ratio.reciprocal())

    def scale(self, d: int) -> RationalFunction:
        """``rho_d(j) = u_{j+d} / u_j`` as a rational function of ``j``."""
        out = ONE
        if d >= 0:
            for t in range(d):
                out = out * self.ratio.shift(t)
        else:
            for t in range(d, 0):
                out = out * self.ratio.shift(t).reciprocal()
        return out


def check_hyper(U: HyperDiagonal) -> None:
    if U.a1 == 0:
        raise InvalidHyperRatio("hyperdiagonal needs a nonzero first entry")
    r = U.ratio
    if r.is_zero():
        raise InvalidHyperRatio("ratio is identically zero")
    for part, name in ((r.num, "numerator"), (r.den, "denominator")):
        if not part.is_constant():
            roots = integer_roots_geq(part, 1)
            if roots:
                raise InvalidHyperRatio(f"ratio {name} vanishes at j={min(roots)}")


def hyper(U: HyperDiagonal) -> RcfMatrix:
    """Materialize a hyperdiagonal; only possible when its ratio is 1."""
    check_hyper(U)
    if U.ratio == ONE:
        return scalar_mul(U.a1, identity())
    raise NotMaterializable(
        f"diagonal with ratio {U.ratio} has no rational-function law; use hyperdiag_conjugate"
    )


def build(kind: str, *args) -> RcfMatrix:
    """Dispatch by name: shift, unit, identity, T, diag, hyper, toeplitz."""
    table = {
        "shift": shift,
        "unit": unit,
        "identity": identity,
        "T": T,
        "diag": diag,
        "hyper": hyper,
        "toeplitz": toeplitz,
        "zero": zero,
    }
    try:
        fn = table[kind]
    except KeyError:
        raise ValueError(f"unknown builder {kind!r}") from None
    return fn(*args)


# ---------------------------------------------------------------------------
# entries


def entry(A: RcfMatrix, i: int, j: int) -> Fraction:
    if i < 1 or j < 1:
        raise IndexError(f"entry ({i}, {j}) outside Z+ x Z+")
    d = i - j
    p = A.band.get(d)
    if p is not None:
        return profile_eval(p, j)
    for ii, jj, v in A.patch.entries:
        if ii == i and jj == j:
            return v
    return Fraction(0)


def window(A: RcfMatrix, rows: range | tuple[int, int], cols: range | tuple[int, int]) -> list[list[Fraction]]:
    """Dense block; ``rows``/``cols`` are inclusive ``(first, last)`` pairs or ranges."""
    rows = _as_range(rows)
    cols = _as_range(cols)
    patch = A.patch.as_dict()
    out = []
    for i in rows:
        line = []
        for j in cols:
            p = A.band.get(i - j)
            if p is not None and j >= p.start:
                line.append(profile_eval(p, j))
            else:
                line.append(patch.get((i, j), Fraction(0)))
        out.append(line)
    return out


def _as_range(r) -> range:
    if isinstance(r, range):
        return r
    lo, hi = r
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# arithmetic


def add(A: RcfMatrix, B: RcfMatrix) -> RcfMatrix:
    patch = A.patch.as_dict()
    for i, j, v in B.patch.entries:
        patch[(i, j)] = patch.get((i, j), Fraction(0)) + v
    return canonicalize(list(A.band.values()) + list(B.band.values()), patch)


def scalar_mul(c, A: RcfMatrix) -> RcfMatrix:
    c = scalar(c)
    if c == 0:
        return zero()
    band = {d: p.scaled(c) for d, p in A.band.items()}
    return RcfMatrix(band, FinitePatch({(i, j): c * v for i, j, v in A.patch.entries}))


def neg(A: RcfMatrix) -> RcfMatrix:
    return scalar_mul(-1, A)


def sub(A: RcfMatrix, B: RcfMatrix) -> RcfMatrix:
    return add(A, neg(B))


def mul(A: RcfMatrix, B: RcfMatrix) -> RcfMatrix:
    """Exact product.

    Band times band is assembled diagonal by diagonal from
    :func:`profile_shift_mul`; every product involving a patch is finite
    and computed entrywise from the relevant rows and columns.
    """
    terms = []
    for a in A.band.values():
        for b in B.band.values():
            terms.append(profile_shift_mul(a, b))
    patch: dict[tuple[int, int], Fraction] = {}

    def put(i, j, v):
        if v:
            patch[(i, j)] = patch.get((i, j), Fraction(0)) + v

    for k, l, v in B.patch.entries:
        for d1, a in A.band.items():
            if k >= a.start:
                put(k + d1, l, profile_eval(a, k) * v)
    for i, k, v in A.patch.entries:
        for d2, b in B.band.items():
            j = k - d2
            if j >= b.start:
                put(i, j, v * profile_eval(b, j))
    if A.patch.entries and B.patch.entries:
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for k, l, w in B.patch.entries:
            by_row.setdefault(k, []).append((l, w))
        for i, k, v in A.patch.entries:
            for l, w in by_row.get(k, ()):
                put(i, l, v * w)
    return canonicalize(terms, patch)


def transpose(A: RcfMatrix) -> RcfMatrix:
    band = {}
    for d, p in A.band.items():
        # entry (j+d, j) moves to (j, j+d): offset -d, column j+d
        band[-d] = DiagonalProfile(-d, p.head, p.tail.shift(-d))
    patch = FinitePatch({(j, i): v for i, j, v in A.patch.entries})
    return RcfMatrix(band, patch)


def is_finite(A: RcfMatrix) -> bool:
    return A.is_finite()


def mod_finite_equal(A: RcfMatrix, B: RcfMatrix) -> bool:
    """Equality in the quotient by finite matrices."""
    return sub(A, B).is_finite()


def equals(A: RcfMatrix, B: RcfMatrix) -> bool:
    return A == B


def apply_left(A: RcfMatrix, v: FinSuppVector) -> FinSuppVector:
    """Column action ``x -> A x``."""
    out: dict[int, Fraction] = {}
    for j, c in v.entries:
        for i, a in A.column(j).entries:
            out[i] = out.get(i, Fraction(0)) + a * c
    return FinSuppVector(out)


def apply_right(w: FinSuppVector, A: RcfMatrix) -> FinSuppVector:
    """Row action ``y -> y A``."""
    out: dict[int, Fraction] = {}
    for i, c in w.entries:
        for j, a in A.row(i).entries:
            out[j] = out.get(j, Fraction(0)) + c * a
    return FinSuppVector(out)


def rank_of_finite(A: RcfMatrix) -> int:
    if not A.is_finite():
        raise NotFinite("rank is only defined here for finite matrices")
    if A.patch.is_zero():
        return 0
    rows = sorted({i for i, _, _ in A.patch.entries})
    cols = sorted({j for _, j, _ in A.patch.entries})
    col_pos = {j: k for k, j in enumerate(cols)}
    dense = {i: [0] * len(cols) for i in rows}
    for i, j, v in A.patch.entries:
        dense[i][col_pos[j]] = v
    return linalg.rank([dense[i] for i in rows])


def hyperdiag_conjugate(U: HyperDiagonal, A: RcfMatrix) -> RcfMatrix:
    """``U A U^{-1}`` for a hyperdiagonal ``U``; entry ``(i, j)`` scales by ``u_i/u_j``."""
    check_hyper(U)
    band = {}
    for d, p in A.band.items():
        rho = U.scale(d)
        head = [v * rho(p.start + k) for k, v in enumerate(p.head)]
        band[d] = DiagonalProfile(d, head, p.tail * rho)
    patch = {}
    if A.patch.entries:
        top = max(A.patch.row_bound, A.patch.col_bound)
        u = [None, U.a1]
        for t in range(1, top):
            u.append(u[-1] * U.ratio(t))
        patch = {(i, j): v * u[i] / u[j] for i, j, v in A.patch.entries}
    return RcfMatrix(band, FinitePatch(patch))


# ---------------------------------------------------------------------------
# serialization

MATRIX_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "rcfm matrix",
    "type": "object",
    "required": ["band", "patch"],
    "additionalProperties": False,
    "properties": {
        "v": {"const": SCHEMA_VERSION},
        "band": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["offset", "head", "tail"],
                "additionalProperties": False,
                "properties": {
                    "offset": {"type": "integer"},
                    "head": {"type": "array", "items": {"type": "string"}},
                    "tail": {
                        "type": "object",
                        "required": ["num", "den"],
                        "additionalProperties": False,
                        "properties": {
                            "num": {"type": "array", "items": {"type": "string"}},
                            "den": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                        },
                    },
                },
            },
        },
        "patch": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["row", "col", "value"],
                "additionalProperties": False,
                "properties": {
                    "row": {"type": "integer", "minimum": 1},
                    "col": {"type": "integer", "minimum": 1},
                    "value": {"type": "string"},
                },
            },
        },
    },
}


def serialize(A: RcfMatrix, *, version: bool = True) -> dict:
    out = {}
    if version:
        out["v"] = SCHEMA_VERSION
    out["band"] = [p.to_json() for p in A.band.values()]
    out["patch"] = [{"row": i, "col": j, "value": format_scalar(v)} for i, j, v in A.patch.entries]
    return out


def dumps(A: RcfMatrix) -> str:
    return json.dumps(serialize(A))


def deserialize(obj) -> RcfMatrix:
    """Inverse of :func:`serialize`; rejects anything non-canonical."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} col {exc.colno}") from None
    validator = jsonschema.Draft202012Validator(MATRIX_SCHEMA)
    err = next(iter(sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))), None)
    if err is not None:
        pos = "/" + "/".join(str(p) for p in err.absolute_path)
        raise SchemaError(err.message, pos)
    profiles = []
    seen = set()
    for k, item in enumerate(obj["band"]):
        pos = f"/band/{k}"
        if item["offset"] in seen:
            raise SchemaError(f"duplicate offset {item['offset']}", pos)
        seen.add(item["offset"])
        p = DiagonalProfile.from_json(item, pos)
        if p.tail.is_zero():
            raise SchemaError("band diagonal with zero tail", f"{pos}/tail")
        profiles.append(p)
    entries = {}
    for k, item in enumerate(obj["patch"]):
        pos = f"/patch/{k}"
        v = parse_scalar(item["value"], f"{pos}/value")
        if v == 0:
            raise SchemaError("patch value must be nonzero", f"{pos}/value")
        key = (item["row"], item["col"])
        if key in entries:
            raise SchemaError(f"duplicate patch position {key}", pos)
        if key[0] - key[1] in seen:
            raise SchemaError(f"patch entry {key} lies on a band diagonal", pos)
        entries[key] = v
    return RcfMatrix({p.offset: p for p in profiles}, FinitePatch(entries))


def loads(text: str) -> RcfMatrix:
    return deserialize(text)


def load(path) -> RcfMatrix:
    with open(path, encoding="utf-8") as fh:
        return deserialize(fh.read())


def save(A: RcfMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(serialize(A), fh, indent=2)
        fh.write("\n")


__all__ = [
    "FinSuppVector",
    "FinitePatch",
    "RcfMatrix",
    "HyperDiagonal",
    "canonicalize",
    "zero",
    "identity",
    "shift",
    "unit",
    "finite",
    "diag",
    "diag_profile",
    "T",
    "toeplitz",
    "hyper",
    "build",
    "entry",
    "window",
    "add",
    "sub",
    "scalar_mul",
    "neg",
    "mul",
    "transpose",
    "is_finite",
    "mod_finite_equal",
    "equals",
    "apply_left",
    "apply_right",
    "rank_of_finite",
    "hyperdiag_conjugate",
    "serialize",
    "deserialize",
    "dumps",
    "loads",
    "load",
    "save",
    "start_of",
]
