"""
Diagonal profiles: the entries of one diagonal of an infinite matrix.

A profile at offset ``d`` lists the entries at positions ``(j + d, j)``,
indexed by the column ``j`` starting at ``start = max(1, 1 - d)``.  The
first few values are stored explicitly (the head) and everything after
them follows a rational function of ``j`` (the tail).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import OffsetMismatch, OutOfDomain, PoleAt, SchemaError, ZeroProfile
from .exact import (
    ONE,
    ZERO,
    RationalFunction,
    format_scalar,
    integer_roots_geq,
    parse_scalar,
    scalar,
)


def start_of(offset: int) -> int:
    return max(1, 1 - offset)


class DiagonalProfile:
    """Head-plus-tail description of one diagonal, kept canonical.

    The head is always minimal: its last value never coincides with what
    the tail would give at that column.  Together with canonical rational
    functions this makes equality structural.
    """

    __slots__ = ("offset", "head", "tail", "_hash")

    def __init__(self, offset: int, head: Iterable = (), tail: RationalFunction = ZERO):
        self.offset = int(offset)
        self.tail = tail
        hd = [scalar(v) for v in head]
        start = start_of(self.offset)
        tail_from = start + len(hd)
        if not tail.den.is_constant() and integer_roots_geq(tail.den, tail_from):
            raise PoleAt(min(integer_roots_geq(tail.den, tail_from)))
        while hd:
            j = start + len(hd) - 1
            if tail.den(j) == 0 or hd[-1] != tail(j):
                break
            hd.pop()
        self.head: tuple[Fraction, ...] = tuple(hd)
        self._hash = None

    @property
    def start(self) -> int:
        return start_of(self.offset)

    @property
    def tail_start(self) -> int:
        """First column governed by the tail law."""
        return self.start + len(self.head)

    def is_zero(self) -> bool:
        return not self.head and self.tail.is_zero()

    def __call__(self, j: int) -> Fraction:
        return profile_eval(self, j)

    def __eq__(self, other):
        if isinstance(other, DiagonalProfile):
            return (self.offset, self.head, self.tail) == (other.offset, other.head, other.tail)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.offset, self.head, self.tail))
        return self._hash

    def __repr__(self):
        head = ", ".join(format_scalar(v) for v in self.head)
        return f"DiagonalProfile(d={self.offset}, head=[{head}], tail={self.tail})"

    def values(self, j_from: int, j_to: int) -> list[Fraction]:
        return [profile_eval(self, j) for j in range(j_from, j_to + 1)]

    def scaled(self, c) -> DiagonalProfile:
        c = scalar(c)
        return DiagonalProfile(self.offset, [c * v for v in self.head], self.tail * c)

    def with_head_through(self, j_last: int) -> list[Fraction]:
        """Explicit values from ``start`` through ``j_last`` (at least the head)."""
        last = max(j_last, self.tail_start - 1)
        return [profile_eval(self, j) for j in range(self.start, last + 1)]

    def to_json(self) -> dict:
        return {
            "offset": self.offset,
            "head": [format_scalar(v) for v in self.head],
            "tail": self.tail.to_json(),
        }

    @classmethod
    def from_json(cls, obj, position: str = "") -> DiagonalProfile:
        head = [parse_scalar(s, f"{position}/head/{k}") for k, s in enumerate(obj["head"])]
        tail = RationalFunction.from_json(obj["tail"], f"{position}/tail")
        p = cls(obj["offset"], head, tail)
        if len(p.head) != len(head):
            raise SchemaError("profile head is not minimal", f"{position}/head")
        return p


def profile_eval(p: DiagonalProfile, j: int) -> Fraction:
    start = p.start
    if j < start:
        raise OutOfDomain(f"column {j} precedes the start {start} of diagonal {p.offset}")
    k = j - start
    if k < len(p.head):
        return p.head[k]
    return p.tail(j)


def profile_add(p: DiagonalProfile, q: DiagonalProfile) -> DiagonalProfile:
    if p.offset != q.offset:
        raise OffsetMismatch(f"cannot add diagonals {p.offset} and {q.offset}")
    if q.is_zero():
        return p
    if p.is_zero():
        return q
    last = max(p.tail_start, q.tail_start) - 1
    start = p.start
    head = [profile_eval(p, j) + profile_eval(q, j) for j in range(start, last + 1)]
    return DiagonalProfile(p.offset, head, p.tail + q.tail)


def profile_shift_mul(a: DiagonalProfile, b: DiagonalProfile) -> DiagonalProfile:
    """One band-product term: ``j -> a(j + d2) * b(j)`` at offset ``d1 + d2``.

    Columns where either factor lies before its start contribute zero.
    """
    d2 = b.offset
    d = a.offset + d2
    start = start_of(d)
    defined_from = max(b.start, a.start - d2)
    tail_from = max(b.tail_start, a.tail_start - d2)
    head = []
    for j in range(start, tail_from):
        if j < defined_from:
            head.append(Fraction(0))
        else:
            head.append(profile_eval(a, j + d2) * profile_eval(b, j))
    tail = a.tail.shift(d2) * b.tail
    return DiagonalProfile(d, head, tail)


def profile_equal(p: DiagonalProfile, q: DiagonalProfile) -> bool:
    return p == q


def tail_support_bound(p: DiagonalProfile) -> int:
    """Least ``J`` with ``p(j) != 0`` for every ``j >= J``."""
    if p.tail.is_zero():
        raise ZeroProfile(f"diagonal {p.offset} vanishes eventually; no support bound")
    zeros = [p.start + k for k, v in enumerate(p.head) if v == 0]
    if not p.tail.num.is_constant():
        zeros.extend(integer_roots_geq(p.tail.num, p.tail_start))
    return max(zeros) + 1 if zeros else p.start


def constant_profile(offset: int, c=1) -> DiagonalProfile:
    c = scalar(c)
    return DiagonalProfile(offset, (), ONE * c)
