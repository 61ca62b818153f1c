"""
Exact scalar arithmetic.

Scalars are :class:`fractions.Fraction` values.  On top of them this module
provides dense univariate polynomials in the index variable ``j``, rational
functions of ``j`` kept in lowest terms, and a complete integer-root finder
used to certify where a diagonal law stops vanishing.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PoleAt, SchemaError, ZeroDenominator, ZeroPolynomial

Scalar = Fraction

_SCALAR_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def parse_scalar(text: str, position: str = "") -> Fraction:
    """Parse the strict ``"p/q"`` form (``q`` omitted when 1)."""
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise SchemaError(f"malformed scalar {text!r}", position)
    value = Fraction(text)
    if str(value) != text:
        raise SchemaError(f"scalar {text!r} is not in lowest terms", position)
    return value


def format_scalar(value: Fraction) -> str:
    return str(value)


class Polynomial:
    """Polynomial in ``j`` with Fraction coefficients, lowest degree first.

    Instances are immutable and hashable; trailing zero coefficients are
    always stripped so the zero polynomial has no coefficients at all.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def j(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = scalar(other)
            return Polynomial([c * x for x in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for s, x in enumerate(self.coeffs):
            if x:
                for t, y in enumerate(other.coeffs):
                    out[s + t] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for t, y in enumerate(other.coeffs):
                    rem[k + t] -= c * y
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lead = self.leading
        return Polynomial([c / lead for c in self.coeffs])

    def shift(self, k: int) -> Polynomial:
        """Return the polynomial ``j -> p(j + k)``."""
        if k == 0 or self.is_constant():
            return self
        lin = Polynomial((k, 1))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + Polynomial.constant(c)
        return acc

    def content_free(self) -> list[int]:
        """Primitive integer coefficient list with the same roots."""
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no primitive form")
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return [c // g for c in ints]

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]

    def __str__(self):
        return format_poly(self)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def format_poly(p: Polynomial, var: str = "j") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


class RationalFunction:
    """Ratio of polynomials in ``j`` in canonical form.

    The canonical form has coprime numerator and denominator and a monic
    denominator, so two rational functions are equal exactly when their
    stored coefficient tuples agree.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _canonical=False):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        if den is None:
            den = Polynomial.constant(1)
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if not _canonical:
            if num.is_zero():
                den = Polynomial.constant(1)
            else:
                if den.degree > 0:
                    g = poly_gcd(num, den)
                    if g.degree > 0:
                        num = num.divmod(g)[0]
                        den = den.divmod(g)[0]
                lead = den.leading
                if lead != 1:
                    num = num * (1 / lead)
                    den = den * (1 / lead)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def constant(cls, c) -> RationalFunction:
        return cls(Polynomial.constant(c), _canonical=True) if scalar(c) else ZERO

    @classmethod
    def poly(cls, p: Polynomial) -> RationalFunction:
        return cls(p, Polynomial.constant(1), _canonical=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num(0)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den.is_constant():
            return format_poly(self.num)
        n, d = format_poly(self.num), format_poly(self.den)
        if self.num.degree > 0 and len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    def __call__(self, j) -> Fraction:
        dv = self.den(j)
        if dv == 0:
            raise PoleAt(j)
        return self.num(j) / dv

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __mul__(self, other) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            c = scalar(other)
            if c == 0:
                return ZERO
            return RationalFunction(self.num * c, self.den, _canonical=True)
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_polynomial() and other.is_polynomial():
            return RationalFunction.poly(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDenominator("reciprocal of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        return self * other.reciprocal()

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.reciprocal() ** (-n)
        return RationalFunction(self.num**n, self.den**n, _canonical=True)

    def shift(self, k: int) -> RationalFunction:
        """Return ``j -> f(j + k)``."""
        if k == 0 or self.is_constant():
            return self
        return RationalFunction(self.num.shift(k), self.den.shift(k), _canonical=True)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj, position: str = "") -> RationalFunction:
        num = Polynomial(parse_scalar(s, f"{position}/num/{k}") for k, s in enumerate(obj["num"]))
        den = Polynomial(parse_scalar(s, f"{position}/den/{k}") for k, s in enumerate(obj["den"]))
        if den.is_zero():
            raise SchemaError("zero denominator", f"{position}/den")
        f = cls(num, den)
        if (f.num.to_json(), f.den.to_json()) != (obj["num"], obj["den"]):
            raise SchemaError("rational function not in canonical form", position)
        return f


ZERO = RationalFunction(Polynomial(), Polynomial.constant(1), _canonical=True)
ONE = RationalFunction(Polynomial.constant(1), Polynomial.constant(1), _canonical=True)
J = RationalFunction(Polynomial.j(), Polynomial.constant(1), _canonical=True)


def ratfunc_make(num, den) -> RationalFunction:
    if not isinstance(num, Polynomial):
        num = Polynomial(num)
    if not isinstance(den, Polynomial):
        den = Polynomial(den)
    return RationalFunction(num, den)


def ratfunc_eval(f: RationalFunction, j: int) -> Fraction:
    return f(j)


def ratfunc_arith(op: str, f: RationalFunction, g=None) -> RationalFunction:
    """Dispatch ``add``, ``mul`` or ``shift`` (``g`` is then the integer k)."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "shift":
        return f.shift(g)
    raise ValueError(f"unknown operation {op!r}")


# Above this Cauchy bound the root search enumerates divisors of the
# constant term instead of scanning the interval.
_SCAN_LIMIT = 1 << 16


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n <= 1 << 40:
        small = []
        large = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d * d != n:
                    large.append(n // d)
            d += 1
        return small + large[::-1]
    # sympy factors huge constants far faster than trial division; imported lazily
    from sympy import divisors

    return [int(d) for d in divisors(n)]


def cauchy_bound(p: Polynomial) -> int:
    """Integer B with every real root of ``p`` in ``[-B, B]``."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no root bound")
    lead = abs(p.leading)
    return 1 + math.ceil(max((abs(c) / lead for c in p.coeffs[:-1]), default=0))


def integer_roots(p: Polynomial) -> set[int]:
    """All integer roots of a nonzero polynomial."""
    if p.is_zero():
        raise ZeroPolynomial("every integer is a root of the zero polynomial")
    ints = p.content_free()
    roots = set()
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.add(0)
    ints = ints[low:]
    if len(ints) == 1:
        return roots
    q = Polynomial(ints)
    bound = cauchy_bound(q)
    c0 = ints[0]
    if bound <= _SCAN_LIMIT:
        candidates = (d for d in range(1, bound + 1) if c0 % d == 0)
    else:
        candidates = (d for d in _divisors(c0) if d <= bound)
    for d in candidates:
        for r in (d, -d):
            if q(r) == 0:
                roots.add(r)
    return roots


def integer_roots_geq(p: Polynomial, j0: int) -> set[int]:
    """The integers ``j >= j0`` with ``p(j) = 0``; complete, not sampled."""
    return {r for r in integer_roots(p) if r >= j0}


def poly_from_roots(roots: Sequence[int], lead=1) -> Polynomial:
    p = Polynomial.constant(lead)
    for r in roots:
        p = p * Polynomial((-r, 1))
    return p
