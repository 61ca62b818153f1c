"""Exception types raised across the package.

Every error carries a stable ``kind`` string; the command line front end
reports it verbatim.
"""

from __future__ import annotations


class RcfmError(Exception):
    """Base class for all typed errors of the package."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class ZeroDenominator(RcfmError, ZeroDivisionError):
    pass


class PoleAt(RcfmError, ZeroDivisionError):
    def __init__(self, j):
        super().__init__(f"rational function has a pole at j={j}")
        self.j = j


class ZeroPolynomial(RcfmError, ValueError):
    pass


class OutOfDomain(RcfmError, IndexError):
    pass


class OffsetMismatch(RcfmError, ValueError):
    pass


class ZeroProfile(RcfmError, ValueError):
    pass


class InvalidHyperRatio(RcfmError, ValueError):
    pass


class NotMaterializable(RcfmError, ValueError):
    """A hyperdiagonal whose entries do not follow a rational-function law."""


class NotFinite(RcfmError, ValueError):
    pass


class ZeroMatrix(RcfmError, ValueError):
    pass


class SchemaError(RcfmError, ValueError):
    def __init__(self, message, position=""):
        where = f" at {position}" if position else ""
        super().__init__(f"{message}{where}")
        self.position = position


class NotAWitness(RcfmError, ValueError):
    def __init__(self, side, message=""):
        super().__init__(message or f"{side} product is not congruent to I modulo finite matrices")
        self.side = side


class NotInvertible(RcfmError, ValueError):
    pass


class InvalidWitness(RcfmError, ValueError):
    pass


class InternalInconsistency(RcfmError, RuntimeError):
    pass


class ClassMismatch(RcfmError, ValueError):
    pass


class ParseError(RcfmError, ValueError):
    def __init__(self, message, line, col, expected=()):
        exp = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at line {line}, col {col}{exp}")
        self.line = line
        self.col = col
        self.expected = frozenset(expected)
