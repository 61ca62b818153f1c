"""
A small expression language for row-and-column-finite matrices.

Grammar::

    expr    := 'let' NAME '=' expr 'in' expr | sum
    sum     := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | atom ('^' UINT)?
    atom    := 'S' '(' INT ')' | 'E' '(' UINT ',' UINT ')' | 'I'
             | 'T' '(' ('1' | '-1') ')' | RATIONAL | NAME | '(' expr ')'
             | 'conjdiag' '(' expr ';' ['-'] RATIONAL ';' ratfunc ')'
    RATIONAL:= UINT ('/' UINT)?

``ratfunc`` is an arithmetic expression in the variable ``j`` built from
rationals, ``+ - * /``, parentheses and nonnegative integer powers.  A
rational literal ``c`` in a matrix expression stands for ``c * I``.
Unary minus binds tighter than ``*`` but looser than ``^``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import ParseError
from ..exact import ONE, J, RationalFunction, format_scalar
from ..matrix import (
    HyperDiagonal,
    RcfMatrix,
    T,
    add,
    hyperdiag_conjugate,
    identity,
    mul,
    neg,
    scalar_mul,
    shift,
    sub,
    unit,
)

KEYWORDS = {"let", "in", "conjdiag", "S", "E", "I", "T"}


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, EOF
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, col = 1, 1
    k = 0
    n = len(text)
    while k < n:
        ch = text[k]
        if ch == "\n":
            line += 1
            col = 1
            k += 1
            continue
        if ch.isspace():
            k += 1
            col += 1
            continue
        if ch.isdigit():
            m = k
            while m < n and text[m].isdigit():
                m += 1
            out.append(Token("INT", text[k:m], line, col))
        elif ch.isalpha() or ch == "_":
            m = k
            while m < n and (text[m].isalnum() or text[m] == "_"):
                m += 1
            out.append(Token("NAME", text[k:m], line, col))
        elif ch in "+-*^(),;/=":
            m = k + 1
            out.append(Token("OP", ch, line, col))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        col += m - k
        k = m
    out.append(Token("EOF", "", line, col))
    return out


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Shift:
    i: int


@dataclass(frozen=True)
class Unit:
    i: int
    j: int


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class TGen:
    sign: int


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    n: int


@dataclass(frozen=True)
class Let:
    name: str
    value: "Expr"
    body: "Expr"


@dataclass(frozen=True)
class ConjDiag:
    arg: "Expr"
    a1: Fraction
    ratio: RationalFunction


Expr = Union[Shift, Unit, Identity, TGen, Lit, Var, BinOp, Neg, Pow, Let, ConjDiag]


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        what = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ParseError(f"unexpected {what}", tok.line, tok.col, expected)

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("OP", "NAME") and t.text == text

    def take(self, text: str) -> Token:
        if not self.at(text):
            self.fail({text})
        t = self.tok
        self.pos += 1
        return t

    def uint(self) -> int:
        t = self.tok
        if t.kind != "INT":
            self.fail({"integer"})
        self.pos += 1
        return int(t.text)

    def int_(self) -> int:
        if self.at("-"):
            self.pos += 1
            return -self.uint()
        return self.uint()

    def rational(self) -> Fraction:
        p = self.uint()
        if self.at("/"):
            self.pos += 1
            q = self.uint()
            if q == 0:
                self.fail({"nonzero denominator"}, self.toks[self.pos - 1])
            return Fraction(p, q)
        return Fraction(p)

    # matrix expressions

    def expr(self) -> Expr:
        if self.at("let"):
            self.pos += 1
            t = self.tok
            if t.kind != "NAME" or t.text in KEYWORDS:
                self.fail({"identifier"})
            self.pos += 1
            self.take("=")
            value = self.expr()
            self.take("in")
            return Let(t.text, value, self.expr())
        return self.sum()

    def sum(self) -> Expr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at("*"):
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.at("-"):
            self.pos += 1
            return Neg(self.factor())
        base = self.atom()
        if self.at("^"):
            self.pos += 1
            return Pow(base, self.uint())
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            return Lit(self.rational())
        if t.kind == "NAME":
            if t.text == "S":
                self.pos += 1
                self.take("(")
                i = self.int_()
                self.take(")")
                return Shift(i)
            if t.text == "E":
                self.pos += 1
                self.take("(")
                i = self.uint()
                self.take(",")
                j = self.uint()
                self.take(")")
                if i < 1 or j < 1:
                    self.fail({"positive index"}, self.toks[self.pos - 2])
                return Unit(i, j)
            if t.text == "I":
                self.pos += 1
                return Identity()
            if t.text == "T":
                self.pos += 1
                self.take("(")
                start = self.tok
                k = self.int_()
                if k not in (1, -1):
                    self.fail({"1", "-1"}, start)
                self.take(")")
                return TGen(k)
            if t.text == "conjdiag":
                self.pos += 1
                self.take("(")
                arg = self.expr()
                self.take(";")
                sign = 1
                if self.at("-"):
                    self.pos += 1
                    sign = -1
                a1 = sign * self.rational()
                self.take(";")
                ratio = self.ratfunc()
                self.take(")")
                return ConjDiag(arg, a1, ratio)
            if t.text not in KEYWORDS:
                self.pos += 1
                return Var(t.text)
        if self.at("("):
            self.pos += 1
            node = self.expr()
            self.take(")")
            return node
        self.fail({"S", "E", "I", "T", "conjdiag", "(", "integer", "identifier", "-", "let"})

    # rational functions of j

    def ratfunc(self) -> RationalFunction:
        node = self.rterm()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.pos += 1
            rhs = self.rterm()
            node = node + rhs if op == "+" else node - rhs
        return node

    def rterm(self) -> RationalFunction:
        node = self.rfactor()
        while self.at("*") or self.at("/"):
            op = self.tok
            self.pos += 1
            rhs = self.rfactor()
            if op.text == "*":
                node = node * rhs
            else:
                if rhs.is_zero():
                    self.fail({"nonzero divisor"}, op)
                node = node / rhs
        return node

    def rfactor(self) -> RationalFunction:
        if self.at("-"):
            self.pos += 1
            return -self.rfactor()
        base = self.ratom()
        if self.at("^"):
            self.pos += 1
            n = self.uint()
            return base**n
        return base

    def ratom(self) -> RationalFunction:
        t = self.tok
        if t.kind == "INT":
            self.pos += 1
            return RationalFunction.constant(int(t.text))
        if t.kind == "NAME" and t.text == "j":
            self.pos += 1
            return J
        if self.at("("):
            self.pos += 1
            node = self.ratfunc()
            self.take(")")
            return node
        self.fail({"j", "integer", "(", "-"})


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "EOF":
        p.fail({"+", "-", "*", "^", "end of input"})
    return node


def parse_ratfunc(text: str) -> RationalFunction:
    p = _Parser(text)
    node = p.ratfunc()
    if p.tok.kind != "EOF":
        p.fail({"+", "-", "*", "/", "^", "end of input"})
    return node


# ---------------------------------------------------------------------------
# printing


def _atomic(node: Expr) -> bool:
    return isinstance(node, (Shift, Unit, Identity, TGen, Var, ConjDiag)) or (
        isinstance(node, Lit) and node.value.denominator == 1
    )


def _wrap(node: Expr) -> str:
    s = to_source(node)
    return s if _atomic(node) else f"({s})"


def to_source(node: Expr) -> str:
    """Print an AST so that :func:`parse_expr` gives it back unchanged."""
    if isinstance(node, Shift):
        return f"S({node.i})"
    if isinstance(node, Unit):
        return f"E({node.i},{node.j})"
    if isinstance(node, Identity):
        return "I"
    if isinstance(node, TGen):
        return f"T({node.sign})"
    if isinstance(node, Lit):
        return format_scalar(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, BinOp):
        return f"{_wrap(node.left)} {node.op} {_wrap(node.right)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.arg)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base)}^{node.n}"
    if isinstance(node, Let):
        return f"let {node.name} = {_wrap(node.value)} in {_wrap(node.body)}"
    if isinstance(node, ConjDiag):
        return f"conjdiag({to_source(node.arg)}; {format_scalar(node.a1)}; {node.ratio})"
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# evaluation


def evaluate(node: Expr, env: dict[str, RcfMatrix] | None = None) -> RcfMatrix:
    env = dict(env or {})
    if isinstance(node, Shift):
        return shift(node.i)
    if isinstance(node, Unit):
        return unit(node.i, node.j)
    if isinstance(node, Identity):
        return identity()
    if isinstance(node, TGen):
        return T(node.sign)
    if isinstance(node, Lit):
        return scalar_mul(node.value, identity())
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise NameError(f"unbound identifier {node.name!r}") from None
    if isinstance(node, BinOp):
        a = evaluate(node.left, env)
        b = evaluate(node.right, env)
        return {"+": add, "-": sub, "*": mul}[node.op](a, b)
    if isinstance(node, Neg):
        return neg(evaluate(node.arg, env))
    if isinstance(node, Pow):
        base = evaluate(node.base, env)
        out = identity()
        for _ in range(node.n):
            out = mul(out, base)
        return out
    if isinstance(node, Let):
        env[node.name] = evaluate(node.value, env)
        return evaluate(node.body, env)
    if isinstance(node, ConjDiag):
        return hyperdiag_conjugate(HyperDiagonal(node.a1, node.ratio), evaluate(node.arg, env))
    raise TypeError(f"not an expression node: {node!r}")


def eval_text(text: str, env: dict[str, RcfMatrix] | None = None) -> RcfMatrix:
    return evaluate(parse_expr(text), env)


__all__ = [
    "parse_expr",
    "parse_ratfunc",
    "to_source",
    "evaluate",
    "eval_text",
    "tokenize",
    "ONE",
]
