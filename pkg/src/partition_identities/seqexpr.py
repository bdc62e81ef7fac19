"""Arithmetic expressions in ``n`` for defining sequences ``a_n``.

Grammar (EBNF), whitespace ignored between tokens::

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = "-" unary | power ;
    power   = atom [ "^" unary ] ;
    atom    = INTEGER | "n" | "(" expr ")" | "mod" "(" expr "," expr ")" ;
    INTEGER = digit { digit } ;

``^`` binds tighter than unary minus and is right-associative, so
``-n^2`` is ``-(n^2)`` and ``2^3^2`` is ``2^9``.  The exponent must
evaluate to an integer (``(-1)^n`` is fine, ``2^(1/2)`` is not).  Division
is exact rational division.

>>> materialize(parse("(1-(-1)^n)/2"), 5).values
(Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .arith import SeqValues
from .errors import DivisionByZero, InvalidParameter, ParseError


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str = "n"


@dataclass(frozen=True)
class Neg:
    operand: "SeqExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "SeqExpr"
    right: "SeqExpr"


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["SeqExpr", ...]


SeqExpr = Union[Num, Var, Neg, BinOp, Call]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")
_BUILTINS = {"mod": 2}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                break
            if m.group(1):
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                ch = m.group(3)
                if ch not in "+-*/^(),":
                    raise ParseError(f"unexpected character {ch!r}", self._off(m.start(3)), text)
                self.tokens.append(("op", ch, m.start(3)))
            pos = m.end()
        self.tokens.append(("end", "", len(text.encode())))
        self.i = 0

    def _off(self, char_index: int) -> int:
        return len(self.text[:char_index].encode())

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        kind, val, off = self.peek()
        found = "end of input" if kind == "end" else repr(val)
        if kind != "end":
            off = self._off(off)
        raise ParseError(f"expected {expected}, found {found}", off, self.text)

    def expect(self, op: str):
        if self.peek()[:2] != ("op", op):
            self.fail(repr(op))
        self.take()

    def parse(self) -> SeqExpr:
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("operator or end of input")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            return BinOp("^", base, self.unary())
        return base

    def atom(self):
        kind, val, _ = self.peek()
        if kind == "int":
            self.take()
            return Num(int(val))
        if kind == "name":
            if val == "n":
                self.take()
                return Var()
            if val in _BUILTINS:
                self.take()
                self.expect("(")
                args = [self.expr()]
                while self.peek()[:2] == ("op", ","):
                    self.take()
                    args.append(self.expr())
                self.expect(")")
                if len(args) != _BUILTINS[val]:
                    raise ParseError(f"{val} takes {_BUILTINS[val]} arguments", self._off(self.tokens[self.i - 1][2]), self.text)
                return Call(val, tuple(args))
            raise ParseError(f"unknown name {val!r}", self._off(self.peek()[2]), self.text)
        if (kind, val) == ("op", "("):
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        self.fail("number, 'n', 'mod' or '('")


def parse(text: str) -> SeqExpr:
    """Parse an expression; errors carry the 0-based byte offset."""
    return _Parser(text).parse()


def eval_at(e: SeqExpr, n: int) -> Fraction:
    """Exact value of ``e`` at ``n``."""
    if isinstance(e, Num):
        return Fraction(e.value)
    if isinstance(e, Var):
        return Fraction(n)
    if isinstance(e, Neg):
        return -eval_at(e.operand, n)
    if isinstance(e, Call):
        x, m = (eval_at(arg, n) for arg in e.args)
        if m == 0:
            raise DivisionByZero(n)
        return x % m
    a = eval_at(e.left, n)
    b = eval_at(e.right, n)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    if e.op == "/":
        if b == 0:
            raise DivisionByZero(n)
        return a / b
    if b.denominator != 1:
        raise InvalidParameter(f"exponent {b} is not an integer at n={n}")
    if a == 0 and b < 0:
        raise DivisionByZero(n)
    return a ** int(b)


def materialize(e: SeqExpr | str, N: int) -> SeqValues:
    """``SeqValues`` holding ``e`` evaluated at ``n = 1..N``."""
    text = e if isinstance(e, str) else pretty_print(e)
    if isinstance(e, str):
        e = parse(e)
    return SeqValues((eval_at(e, n) for n in range(1, N + 1)), text)


def pretty_print(e: SeqExpr) -> str:
    """Render fully parenthesised; ``parse`` gives the same tree back."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return "n"
    if isinstance(e, Neg):
        return f"(-{pretty_print(e.operand)})"
    if isinstance(e, Call):
        return f"{e.name}({', '.join(pretty_print(a) for a in e.args)})"
    return f"({pretty_print(e.left)} {e.op} {pretty_print(e.right)})"
