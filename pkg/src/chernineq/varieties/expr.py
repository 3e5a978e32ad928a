"""Class-expression grammar used by space files and the command line.

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := unary (('*'|'/') unary | unary)*      juxtaposition multiplies
    unary    := ('+'|'-') unary | power
    power    := atom ['^' exponent]
    exponent := integer | '-' integer | '(' ['-'] integer ')'
    atom     := integer | name | '(' expr ')'

Division is only by constant subexpressions, so ``3/2*h`` is a rational
scalar times ``h``.  Negative exponents call the element's ``inverse()``,
which for cohomology classes expands the series to the truncation degree:
``(1+5h)^(-1)`` becomes ``1 - 5h + 25h^2 - ...``.  ``·``, ``×`` and ``−``
are accepted as aliases of ``*``, ``*`` and ``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

__all__ = ["ExpressionError", "parse", "evaluate", "constant_value", "has_negative_power"]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<pow>\*\*)|(?P<op>[-+*/^()·×−]))"
)
_ALIASES = {"·": "*", "×": "*", "−": "-", "**": "^"}


class ExpressionError(ValueError):
    def __init__(self, message: str, text: str, position: int, expected: str | None = None):
        self.message = message
        self.text = text
        self.position = position
        self.expected = expected
        detail = f"{message} at column {position + 1}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str
    position: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    subtract: bool


@dataclass(frozen=True)
class Mul:
    left: object
    right: object
    divide: bool
    position: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    position: int


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ExpressionError(f"unexpected character {text[start]!r}", text, start, "a number, name or operator")
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind in ("op", "pow"):
            kind, value = "op", _ALIASES.get(value, value)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            got = value or "end of input"
            raise ExpressionError(f"unexpected {got!r}", self.text, pos, repr(op))

    def parse(self):
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {value!r}", self.text, pos, "an operator or end of input")
        return node

    def expr(self):
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            node = self.term()
            if value == "-":
                node = Neg(node)
        else:
            node = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                node = Add(node, self.term(), value == "-")
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.take()
                node = Mul(node, self.unary(), value == "/", pos)
            elif kind == "name" or (kind == "op" and value == "("):
                node = Mul(node, self.unary(), False, pos)
            else:
                return node

    def unary(self):
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            operand = self.unary()
            return Neg(operand) if value == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.take()
            return Pow(base, self.exponent(), pos)
        return base

    def exponent(self):
        kind, value, pos = self.peek()
        paren = kind == "op" and value == "("
        if paren:
            self.take()
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.take()
            sign = -1
        kind, value, pos = self.take()
        if kind != "num":
            raise ExpressionError(f"unexpected {value or 'end of input'!r}", self.text, pos, "an integer exponent")
        if paren:
            self.expect_op(")")
        return sign * int(value)

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            return Num(Fraction(int(value)))
        if kind == "name":
            return Var(value, pos)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionError(f"unexpected {value or 'end of input'!r}", self.text, pos, "a number, name or '('")


def parse(text: str):
    """Parse ``text`` into an expression tree; raises ExpressionError."""
    return _Parser(text).parse()


def constant_value(node) -> Fraction | None:
    """Fold a variable-free subtree to a rational; None if it has names."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return None
    if isinstance(node, Neg):
        v = constant_value(node.operand)
        return None if v is None else -v
    if isinstance(node, Add):
        a, b = constant_value(node.left), constant_value(node.right)
        if a is None or b is None:
            return None
        return a - b if node.subtract else a + b
    if isinstance(node, Mul):
        a, b = constant_value(node.left), constant_value(node.right)
        if a is None or b is None:
            return None
        if node.divide:
            return a / b if b else None
        return a * b
    if isinstance(node, Pow):
        a = constant_value(node.base)
        if a is None or (a == 0 and node.exponent < 0):
            return None
        return a ** node.exponent
    raise TypeError(node)


def has_negative_power(node) -> bool:
    if isinstance(node, Pow):
        return node.exponent < 0 or has_negative_power(node.base)
    if isinstance(node, Neg):
        return has_negative_power(node.operand)
    if isinstance(node, (Add, Mul)):
        return has_negative_power(node.left) or has_negative_power(node.right)
    return False


def evaluate(node, lookup: Callable[[str], object], one, text: str = ""):
    """Evaluate a tree in any ring; ``lookup`` maps names to elements.

    ``lookup`` should raise KeyError for unknown names; the error is
    re-raised as an ExpressionError pointing at the name.
    """

    def ev(n):
        if isinstance(n, Num):
            return one * n.value
        if isinstance(n, Var):
            try:
                return lookup(n.name)
            except KeyError:
                raise ExpressionError(f"unknown symbol {n.name!r}", text, n.position, "a generator name") from None
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Add):
            a, b = ev(n.left), ev(n.right)
            return a - b if n.subtract else a + b
        if isinstance(n, Mul):
            if n.divide:
                d = constant_value(n.right)
                if d is None:
                    raise ExpressionError("division by a non-constant", text, n.position, "a rational divisor")
                if d == 0:
                    raise ExpressionError("division by zero", text, n.position, "a nonzero divisor")
                return ev(n.left) * (1 / d)
            return ev(n.left) * ev(n.right)
        if isinstance(n, Pow):
            base = ev(n.base)
            if n.exponent >= 0:
                return base ** n.exponent
            if not hasattr(base, "inverse"):
                raise ExpressionError("negative powers are not supported here", text, n.position, "a nonnegative exponent")
            try:
                return base.inverse() ** (-n.exponent)
            except ZeroDivisionError:
                raise ExpressionError("series inverse needs a nonzero constant term", text, n.position) from None
        raise TypeError(n)

    return ev(node)
