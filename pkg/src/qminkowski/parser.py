"""Expression parser for algebra elements.

Grammar (``*`` is mandatory, juxtaposition is an error)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*      # "/" only by scalars
    unary  := ("-" | "+") unary | power
    power  := atom ("^" ["-"] INT)?           # negative powers only of scalars
    atom   := INT | INT "_q" | NAME | "(" expr ")"

NAME is a generator of the algebra, ``q``, ``r``, or on the quantum
algebras the derived generators ``a`` and ``d``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraId, NCPoly, spec
from .scalars import DenominatorError, QFrac, Scalar, qint


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class UnknownSymbol(ParseError):
    pass


# AST ------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class QInt:
    n: int


@dataclass(frozen=True)
class Sym:
    name: str
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    line: int = 0
    col: int = 0


# tokenizer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+_q)|(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


@dataclass(frozen=True)
class Tok:
    kind: str  # qint, int, name, op, end
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    toks = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        pos = 0
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if m is None or m.end() == pos:
                break
            col = m.start(m.lastindex) + 1 if m.lastindex else pos + 1
            if m.group(1):
                toks.append(Tok("qint", m.group(1), lineno, col))
            elif m.group(2):
                toks.append(Tok("int", m.group(2), lineno, col))
            elif m.group(3):
                toks.append(Tok("name", m.group(3), lineno, col))
            elif m.group(4):
                ch = m.group(4)
                if ch not in "+-*/^()":
                    raise ParseError(f"unexpected character {ch!r}", lineno, col)
                toks.append(Tok("op", ch, lineno, col))
            pos = m.end()
    last_line = text.count("\n") + 1
    toks.append(Tok("end", "", last_line, len(text.split("\n")[-1]) + 1))
    return toks


def symbols_for(alg) -> set:
    s = spec(alg)
    names = set(s.gens) | {"r"}
    if s.quantum:
        names |= {"q", "a", "d"}
    return names


class _Parser:
    def __init__(self, text: str, alg):
        self.toks = tokenize(text)
        self.i = 0
        self.alg = AlgebraId(alg)
        self.names = symbols_for(self.alg)

    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.take()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return t

    def parse(self):
        if self.peek().kind == "end":
            t = self.peek()
            raise ParseError("empty expression", t.line, t.col)
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            if t.kind in ("int", "qint", "name") or t.text == "(":
                raise ParseError("missing '*' between factors", t.line, t.col)
            raise ParseError(f"unexpected {t.text!r}", t.line, t.col)
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            t = self.take()
            node = BinOp(t.text, node, self.term(), t.line, t.col)
        return node

    def term(self):
        node = self.unary()
        while self.peek().text in ("*", "/"):
            t = self.take()
            node = BinOp(t.text, node, self.unary(), t.line, t.col)
        return node

    def unary(self):
        t = self.peek()
        if t.text == "-":
            self.take()
            return Neg(self.unary())
        if t.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().text == "^":
            t = self.take()
            sign = 1
            if self.peek().text == "-":
                self.take()
                sign = -1
            e = self.take()
            if e.kind != "int":
                raise ParseError("exponent must be an integer", e.line, e.col)
            base = Pow(base, sign * int(e.text), t.line, t.col)
            if self.peek().text == "^":
                t2 = self.peek()
                raise ParseError("chained exponents need parentheses", t2.line, t2.col)
        return base

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return Num(int(t.text))
        if t.kind == "qint":
            return QInt(int(t.text[:-2]))
        if t.kind == "name":
            if t.text not in self.names:
                raise UnknownSymbol(f"unknown symbol {t.text!r} for algebra {self.alg}", t.line, t.col)
            return Sym(t.text, t.line, t.col)
        if t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.line, t.col)


def parse_expr(text: str, alg) -> object:
    """Parse text into an AST, rejecting symbols unknown to the algebra."""
    return _Parser(text, alg).parse()


# evaluation ----------------------------------------------------------------

def _symbol_value(name: str, alg: AlgebraId) -> NCPoly:
    if name == "q":
        return NCPoly.const(alg, QFrac.q_power(1))
    if name == "r":
        return NCPoly.const(alg, 1).r_shift(1)
    if name in ("a", "d"):
        from .rmatrix import ad_generators

        return ad_generators(alg)[name]
    return NCPoly.gen(alg, name)


def _scalar_inverse(f: NCPoly, line: int, col: int) -> Scalar:
    if not f.is_scalar():
        raise ParseError("division is only allowed by scalars", line, col)
    s = f.scalar_value()
    if not s.terms:
        raise ParseError("division by zero", line, col)
    try:
        return Scalar.coerce(1) / s
    except DenominatorError as exc:
        raise ParseError(f"cannot invert {s}", line, col) from exc


def evaluate(node, alg) -> NCPoly:
    alg = AlgebraId(alg)
    if isinstance(node, Num):
        return NCPoly.const(alg, node.value)
    if isinstance(node, QInt):
        return NCPoly.const(alg, qint(node.n))
    if isinstance(node, Sym):
        return _symbol_value(node.name, alg)
    if isinstance(node, Neg):
        return -evaluate(node.arg, alg)
    if isinstance(node, Pow):
        base = evaluate(node.base, alg)
        if node.exp >= 0:
            return base ** node.exp
        inv = _scalar_inverse(base, node.line, node.col)
        return NCPoly.const(alg, inv) ** (-node.exp)
    if isinstance(node, BinOp):
        left = evaluate(node.left, alg)
        right = evaluate(node.right, alg)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        inv = _scalar_inverse(right, node.line, node.col)
        return left.scale(inv)
    raise TypeError(f"unknown node {node!r}")


def parse_poly(text: str, alg) -> NCPoly:
    """Parse and normalize an expression in the given algebra."""
    return evaluate(parse_expr(text, alg), alg)


def parse_column(text: str, alg) -> list:
    return [parse_poly(part, alg) for part in text.split(";")]
