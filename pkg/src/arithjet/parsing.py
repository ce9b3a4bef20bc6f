"""Recursive-descent parser for the polynomial text grammar.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := INT | NAME ('@' INT)? | '(' expr ')'

Whitespace (including newlines) is ignored between tokens.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError
from .polyring import Polynomial, Variable

__all__ = ["parse_polynomial"]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*(?:@[0-9]+)?)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)

_ATOM_START = {"integer", "variable", "'('", "'-'"}


class _Tok(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


def _describe(tok: _Tok) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def _tokenize(text: str) -> list:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(text, line, col, _ATOM_START | {"operator"}, repr(text[pos]))
        kind = m.lastgroup
        chunk = m.group()
        if kind == "ws":
            nl = chunk.count("\n")
            if nl:
                line += nl
                line_start = pos + chunk.rfind("\n") + 1
        else:
            toks.append(_Tok(kind, chunk, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected) -> None:
        t = self.tok
        raise ParseError(self.text, t.line, t.col, expected, _describe(t))

    def is_op(self, ch: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == ch

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.is_op("+") or self.is_op("-"):
            sign = self.tok.text
            self.i += 1
            rhs = self.term()
            acc = acc + rhs if sign == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.is_op("*"):
            self.i += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        if self.is_op("-"):
            self.i += 1
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.is_op("^"):
            self.i += 1
            if self.tok.kind != "int":
                self.fail({"integer"})
            e = int(self.tok.text)
            self.i += 1
            if self.is_op("^"):
                # Chained exponents are ambiguous; demand parentheses.
                self.fail({"'+'", "'-'", "'*'", "')'", "end of input"})
            return base**e
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Polynomial.constant(int(t.text))
        if t.kind == "name":
            self.i += 1
            name, _, order = t.text.partition("@")
            return Polynomial.var(Variable(name, int(order) if order else 0))
        if self.is_op("("):
            self.i += 1
            inner = self.expr()
            if not self.is_op(")"):
                self.fail({"')'", "'+'", "'-'", "'*'", "'^'"})
            self.i += 1
            return inner
        self.fail(_ATOM_START)

    def parse(self) -> Polynomial:
        result = self.expr()
        if self.tok.kind != "eof":
            self.fail({"'+'", "'-'", "'*'", "'^'", "end of input"})
        return result


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``text`` into a canonical Polynomial.

    >>> str(parse_polynomial("(x + 1)^2 - 2*x"))
    'x^2 + 1'
    """
    return _Parser(text).parse()
