"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | 'x' INT | '(' expr ')'

Variables are x1..xn with n fixed by the ring.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .exact_core import WeightedPolynomial, WeightedRing

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: WeightedRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.fail(f"expected {value!r}", tok)

    def parse(self) -> WeightedPolynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer", tok)
            p = p ** int(tok[1])
        return p

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            if self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "int":
                    self.fail("rational literal needs an integer denominator", den)
                if int(den[1]) == 0:
                    self.fail("zero denominator", den)
                return self.ring.const(Fraction(int(val), int(den[1])))
            return self.ring.const(int(val))
        if kind == "var":
            k = int(val[1:])
            if not 1 <= k <= self.ring.nvars:
                self.fail(f"variable {val} outside x1..x{self.ring.nvars}", tok)
            return self.ring.var(k - 1)
        if val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {val!r}", tok)


def parse_polynomial(text: str, ring: WeightedRing) -> WeightedPolynomial:
    """Parse ``text`` into a polynomial of ``ring``; raises :class:`ParseError`."""
    return _Parser(text, ring).parse()


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", 0, text) from None
