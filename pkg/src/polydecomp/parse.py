"""Polynomial expression parser and canonical text form.

Grammar (whitespace-insensitive, ``*`` optional between factors)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*'? unary)*
    unary  := ('+' | '-') unary | factor
    factor := base ('^' uint)?
    base   := rational | 'x' | '(' expr ')'
            | 'binomial(' expr ',' uint ')' | 'risingfactorial(' expr ',' uint ')'
    rational := int ('/' uint)?
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import X, Polynomial, binomial_poly, rising_factorial_poly

DEFAULT_EXPONENT_CAP = 10**6


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.message = message


_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(),])")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        tokens.append((m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, exponent_cap: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.cap = exponent_cap

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_factor(self, tok):
        kind, val, _ = tok
        return kind in ("int", "name") or val == "("

    def term(self):
        p = self.unary()
        while True:
            tok = self.peek()
            if tok[1] == "*":
                self.take()
                p = p * self.unary()
            elif self._starts_factor(tok):
                p = p * self.unary()
            else:
                return p

    def unary(self):
        tok = self.peek()
        if tok[1] == "-":
            self.take()
            return -self.unary()
        if tok[1] == "+":
            self.take()
            return self.unary()
        return self.factor()

    def uint(self):
        tok = self.take()
        if tok[0] != "int":
            raise ParseError(f"expected a nonnegative integer, found {tok[1] or 'end of input'!r}", tok[2])
        return int(tok[1]), tok[2]

    def factor(self):
        base = self.base()
        if self.peek()[1] == "^":
            self.take()
            n, col = self.uint()
            if n > self.cap:
                raise ParseError(f"exponent {n} exceeds cap {self.cap}", col)
            return base**n
        return base

    def base(self):
        kind, val, col = self.take()
        if kind == "int":
            num = int(val)
            if self.peek()[1] == "/":
                self.take()
                den, dcol = self.uint()
                if den == 0:
                    raise ParseError("zero denominator", dcol)
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if kind == "name":
            if val == "x":
                return X
            if val in ("binomial", "risingfactorial"):
                self.expect("(")
                inner = self.expr()
                self.expect(",")
                k, kcol = self.uint()
                if k > self.cap:
                    raise ParseError(f"argument {k} exceeds cap {self.cap}", kcol)
                self.expect(")")
                fn = binomial_poly if val == "binomial" else rising_factorial_poly
                return fn(inner, k)
            raise ParseError(f"unknown name {val!r}", col)
        if val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {val or 'end of input'!r}", col)


def parse(text: str, exponent_cap: int = DEFAULT_EXPONENT_CAP) -> Polynomial:
    """Parse ``text`` into an exact :class:`Polynomial`."""
    return _Parser(text, exponent_cap).parse()


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def canonical_text(f: Polynomial) -> str:
    """Descending exponents, explicit signs, reduced fractions; ``parse`` inverts it."""
    if f.is_zero:
        return "0"
    parts = []
    for e, c in f.terms():
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _coeff_text(a)
        else:
            mono = "x" if e == 1 else f"x^{e}"
            body = mono if a == 1 else f"{_coeff_text(a)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
