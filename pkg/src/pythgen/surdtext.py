"""Text form of surds.

Grammar (whitespace between tokens is ignored)::

    value    := rational | [rational "*"] "sqrt(" rational ")"
    rational := integer ["/" positive-integer]
    integer  := ["-"] digit+

Rendering always produces ``p/q*sqrt(r)`` with ``r`` squarefree (``sqrt(r)``
when the coefficient is 1, plain ``p/q`` when ``r`` is 1), so equal values
render identically and ``parse_value(render(s)) == s``.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import DomainError, Surd, sqrt_exact


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class NegativeRadicandError(DomainError):
    pass


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error("expected digits")
        return int(self.text[start : self.pos])

    def integer(self) -> int:
        neg = self.peek("-")
        if neg:
            self.pos += 1
        n = self.digits()
        return -n if neg else n

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek("/"):
            self.pos += 1
            at = self.pos
            den = self.digits()
            if den == 0:
                self.pos = at
                raise self.error("denominator must be positive")
            return Fraction(num, den)
        return Fraction(num)

    def radical(self) -> Surd:
        self.expect("sqrt(")
        at = self.pos
        q = self.rational()
        self.expect(")")
        if q < 0:
            self.pos = at
            raise NegativeRadicandError(f"negative radicand {q} at position {at} in {self.text!r}")
        return sqrt_exact(q)

    def value(self) -> Surd:
        if self.peek("sqrt("):
            result = self.radical()
        else:
            coeff = self.rational()
            if self.peek("*"):
                self.pos += 1
                result = self.radical() * coeff
            else:
                result = Surd(coeff)
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")
        return result


def parse_value(text: str) -> Surd:
    return _Parser(text).value()


def render(s: Surd) -> str:
    return str(s)
