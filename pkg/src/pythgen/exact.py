"""Exact rationals and single-radicand quadratic surds.

A :class:`Surd` is ``coeff * sqrt(radicand)`` with a :class:`~fractions.Fraction`
coefficient and a squarefree positive integer radicand.  Every constructor
canonicalizes, so two surds are equal exactly when they denote the same real
number.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


class DomainError(ValueError):
    """Square root of a negative quantity."""


class IncompatibleRadicandError(ValueError):
    """Sum of two nonzero surds with different radicands."""


class ValueKind(enum.Enum):
    INTEGER = "Integer"
    RATIONAL_NON_INTEGER = "RationalNonInteger"
    IRRATIONAL = "Irrational"


def _icbrt(n: int) -> int:
    if n < 1 << 52:
        r = round(n ** (1 / 3))
    else:
        r = 1 << ((n.bit_length() + 2) // 3)
        while True:
            nxt = (2 * r + n // (r * r)) // 3
            if nxt >= r:
                break
            r = nxt
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


@lru_cache(maxsize=1 << 16)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n`` into ``(s, f)`` with ``n == s*s*f`` and ``f`` squarefree.

    Trial division runs up to the cube root of ``n``; what remains has at most
    two prime factors, so it is either a prime square or already squarefree.
    """
    if n < 1:
        raise ValueError(f"squarefree_decompose needs n >= 1, got {n}")
    square, free = 1, 1
    rest = n
    limit = _icbrt(n)
    p = 2
    while p <= limit and p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            square *= p ** (e // 2)
            if e & 1:
                free *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(rest)
    if r * r == rest:
        square *= r
    else:
        free *= rest
    return square, free


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_decompose(n)[0] == 1


@dataclass(frozen=True, slots=True)
class Surd:
    """The real number ``coeff * sqrt(radicand)`` in canonical form."""

    coeff: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        coeff = self.coeff
        if not isinstance(coeff, Fraction):
            coeff = Fraction(coeff)
            object.__setattr__(self, "coeff", coeff)
        rad = self.radicand
        if rad < 0:
            raise DomainError(f"negative radicand {rad}")
        if coeff == 0 or rad == 0:
            object.__setattr__(self, "coeff", Fraction(0))
            object.__setattr__(self, "radicand", 1)
        elif rad != 1:
            sq, free = squarefree_decompose(rad)
            if sq != 1:
                object.__setattr__(self, "coeff", coeff * sq)
                object.__setattr__(self, "radicand", free)

    @classmethod
    def sqrt(cls, q: Fraction | int) -> Surd:
        return sqrt_exact(q)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def square(self) -> Fraction:
        return surd_square(self)

    def pow4(self) -> Fraction:
        return surd_pow4(self)

    def kind(self) -> ValueKind:
        return classify_value(self)

    def __mul__(self, other: object) -> Surd:
        if isinstance(other, Surd):
            return surd_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Surd(self.coeff * other, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: Surd) -> Surd:
        return surd_add(self, other)

    def __sub__(self, other: Surd) -> Surd:
        return surd_add(self, -other)

    def __neg__(self) -> Surd:
        return Surd(-self.coeff, self.radicand)

    def __abs__(self) -> Surd:
        return self if self.coeff >= 0 else -self

    def __lt__(self, other: Surd) -> bool:
        return surd_cmp(self, other) < 0

    def __le__(self, other: Surd) -> bool:
        return surd_cmp(self, other) <= 0

    def __gt__(self, other: Surd) -> bool:
        return surd_cmp(self, other) > 0

    def __ge__(self, other: Surd) -> bool:
        return surd_cmp(self, other) >= 0

    def __float__(self) -> float:
        return float(self.coeff) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        c = self.coeff
        if self.radicand == 1:
            return str(c)
        if c == 1:
            return f"sqrt({self.radicand})"
        return f"{c}*sqrt({self.radicand})"


def is_canonical(s: Surd) -> bool:
    """Check the type invariants directly (used by the tests)."""
    c = s.coeff
    return (
        isinstance(c, Fraction)
        and c.denominator >= 1
        and math.gcd(abs(c.numerator), c.denominator) == 1
        and s.radicand >= 1
        and is_squarefree(s.radicand)
        and (c != 0 or s.radicand == 1)
    )


def sqrt_exact(q: Fraction | int) -> Surd:
    """Nonnegative square root of a rational, rationalized.

    ``sqrt(p/q) = sqrt(p*q)/q``, after which the square part of ``p*q`` moves
    into the coefficient.
    """
    q = Fraction(q)
    if q < 0:
        raise DomainError(f"square root of negative value {q}")
    if q == 0:
        return Surd(Fraction(0))
    num, den = q.numerator, q.denominator
    sq, free = squarefree_decompose(num * den)
    return Surd(Fraction(sq, den), free)


def surd_mul(a: Surd, b: Surd) -> Surd:
    ra, rb = a.radicand, b.radicand
    if ra == rb:
        return Surd(a.coeff * b.coeff * ra)
    g = math.gcd(ra, rb)
    # both squarefree: sqrt(ra*rb) = g*sqrt(ra/g * rb/g), and the cofactor is squarefree
    return Surd(a.coeff * b.coeff * g, (ra // g) * (rb // g))


def surd_square(s: Surd) -> Fraction:
    c = s.coeff
    if s.radicand == 1:
        return c * c
    return Fraction(c.numerator * c.numerator * s.radicand, c.denominator * c.denominator)


def surd_pow4(s: Surd) -> Fraction:
    sq = surd_square(s)
    return sq * sq


def surd_add(a: Surd, b: Surd) -> Surd:
    if a.coeff == 0:
        return b
    if b.coeff == 0:
        return a
    if a.radicand != b.radicand:
        raise IncompatibleRadicandError(
            f"cannot add {a} and {b}: radicands {a.radicand} and {b.radicand} differ"
        )
    return Surd(a.coeff + b.coeff, a.radicand)


def surd_sub(a: Surd, b: Surd) -> Surd:
    return surd_add(a, -b)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def surd_cmp(a: Surd, b: Surd) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    sa, sb = _sign(a.coeff), _sign(b.coeff)
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 0:
        return 0
    qa, qb = surd_square(a), surd_square(b)
    c = (qa > qb) - (qa < qb)
    return c if sa > 0 else -c


def classify_value(s: Surd) -> ValueKind:
    if s.radicand > 1:
        return ValueKind.IRRATIONAL
    if s.coeff.denominator == 1:
        return ValueKind.INTEGER
    return ValueKind.RATIONAL_NON_INTEGER
