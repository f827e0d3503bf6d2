"""Generator pairs of a triple: recovery from a leg, forward map, scaling, kinds.

For a triple with hypotenuse ``c`` and a chosen leg ``L``, the pair

    x = sqrt((c - L) / 2),   y = sqrt((c + L) / 2)

satisfies ``y*y - x*x == L``, ``2*x*y == other leg`` and ``x*x + y*y == c``.
Taking ``L`` as the odd leg of a primitive triple gives the familiar integer
pair; taking the even leg gives a pair of multiples of ``sqrt(2)``.  Triples
with a common divisor may give two irrational pairs, and there is no
a-priori rule for which leg works, so :func:`analyze` evaluates both legs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

from .exact import Surd, ValueKind, classify_value, sqrt_exact, surd_cmp, surd_mul, surd_square
from .triples import PythTriple, TripleDecomposition, decompose, validate

if TYPE_CHECKING:
    from .identities import IdentityReport


class MixedRadicandError(ValueError):
    """Pair members carry different radicands."""


class NonIntegerSide(ValueError):
    """The pair does not generate a triple of positive integers."""


class PairKind(enum.Enum):
    INTEGER_PAIR = "IntegerPair"
    RATIONAL_PAIR = "RationalPair"
    IRRATIONAL_PAIR = "IrrationalPair"


_KIND_RANK = {PairKind.INTEGER_PAIR: 0, PairKind.RATIONAL_PAIR: 1, PairKind.IRRATIONAL_PAIR: 2}


@dataclass(frozen=True, slots=True)
class GeneratorPair:
    """``0 < x <= y`` sharing one radicand.

    ``source_leg`` is the leg that sat in the ``c -/+ L`` slot, or ``None`` for
    pairs that did not come from a triple.
    """

    x: Surd
    y: Surd
    source_leg: Optional[int] = None
    _squares: tuple[Fraction, Fraction] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.x.radicand != self.y.radicand:
            raise MixedRadicandError(
                f"pair members {self.x} and {self.y} have different radicands"
            )
        if self.x.coeff <= 0:
            raise ValueError(f"pair members must be positive, got x = {self.x}")
        sx, sy = surd_square(self.x), surd_square(self.y)
        if sx > sy:
            raise ValueError(f"pair must satisfy x <= y, got ({self.x}, {self.y})")
        object.__setattr__(self, "_squares", (sx, sy))

    @classmethod
    def ordered(cls, a: Surd, b: Surd, source_leg: Optional[int] = None) -> GeneratorPair:
        if surd_cmp(a, b) > 0:
            a, b = b, a
        return cls(a, b, source_leg)

    @property
    def radicand(self) -> int:
        return self.x.radicand

    def squares(self) -> tuple[Fraction, Fraction]:
        return self._squares

    def __iter__(self):
        return iter((self.x, self.y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class AnalysisReport:
    triple: PythTriple
    decomposition: TripleDecomposition
    pairs: tuple[tuple[GeneratorPair, PairKind], tuple[GeneratorPair, PairKind]]
    scaled: Optional[tuple[GeneratorPair, GeneratorPair]]
    identities: IdentityReport

    @property
    def kinds(self) -> tuple[PairKind, PairKind]:
        return self.pairs[0][1], self.pairs[1][1]

    def integer_pairs(self) -> list[GeneratorPair]:
        return [p for p, k in self.pairs if k is PairKind.INTEGER_PAIR]


def pair_from_leg(t: PythTriple, leg: int) -> GeneratorPair:
    if leg not in (t.leg_a, t.leg_b):
        raise ValueError(f"{leg} is not a leg of {t}")
    c = t.hyp
    x = sqrt_exact(Fraction(c - leg, 2))
    y = sqrt_exact(Fraction(c + leg, 2))
    return GeneratorPair(x, y, leg)


def triple_from_pair(p: GeneratorPair) -> PythTriple:
    """Sides ``(2xy, y^2 - x^2, x^2 + y^2)``, all required to be positive integers."""
    two_xy = surd_mul(p.x, p.y) * 2
    sx, sy = p.squares()
    sides = (two_xy.coeff if two_xy.radicand == 1 else None, sy - sx, sx + sy)
    for name, v in zip(("2xy", "y^2-x^2", "x^2+y^2"), sides):
        if v is None or v.denominator != 1 or v <= 0:
            shown = two_xy if v is None else v
            raise NonIntegerSide(f"{name} = {shown} is not a positive integer for pair {p}")
    a, b, c = (int(v) for v in sides)
    return validate(a, b, c)


def scaled_pairs(d: TripleDecomposition) -> tuple[GeneratorPair, GeneratorPair]:
    """Both pairs of ``beta * (m, n, k)`` built from the primitive integer pair.

    With ``(x1, y1)`` the integer pair of the primitive part (its odd leg):

    * multiplying by ``sqrt(beta)`` gives the pair on the scaled odd leg;
    * ``(y1 - x1, x1 + y1) * sqrt(beta / 2)`` gives the pair on the scaled even leg.
    """
    prim = d.primitive
    odd = d.m if d.m % 2 else d.n
    even = d.n if odd == d.m else d.m
    x1, y1 = pair_from_leg(prim, odd)
    root_beta = sqrt_exact(d.beta)
    root_half_beta = sqrt_exact(Fraction(d.beta, 2))
    pair4 = GeneratorPair(surd_mul(x1, root_beta), surd_mul(y1, root_beta), d.beta * odd)
    pair3 = GeneratorPair.ordered(
        surd_mul(y1 - x1, root_half_beta), surd_mul(x1 + y1, root_half_beta), d.beta * even
    )
    return pair3, pair4


def classify_pair(p: GeneratorPair) -> PairKind:
    kx, ky = classify_value(p.x), classify_value(p.y)
    if kx is ValueKind.IRRATIONAL or ky is ValueKind.IRRATIONAL:
        return PairKind.IRRATIONAL_PAIR
    if kx is ValueKind.INTEGER and ky is ValueKind.INTEGER:
        return PairKind.INTEGER_PAIR
    return PairKind.RATIONAL_PAIR


def analysis_order(
    pa: GeneratorPair, ka: PairKind, pb: GeneratorPair, kb: PairKind
) -> tuple[GeneratorPair, GeneratorPair]:
    """Put the more rational pair first; ties keep leg order."""
    if _KIND_RANK[kb] < _KIND_RANK[ka]:
        return pb, pa
    return pa, pb


def analyze(t: PythTriple) -> AnalysisReport:
    from . import identities

    d = decompose(t)
    pa = pair_from_leg(t, t.leg_a)
    pb = pair_from_leg(t, t.leg_b)
    ka, kb = classify_pair(pa), classify_pair(pb)
    p1, p2 = analysis_order(pa, ka, pb, kb)
    report = identities.check_relations(p1, p2, t.hyp)
    scaled = scaled_pairs(d) if d.beta > 1 else None
    return AnalysisReport(t, d, ((pa, ka), (pb, kb)), scaled, report)
