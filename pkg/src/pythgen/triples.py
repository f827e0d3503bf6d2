"""Validated Pythagorean triples, gcd decomposition and enumeration."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels


class InvalidTriple(ValueError):
    pass


class NotATriple(InvalidTriple):
    pass


class NonPositiveSide(InvalidTriple):
    pass


@dataclass(frozen=True, slots=True)
class PythTriple:
    """Sides ``leg_a**2 + leg_b**2 == hyp**2``, legs kept in caller order."""

    leg_a: int
    leg_b: int
    hyp: int

    @property
    def legs(self) -> tuple[int, int]:
        return self.leg_a, self.leg_b

    @property
    def g(self) -> int:
        # the hypotenuse in the quartic hypotenuse relation
        return self.hyp

    def sides(self) -> tuple[int, int, int]:
        return self.leg_a, self.leg_b, self.hyp

    def sorted_sides(self) -> tuple[int, int, int]:
        return tuple(sorted(self.sides()))  # type: ignore[return-value]

    def __str__(self) -> str:
        return f"{self.leg_a} {self.leg_b} {self.hyp}"


@dataclass(frozen=True, slots=True)
class TripleDecomposition:
    """``beta`` times the primitive triple ``(m, n, k)``."""

    beta: int
    m: int
    n: int
    k: int

    @property
    def primitive(self) -> PythTriple:
        return PythTriple(self.m, self.n, self.k)

    def scaled(self) -> PythTriple:
        return PythTriple(self.beta * self.m, self.beta * self.n, self.beta * self.k)


def validate(a: int, b: int, c: int) -> PythTriple:
    for side in (a, b, c):
        if isinstance(side, bool) or not isinstance(side, int):
            raise TypeError(f"sides must be integers, got {side!r}")
    if min(a, b, c) < 1:
        raise NonPositiveSide(f"sides must be positive: ({a}, {b}, {c})")
    if a * a + b * b != c * c:
        raise NotATriple(f"{a}^2 + {b}^2 = {a * a + b * b} != {c * c} = {c}^2")
    assert a % 2 == 0 or b % 2 == 0, "two odd legs cannot form a triple"
    return PythTriple(a, b, c)


def decompose(t: PythTriple) -> TripleDecomposition:
    beta = math.gcd(math.gcd(t.leg_a, t.leg_b), t.hyp)
    return TripleDecomposition(beta, t.leg_a // beta, t.leg_b // beta, t.hyp // beta)


def is_primitive(t: PythTriple) -> bool:
    return math.gcd(math.gcd(t.leg_a, t.leg_b), t.hyp) == 1


def enumerate_triples(max_hyp: int, primitive_only: bool = False) -> list[PythTriple]:
    """Every triple with ``hyp <= max_hyp``, ordered by hyp then smaller leg.

    Legs are listed smaller first.  Primitives come from coprime generator
    pairs of opposite parity; multiples are added by scaling.
    """
    if max_hyp < 5:
        raise ValueError(f"max_hyp must be at least 5, got {max_hyp}")
    rows = kernels.all_triples(max_hyp, primitive_only)
    return [PythTriple(a, b, c) for a, b, c in rows.tolist()]

