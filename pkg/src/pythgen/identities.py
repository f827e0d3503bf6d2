"""Exact checks of the relations between the two generator pairs of a triple.

Pairs are ordered ``x <= y``, so differences are written ``y^2 - x^2``.  With
``(x1, y1)`` and ``(x2, y2)`` the two leg-derived pairs and ``c`` the hypotenuse:

* ``x1^2 + y1^2 == x2^2 + y2^2 == c``
* ``2 x1 y1 == y2^2 - x2^2`` and ``2 x2 y2 == y1^2 - x1^2``
* ``(x1 + y1)^4 == 4 y2^4`` and ``(y1 - x1)^4 == 4 x2^4``
* ``2 (x1^4 + y1^4 + x2^4 + y2^4) == 3 c^2``
* ``4 x1^2 y1^2 + 4 x2^2 y2^2 == (y1^2 - x1^2)^2 + (y2^2 - x2^2)^2
  == (x1^2 + y1^2)^2 == (x2^2 + y2^2)^2 == c^2``

The quartic pair is also evaluated with ``x2`` and ``y2`` exchanged
(``(x1 + y1)^4 == 4 x2^4``).  That labeling is false for every triple: on
3-4-5 it reads ``81 == 1``.  It is reported separately and never counted as a
failure.

Every comparison is between :class:`~fractions.Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import surd_add, surd_mul, surd_pow4
from .generators import GeneratorPair

CHECK_NAMES = (
    "sum_of_squares_equal",
    "cross_relation_1",
    "cross_relation_2",
    "quartic_sum",
    "quartic_diff",
    "hypotenuse_relation",
    "pythagoras_rewritten",
)


class PairMismatch(ValueError):
    """The two pairs cannot both be leg-derived pairs of the given hypotenuse."""


@dataclass(frozen=True)
class IdentityReport:
    sum_of_squares_equal: bool
    cross_relation_1: bool
    cross_relation_2: bool
    quartic_sum: bool
    quartic_diff: bool
    hypotenuse_relation: bool
    pythagoras_rewritten: bool
    printed_quartic_sum: bool
    printed_quartic_diff: bool
    # failing check -> (actual, expected), both rendered as text
    witnesses: dict[str, tuple[str, str]] = field(default_factory=dict)

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in CHECK_NAMES}

    @property
    def all_hold(self) -> bool:
        return all(self.as_dict().values())

    def failures(self) -> list[str]:
        return [name for name, ok in self.as_dict().items() if not ok]


def _product(p: GeneratorPair) -> Fraction | None:
    """``x*y`` when rational; same-radicand pairs always qualify."""
    s = surd_mul(p.x, p.y)
    return s.coeff if s.radicand == 1 else None


def _require_pairs(p1: GeneratorPair, p2: GeneratorPair, hyp: int) -> None:
    if p1 == p2:
        raise PairMismatch(f"both pairs are {p1}; the two legs of a triple always give distinct pairs")
    for p in (p1, p2):
        sx, sy = p.squares()
        if sx + sy != hyp:
            raise PairMismatch(f"pair {p} has x^2 + y^2 = {sx + sy}, expected hypotenuse {hyp}")


def _rewritten_terms(p1: GeneratorPair, p2: GeneratorPair, hyp: int) -> list[Fraction]:
    sx1, sy1 = p1.squares()
    sx2, sy2 = p2.squares()
    return [
        4 * sx1 * sy1 + 4 * sx2 * sy2,
        (sy1 - sx1) ** 2 + (sy2 - sx2) ** 2,
        (sx1 + sy1) ** 2,
        (sx2 + sy2) ** 2,
        Fraction(hyp * hyp),
    ]


def check_pythagoras_rewritten(
    p1: GeneratorPair, p2: GeneratorPair, hyp: int, *, strict: bool = True
) -> bool:
    if strict:
        _require_pairs(p1, p2, hyp)
    terms = _rewritten_terms(p1, p2, hyp)
    return all(t == terms[0] for t in terms)


def check_hypotenuse_relation(
    p1: GeneratorPair, p2: GeneratorPair, hyp: int, *, strict: bool = True
) -> bool:
    """``2 (x1^4 + y1^4 + x2^4 + y2^4) == 3 hyp^2``."""
    if strict:
        _require_pairs(p1, p2, hyp)
    quartics = sum(surd_pow4(s) for s in (p1.x, p1.y, p2.x, p2.y))
    return 2 * quartics == 3 * hyp * hyp


def check_relations(
    p1: GeneratorPair, p2: GeneratorPair, hyp: int, *, strict: bool = True
) -> IdentityReport:
    """Evaluate every relation exactly.

    ``p1`` plays the odd-leg role (the more rational pair when kinds differ).
    With ``strict`` the pairs must each satisfy ``x^2 + y^2 == hyp`` or
    :class:`PairMismatch` is raised; ``strict=False`` evaluates anyway and
    records witnesses for whatever fails.
    """
    if strict:
        _require_pairs(p1, p2, hyp)
    w: dict[str, tuple[str, str]] = {}

    sx1, sy1 = p1.squares()
    sx2, sy2 = p2.squares()
    sum1, sum2 = sx1 + sy1, sx2 + sy2
    sum_ok = sum1 == sum2 == hyp
    if not sum_ok:
        w["sum_of_squares_equal"] = (f"{sum1}, {sum2}", f"{hyp}, {hyp}")

    def rel(name: str, lhs, rhs) -> bool:
        ok = lhs is not None and lhs == rhs
        if not ok:
            w[name] = (str(lhs), str(rhs))
        return ok

    xy1, xy2 = _product(p1), _product(p2)
    cross1 = rel("cross_relation_1", None if xy1 is None else 2 * xy1, sy2 - sx2)
    cross2 = rel("cross_relation_2", None if xy2 is None else 2 * xy2, sy1 - sx1)

    # (x1 +/- y1) is a surd because x1 and y1 share a radicand
    plus4 = surd_pow4(surd_add(p1.x, p1.y))
    minus4 = surd_pow4(surd_add(p1.y, -p1.x))
    x2_4, y2_4 = sx2 * sx2, sy2 * sy2
    quartic_sum = rel("quartic_sum", plus4, 4 * y2_4)
    quartic_diff = rel("quartic_diff", minus4, 4 * x2_4)

    quartics = sx1 * sx1 + sy1 * sy1 + x2_4 + y2_4
    hyp_rel = rel("hypotenuse_relation", 2 * quartics, 3 * hyp * hyp)

    terms = _rewritten_terms(p1, p2, hyp)
    rewritten = all(t == terms[0] for t in terms)
    if not rewritten:
        w["pythagoras_rewritten"] = (", ".join(str(t) for t in terms[:4]), str(terms[4]))

    return IdentityReport(
        sum_of_squares_equal=sum_ok,
        cross_relation_1=cross1,
        cross_relation_2=cross2,
        quartic_sum=quartic_sum,
        quartic_diff=quartic_diff,
        hypotenuse_relation=hyp_rel,
        pythagoras_rewritten=rewritten,
        printed_quartic_sum=plus4 == 4 * x2_4,
        printed_quartic_diff=minus4 == 4 * y2_4,
        witnesses=w,
    )
