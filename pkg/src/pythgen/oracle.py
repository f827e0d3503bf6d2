"""Independent cross-checks and the bulk verification sweep.

The exact core decides every identity.  This module adds two kinds of guard
that share no code path with it: a double-precision evaluation of
``sqrt((c -/+ L)/2)`` straight from the sides, and a literal scan for an
integer generator pair.  ``sweep`` runs both over every triple up to a bound.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import generators, kernels
from .exact import Surd
from .generators import GeneratorPair, PairKind
from .identities import CHECK_NAMES
from .triples import PythTriple, enumerate_triples

FLOAT_RTOL = 1e-9

ORACLE_CHECKS = ("round_trip", "scaling_coherence", "integer_pair_oracle", "float_oracle")
ALL_CHECKS = CHECK_NAMES + ORACLE_CHECKS


@dataclass(frozen=True)
class ViolationRecord:
    triple: PythTriple
    check_name: str
    expected: str
    actual: str

    def as_dict(self) -> dict:
        return {
            "triple": list(self.triple.sides()),
            "check": self.check_name,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class SweepResult:
    max_hyp: int
    triple_count: int = 0
    pass_counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(ALL_CHECKS, 0))
    violations: list[ViolationRecord] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations

    def merge(self, other: SweepResult) -> None:
        self.triple_count += other.triple_count
        for k, v in other.pass_counts.items():
            self.pass_counts[k] += v
        self.violations.extend(other.violations)


def approx_value(s: Surd) -> float:
    return float(s.coeff) * math.sqrt(s.radicand)


def float_pair(c: int, leg: int) -> tuple[float, float]:
    """``sqrt((c - leg)/2), sqrt((c + leg)/2)`` in plain floating point."""
    return math.sqrt((c - leg) / 2), math.sqrt((c + leg) / 2)


def brute_force_integer_pair(t: PythTriple) -> Optional[tuple[int, int]]:
    """Search ``1 <= x < y <= isqrt(c)`` for a pair generating exactly ``t``."""
    x, y = kernels.integer_pair_scan(t.hyp, t.leg_a, t.leg_b)
    return (x, y) if x else None


def _close(approx: float, ref: float) -> bool:
    return abs(approx - ref) <= FLOAT_RTOL * abs(ref)


def float_disagreements(t: PythTriple, pair: GeneratorPair) -> list[str]:
    fx, fy = float_pair(t.hyp, pair.source_leg)
    bad = []
    for name, s, ref in (("x", pair.x, fx), ("y", pair.y, fy)):
        got = approx_value(s)
        if not _close(got, ref):
            bad.append(f"{name}={s} ~ {got!r} vs {ref!r}")
    return bad


def verify_triple(t: PythTriple) -> tuple[dict[str, bool], list[ViolationRecord]]:
    """Run the identity suite and every oracle check on one triple."""
    violations: list[ViolationRecord] = []
    report = generators.analyze(t)
    passed = dict(report.identities.as_dict())
    for name, (actual, expected) in report.identities.witnesses.items():
        violations.append(ViolationRecord(t, name, expected, actual))

    def record(name: str, ok: bool, expected: str, actual: str) -> None:
        passed[name] = ok
        if not ok:
            violations.append(ViolationRecord(t, name, expected, actual))

    (pa, _), (pb, _) = report.pairs
    want = sorted(t.sides())
    got = [sorted(generators.triple_from_pair(p).sides()) for p in (pa, pb)]
    record("round_trip", got[0] == want and got[1] == want, str(want), str(got))

    p3, p4 = generators.scaled_pairs(report.decomposition)
    by_leg = {p.source_leg: p for p in (p3, p4)}
    ok = by_leg.get(t.leg_a) == pa and by_leg.get(t.leg_b) == pb
    record("scaling_coherence", ok, f"{pa}, {pb}", f"{p3}, {p4}")

    found = brute_force_integer_pair(t)
    integer = [(int(p.x.coeff), int(p.y.coeff)) for p in report.integer_pairs()]
    record("integer_pair_oracle", integer == ([found] if found else []), str(found), str(integer))

    bad = []
    for p in (pa, pb, p3, p4):
        bad += float_disagreements(t, p)
    record("float_oracle", not bad, f"relative error <= {FLOAT_RTOL}", "; ".join(bad))

    return passed, violations


def _verify_chunk(sides: list[tuple[int, int, int]], max_hyp: int) -> SweepResult:
    res = SweepResult(max_hyp)
    for a, b, c in sides:
        passed, violations = verify_triple(PythTriple(a, b, c))
        res.triple_count += 1
        for name, ok in passed.items():
            res.pass_counts[name] += ok
        res.violations.extend(violations)
    return res


def _chunks(items: list, n: int) -> list[list]:
    size = -(-len(items) // n) if items else 1
    return [items[i : i + size] for i in range(0, len(items), size)]


def sweep(max_hyp: int, jobs: int = 1) -> SweepResult:
    """Verify every triple with hypotenuse ``<= max_hyp``.

    With ``jobs > 1`` the enumeration is cut into contiguous slices and the
    partial results are merged in enumeration order, so the result does not
    depend on ``jobs``.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    sides = [t.sides() for t in enumerate_triples(max_hyp)]
    total = SweepResult(max_hyp)
    if jobs == 1:
        total.merge(_verify_chunk(sides, max_hyp))
        return total
    parts = _chunks(sides, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_verify_chunk, parts, [max_hyp] * len(parts)):
            total.merge(part)
    return total


def sweep_verify(max_hyp: int, jobs: int = 1) -> list[ViolationRecord]:
    return sweep(max_hyp, jobs).violations
