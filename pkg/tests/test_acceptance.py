"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they also appear in the terminal summary of a normal run.
"""
import io
import json
import math
import os
import subprocess
import sys
import time
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from fractions import Fraction as R

import pytest

from pythgen import kernels
from pythgen.cli import main
from pythgen.exact import Surd, surd_add, surd_pow4
from pythgen.generators import PairKind, analyze, classify_pair, pair_from_leg
from pythgen.oracle import approx_value, brute_force_integer_pair
from pythgen.surdtext import parse_value
from pythgen.triples import enumerate_triples, validate

RESULTS = []


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        line = f"[acceptance {number}] FAIL  {title}"
        RESULTS.append(line)
        print(line, file=sys.__stdout__, flush=True)
        raise
    line = f"[acceptance {number}] PASS  {title}"
    RESULTS.append(line)
    print(line, file=sys.__stdout__, flush=True)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def cli_subprocess(*argv):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pythgen", *argv], capture_output=True, text=True, env=dict(os.environ)
    )
    return proc.returncode, proc.stdout, time.perf_counter() - start


@pytest.fixture(scope="module")
def sweep_1e4():
    """``sweep --max-c 10000 --json`` run once as a real process, timed."""
    return cli_subprocess("sweep", "--max-c", "10000", "--json")


def test_1_paper_example_reproduced():
    with criterion(1, "analyze 3 4 5 gives (1, 2) and (1/2*sqrt(2), 3/2*sqrt(2)), all identities true, < 0.1 s"):
        cli("analyze", "3", "4", "5", "--json")  # warm caches
        start = time.perf_counter()
        code, out = cli("analyze", "3", "4", "5", "--json")
        elapsed = time.perf_counter() - start
        doc = json.loads(out)
        assert code == 0
        (p1, p2) = doc["pairs"]
        assert (parse_value(p1["x"]), parse_value(p1["y"])) == (Surd(1), Surd(2))
        assert (parse_value(p2["x"]), parse_value(p2["y"])) == (Surd(R(1, 2), 2), Surd(R(3, 2), 2))
        assert (p1["kind"], p2["kind"]) == ("IntegerPair", "IrrationalPair")
        assert doc["identities"] and all(doc["identities"].values())
        assert doc["violations"] == []
        assert elapsed < 0.1, elapsed


def test_2_non_primitive_classification():
    with criterion(2, "9-12-15 has two irrational pairs; 6-8-10 has exactly one integer pair, (1, 3)"):
        _, out = cli("analyze", "9", "12", "15", "--json")
        doc = json.loads(out)
        assert [p["kind"] for p in doc["pairs"]] == ["IrrationalPair", "IrrationalPair"]
        assert doc["beta"] == 3
        assert brute_force_integer_pair(validate(9, 12, 15)) is None

        _, out = cli("analyze", "6", "8", "10", "--json")
        doc = json.loads(out)
        integer = [(p["x"], p["y"]) for p in doc["pairs"] if p["kind"] == "IntegerPair"]
        assert integer == [("1", "3")]
        assert brute_force_integer_pair(validate(6, 8, 10)) == (1, 3)


def test_3_identity_sweep_to_1e4(sweep_1e4):
    with criterion(3, "sweep --max-c 10000 visits every triple (brute-force count) with zero violations, < 10 s"):
        code, out, elapsed = sweep_1e4
        doc = json.loads(out)
        expected = len(kernels.brute_force_triples(10**4))
        assert doc["triples"] == expected
        assert doc["violations"] == []
        assert code == 0
        assert all(n == expected for n in doc["checks"].values()), doc["checks"]
        assert elapsed < 10.0, elapsed


def test_4_primitive_structure_to_1e5():
    with criterion(4, "every primitive triple with c <= 1e5: integer coprime opposite-parity pair + half-odd sqrt(2) pair"):
        triples = enumerate_triples(10**5, primitive_only=True)
        bad = []
        for t in triples:
            odd = t.leg_a if t.leg_a % 2 else t.leg_b
            even = t.leg_a + t.leg_b - odd
            p, q = pair_from_leg(t, odd), pair_from_leg(t, even)
            ok = classify_pair(p) is PairKind.INTEGER_PAIR
            if ok:
                x, y = int(p.x.coeff), int(p.y.coeff)
                ok = math.gcd(x, y) == 1 and (x + y) % 2 == 1
            ok = ok and q.radicand == 2 and all(
                s.coeff.denominator == 2 and s.coeff.numerator % 2 == 1 for s in q
            )
            if not ok:
                bad.append(t)
        assert bad == []


def test_5_quartic_orientation_pinned():
    with criterion(5, "printed quartic orientation false on 3-4-5 (81 vs 1); corrected orientation true for all c <= 1e4"):
        t = validate(3, 4, 5)
        x1, y1 = pair_from_leg(t, 3)
        x2, y2 = pair_from_leg(t, 4)
        lhs = surd_pow4(surd_add(x1, y1))
        assert (lhs, 4 * surd_pow4(x2)) == (81, 1)
        r = analyze(t).identities
        assert not r.printed_quartic_sum
        assert r.quartic_sum and r.quartic_diff

        for t in enumerate_triples(10**4):
            r = analyze(t).identities
            assert r.quartic_sum and r.quartic_diff, t


def test_6_oracle_agreement():
    with criterion(6, "surds match float sqrt((c -/+ L)/2) to 1e-9 (c <= 1e3); integer kinds match brute force (c <= 1e4)"):
        for t in enumerate_triples(1000):
            r = analyze(t)
            for p in [p for p, _ in r.pairs] + list(r.scaled or ()):
                c, leg = t.hyp, p.source_leg
                for s, ref in ((p.x, math.sqrt((c - leg) / 2)), (p.y, math.sqrt((c + leg) / 2))):
                    assert abs(approx_value(s) - ref) <= 1e-9 * ref, (t, s)
        for t in enumerate_triples(10**4):
            found = brute_force_integer_pair(t)
            integer = [(p.x, p.y) for p, k in analyze(t).pairs if k is PairKind.INTEGER_PAIR]
            assert integer == ([(Surd(found[0]), Surd(found[1]))] if found else []), t


def test_7_enumeration_and_determinism(sweep_1e4):
    with criterion(7, "generate --max-c 100 --primitive-only emits 16 ordered unique triples; sweep --jobs 1 == --jobs 4"):
        _, out = cli("generate", "--max-c", "100", "--primitive-only")
        rows = [tuple(int(v) for v in line.split()[:3]) for line in out.splitlines()]
        assert len(rows) == 16
        assert len(set(rows)) == 16
        assert rows == sorted(rows, key=lambda s: (s[2], s[0]))
        assert rows == [tuple(r) for r in kernels.brute_force_triples(100, primitive_only=True).tolist()]

        code4, out4, _ = cli_subprocess("sweep", "--max-c", "10000", "--jobs", "4", "--json")
        code1, out1, _ = sweep_1e4
        assert (code4, out4) == (code1, out1)
