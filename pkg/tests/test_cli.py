import dataclasses
import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from pythgen.cli import EXIT_NON_INTEGER, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, json_int, main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("sides", ["3 4 5", "6 8 10", "9 12 15"])
def test_analyze_json_golden(sides):
    code, out, _ = run("analyze", *sides.split(), "--json")
    assert code == EXIT_OK
    golden = json.loads((GOLDEN / f"analyze_{sides.replace(' ', '_')}.json").read_text())
    assert json.loads(out) == golden


def test_analyze_json_schema_keys():
    _, out, _ = run("analyze", "5", "12", "13", "--json")
    doc = json.loads(out)
    assert {"triple", "beta", "primitive_part", "pairs", "identities", "violations"} <= set(doc)
    assert all(set(p) == {"x", "y", "kind", "source_leg"} for p in doc["pairs"])


def test_analyze_human_output():
    code, out, _ = run("analyze", "3", "4", "5")
    assert code == EXIT_OK
    assert "x = 1 " in out and "y = 2 " in out
    assert "1/2*sqrt(2)" in out and "3/2*sqrt(2)" in out
    assert "false" not in out.split("printed orientation")[0]


def test_analyze_any_side_order():
    _, a, _ = run("analyze", "5", "4", "3", "--json")
    _, b, _ = run("analyze", "3", "4", "5", "--json")
    assert a == b


@pytest.mark.parametrize("argv", [["analyze", "3", "4", "6"], ["analyze", "0", "4", "4"], ["analyze", "3", "4"], ["analyze", "a", "4", "5"]])
def test_analyze_invalid(argv):
    code, out, err = run(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err


def test_pair():
    assert run("pair", "1", "2") == (EXIT_OK, "4 3 5\n", "")
    code, out, _ = run("pair", "1/2*sqrt(2)", "3/2*sqrt(2)")
    assert (code, out) == (EXIT_OK, "3 4 5\n")
    code, out, _ = run("pair", "2", "1", "--json")
    assert json.loads(out)["triple"] == [4, 3, 5]


def test_pair_errors():
    code, _, err = run("pair", "1", "3/2")
    assert code == EXIT_NON_INTEGER
    assert "5/4" in err
    assert run("pair", "1", "sqrt(")[0] == EXIT_USAGE
    assert run("pair", "1", "sqrt(-2)")[0] == EXIT_USAGE
    assert run("pair", "sqrt(2)", "sqrt(3)")[0] == EXIT_USAGE


def test_generate():
    code, out, _ = run("generate", "--max-c", "5")
    assert (code, out) == (EXIT_OK, "3 4 5 IntegerPair IrrationalPair\n")
    _, out, _ = run("generate", "--max-c", "100", "--primitive-only")
    assert len(out.splitlines()) == 16
    _, out, _ = run("generate", "--max-c", "15")
    assert [line.split()[:3] for line in out.splitlines()] == [
        ["3", "4", "5"], ["6", "8", "10"], ["5", "12", "13"], ["9", "12", "15"]
    ]
    _, out, _ = run("generate", "--max-c", "15", "--json")
    docs = [json.loads(line) for line in out.splitlines()]
    assert docs[3] == {"triple": [9, 12, 15], "kinds": ["IrrationalPair", "IrrationalPair"]}


@pytest.mark.parametrize("argv", [["generate", "--max-c", "4"], ["generate"], ["generate", "--max-c", "x"], ["sweep", "--max-c", "4"], ["sweep", "--max-c", "100", "--jobs", "0"], ["frobnicate"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_sweep_clean():
    code, out, err = run("sweep", "--max-c", "100")
    assert code == EXIT_OK
    assert "triples     52" in out
    assert "violations  0" in out
    assert "elapsed" in err
    code, out, _ = run("sweep", "--max-c", "100", "--json")
    doc = json.loads(out)
    assert doc["triples"] == 52 and doc["violations"] == []


def test_sweep_failure_exit(monkeypatch):
    from pythgen import identities

    real = identities.check_relations

    def broken(p1, p2, hyp, **kw):
        r = real(p1, p2, hyp, **kw)
        return dataclasses.replace(r, quartic_sum=False, witnesses={"quartic_sum": ("1", "81")})

    monkeypatch.setattr(identities, "check_relations", broken)
    code, out, _ = run("sweep", "--max-c", "15")
    assert code == EXIT_VERIFY_FAILED
    assert "VIOLATION" in out
    code, _, _ = run("analyze", "3", "4", "5")
    assert code == EXIT_VERIFY_FAILED


def test_json_int_big_values():
    assert json_int(5) == 5
    assert json_int(1 << 70) == str(1 << 70)


def test_exit_codes_disjoint():
    assert len({EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_NON_INTEGER}) == 4


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "pythgen", "pair", "1", "2"], capture_output=True, text=True
    )
    assert (out.returncode, out.stdout) == (0, "4 3 5\n")
