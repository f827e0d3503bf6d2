from fractions import Fraction as R

import pytest
from hypothesis import given, strategies as st

from pythgen.exact import Surd
from pythgen.generators import analyze
from pythgen.surdtext import NegativeRadicandError, ParseError, parse_value, render
from pythgen.triples import enumerate_triples


@pytest.mark.parametrize(
    "text,coeff,radicand",
    [
        ("7", R(7), 1),
        ("3/2*sqrt(2)", R(3, 2), 2),
        ("sqrt(12)", R(2), 3),
        ("-4/6", R(-2, 3), 1),
        ("sqrt(1/2)", R(1, 2), 2),
        (" 2 * sqrt( 8 ) ", R(4), 2),
        ("sqrt(0)", R(0), 1),
        ("0*sqrt(5)", R(0), 1),
    ],
)
def test_parse_value(text, coeff, radicand):
    s = parse_value(text)
    assert (s.coeff, s.radicand) == (coeff, radicand)


@pytest.mark.parametrize(
    "text,position",
    [("", 0), ("abc", 0), ("3/", 2), ("3/0", 2), ("2*", 2), ("sqrt(2", 6), ("1 2", 2), ("3/-2", 2)],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_value(text)
    assert info.value.position == position


def test_negative_radicand():
    with pytest.raises(NegativeRadicandError):
        parse_value("sqrt(-2)")


@pytest.mark.parametrize(
    "s,text",
    [(Surd(R(3, 2), 2), "3/2*sqrt(2)"), (Surd(1, 2), "sqrt(2)"), (Surd(-1, 3), "-1*sqrt(3)"), (Surd(R(5, 4)), "5/4"), (Surd(0), "0")],
)
def test_render(s, text):
    assert render(s) == text
    assert parse_value(text) == s


@given(
    st.fractions(min_value=-(10**9), max_value=10**9, max_denominator=10**9),
    st.integers(min_value=1, max_value=10**9),
)
def test_render_parse_round_trip(coeff, radicand):
    s = Surd(coeff, radicand)
    assert parse_value(render(s)) == s


def test_round_trip_over_reports():
    for t in enumerate_triples(1000):
        r = analyze(t)
        for p, _ in r.pairs:
            for s in p:
                assert parse_value(render(s)) == s
