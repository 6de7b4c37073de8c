from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydecomp.diophantine import build_H
from polydecomp.parse import ParseError, canonical_text, parse
from polydecomp.poly import Polynomial

P = Polynomial


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^4 + 2x^3 + x^2", [0, 0, 1, 2, 1]),
        ("x^4+2*x^3+x^2", [0, 0, 1, 2, 1]),
        ("  x ^ 4 + 2 x^3 + x ^2 ", [0, 0, 1, 2, 1]),
        ("binomial(x,2)", [0, Fraction(-1, 2), Fraction(1, 2)]),
        ("risingfactorial(x, 3)", [0, 2, 3, 1]),
        ("(x+1)^2", [1, 2, 1]),
        ("-x", [0, -1]),
        ("3/6", [Fraction(1, 2)]),
        ("2(x-1)(x+1)", [-2, 0, 2]),
        ("x^0", [1]),
        ("0", []),
    ],
)
def test_parse_examples(text, coeffs):
    assert parse(text) == P(coeffs)


def test_H4_text():
    assert parse("1/24*x^4 - 1/12 x^3 + 11/24 x^2 - 5/12 x + 1") == build_H(4)


def test_precedence():
    assert parse("2*x^2") == P([0, 0, 2])
    assert parse("-x^2") == P([0, 0, -1])
    assert parse("1 - x - x") == P([1, -2])
    assert parse("(2x)^2") == P([0, 0, 4])


@pytest.mark.parametrize(
    "text, column",
    [("x^^2", 3), ("(x+1", 5), ("x + $", 5), ("2/0", 3), ("y", 1), ("x^-1", 3), ("", 1)],
)
def test_syntax_errors_carry_columns(text, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.column == column


def test_exponent_cap():
    with pytest.raises(ParseError):
        parse("x^1000001")
    with pytest.raises(ParseError):
        parse("x^50", exponent_cap=10)
    assert parse("x^10", exponent_cap=10).degree == 10


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([0, 0, 1, 2, 1], "x^4 + 2*x^3 + x^2"),
        ([], "0"),
        ([Fraction(1, 2)], "1/2"),
        ([-1, 0, Fraction(-3, 4)], "-3/4*x^2 - 1"),
        ([0, 1], "x"),
    ],
)
def test_canonical_text(coeffs, text):
    assert canonical_text(P(coeffs)) == text


bounded = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**6)


@settings(max_examples=1000, deadline=None)
@given(st.lists(bounded, max_size=31))
def test_round_trip(coeffs):
    f = P(coeffs)
    text = canonical_text(f)
    assert parse(text) == f
    assert canonical_text(parse(text)) == text
