"""Expression grammar and canonical printing."""

import pytest
from hypothesis import given

from conftest import ratfuncs
from mahlerkit import ExprError, Poly, RatFunc, format_ratfunc, parse_ratfunc_expr
from mahlerkit.exprparse import format_rational, parse_rational


def test_literal_reciprocal():
    assert parse_ratfunc_expr("1/(1+x)") == RatFunc(1, Poly([1, 1]))


def test_literal_quotient():
    assert parse_ratfunc_expr("(-3*x^2+1)/(1-x)") == RatFunc(Poly([1, 0, -3]), Poly([1, -1]))


def test_common_denominator():
    # 1/(1-x) + x = (1 + x - x^2)/(1 - x)
    assert parse_ratfunc_expr("1/(1-x) + x") == RatFunc(Poly([1, 1, -1]), Poly([1, -1]))


def test_power_binds_tighter_than_unary_minus():
    assert parse_ratfunc_expr("-x^2") == RatFunc(Poly([0, 0, -1]))
    assert parse_ratfunc_expr("(-x)^2") == RatFunc(Poly([0, 0, 1]))


def test_left_associativity():
    assert parse_ratfunc_expr("8/2/2") == RatFunc(2)
    assert parse_ratfunc_expr("1-1-1") == RatFunc(-1)


def test_whitespace_insignificant():
    assert parse_ratfunc_expr("  1 /\n( 1 -  x )") == parse_ratfunc_expr("1/(1-x)")


def test_syntax_error_position():
    with pytest.raises(ExprError) as info:
        parse_ratfunc_expr("1 +\n  * x")
    assert (info.value.line, info.value.col) == (2, 3)


@pytest.mark.parametrize("text", ["", "1/(1-x", "x y", "2^x", "1 $ 2", "()"])
def test_rejects_malformed(text):
    with pytest.raises(ExprError):
        parse_ratfunc_expr(text)


def test_division_by_zero_polynomial():
    with pytest.raises(ExprError, match="zero polynomial"):
        parse_ratfunc_expr("1/(x - x)")


def test_canonical_form_of_geometric_series():
    assert format_ratfunc(parse_ratfunc_expr("2/(2-2*x)")) == "1/(1 - x)"


@given(ratfuncs())
def test_print_parse_fixed_point(r):
    text = format_ratfunc(r)
    again = parse_ratfunc_expr(text)
    assert again == r
    assert format_ratfunc(again) == text


def test_rational_strings():
    assert parse_rational("-3/6") == parse_rational("-1/2")
    assert format_rational(parse_rational("4")) == "4"
    assert format_rational(parse_rational("6/4")) == "3/2"
    with pytest.raises(ValueError):
        parse_rational("1/0")
