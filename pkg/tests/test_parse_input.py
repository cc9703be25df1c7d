from fractions import Fraction

import pytest
from hypothesis import given, settings

from algebra import clifford, default_basis, octonion
from errors import ParseError
from parse_input import (format_polynomial, is_rational_string, parse_index_list,
                         parse_polynomial, parse_rational)
from poly import constant, variable, zero
from strategies import polynomials

PLANE = default_basis(clifford(2))
OCTONIONS = default_basis(octonion())


def test_parse_and_format_keep_the_text():
    text = "3/2*x0^2*x1*e12 - x2*e1 + 1"
    assert format_polynomial(parse_polynomial(PLANE, text)) == text


def test_like_terms_are_collected():
    f = parse_polynomial(PLANE, "x1*x1 + 2*x1^2 - x2 + x2")
    assert f == 3 * variable(PLANE, 1, 2)
    assert str(parse_polynomial(PLANE, "x1 - x1")) == "0"
    assert str(zero(PLANE)) == "0"


def test_constants_and_signs():
    assert parse_polynomial(PLANE, "-1/2*e1") == -parse_polynomial(PLANE, "1/2*e1")
    assert parse_polynomial(PLANE, "  - 3 ") == constant(PLANE, -3)
    assert str(parse_polynomial(PLANE, "1")) == "1"
    assert str(parse_polynomial(PLANE, "-e1")) == "-e1"


def test_octonion_names():
    f = parse_polynomial(OCTONIONS, "x4*x5*li - 8*x0*lk")
    assert str(f) == "-8*x0*lk + x4*x5*li"


@pytest.mark.parametrize("text", [
    "", "x1 +", "e1*x1", "x5", "2*y1", "1/0", "x1**2", "+", "e3",
])
def test_rejects(text):
    with pytest.raises(ParseError):
        parse_polynomial(PLANE, text)


def test_rationals():
    assert parse_rational("7/3") == Fraction(7, 3)
    assert parse_rational(" 4 ") == 4
    assert is_rational_string("12")
    assert not is_rational_string("-1")
    with pytest.raises(ParseError):
        parse_rational("1.5")


def test_index_lists():
    assert parse_index_list("1,3,5") == [1, 3, 5]
    assert parse_index_list("{2,4}") == [2, 4]
    assert parse_index_list("") == []
    assert parse_index_list(None) is None
    with pytest.raises(ParseError):
        parse_index_list("a,b")


@settings(max_examples=100, deadline=None)
@given(polynomials(PLANE))
def test_format_parses_back(f):
    assert parse_polynomial(PLANE, format_polynomial(f)) == f
