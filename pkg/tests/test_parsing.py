from fractions import Fraction

import pytest

from curvetorsion.fields import NumberField
from curvetorsion.homopoly import HomogeneousPoly
from curvetorsion.parsing import ParseError, parse_min_poly, parse_poly


def form(terms):
    return HomogeneousPoly.from_terms(terms)


def test_parse_fermat():
    p = parse_poly("x^3+y^3+z^3")
    assert p == form({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    assert p.degree == 3


def test_inhomogeneous_error_names_term():
    with pytest.raises(ParseError) as e:
        parse_poly("x^2+y")
    assert "term y has degree 1" in str(e.value) and "expected 2" in str(e.value)


def test_zero_polynomial_rejected():
    with pytest.raises(ParseError) as e:
        parse_poly("(x+y)*(x-y) - x^2 + y^2")
    assert "zero" in str(e.value)


def test_rational_coefficients():
    p = parse_poly("1/2*x^2 - 3*y*z")
    assert p.coeff((2, 0, 0)) == Fraction(1, 2)
    assert p.coeff((0, 1, 1)) == -3


def test_syntax_error_carries_position():
    with pytest.raises(ParseError) as e:
        parse_poly("x^3 +\n* y^3")
    assert e.value.line == 2 and e.value.col == 1


def test_unknown_symbol():
    with pytest.raises(ParseError) as e:
        parse_poly("x^2 + w*y")
    assert "unknown symbol 'w'" in str(e.value)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError) as e:
        parse_poly("2x^2 + y^2")
    assert "implicit multiplication" in str(e.value)


def test_parentheses_and_unary_minus():
    p = parse_poly("-(x - y)^2 + z^2")
    assert p == form({(2, 0, 0): -1, (1, 1, 0): 2, (0, 2, 0): -1, (0, 0, 2): 1})


def test_exponent_must_be_integer():
    with pytest.raises(ParseError):
        parse_poly("x^1/2 * y + z^2")


def test_number_field_coefficients():
    K = NumberField([1, 1, 1], symbol="w")
    p = parse_poly("x + (1 + 2*w)*y + w^2*z", K)
    assert p.coeff((0, 1, 0)) == K.element([1, 2])
    # w^2 reduces to -1 - w modulo the minimal polynomial
    assert p.coeff((0, 0, 1)) == K.element([-1, -1])


def test_generator_requires_field():
    with pytest.raises(ParseError):
        parse_poly("w*x^2 + y^3", None)


def test_min_poly_parsing():
    mp = parse_min_poly("w^2 + w + 1", "w")
    assert list(mp.coeffs) == [1, 1, 1]
    with pytest.raises(ParseError):
        parse_min_poly("w^2 + x", "w")


def test_roundtrip_through_text(fermat):
    text = fermat.equation.text()
    assert parse_poly(text) == fermat.equation


def test_roundtrip_number_field():
    K = NumberField([1, 1, 1], symbol="w")
    p = parse_poly("x^2 + (1 - w)*x*y + 2/3*z^2", K)
    assert parse_poly(p.text(), K) == p
