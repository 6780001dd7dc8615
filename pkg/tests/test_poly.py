from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.errors import ParseError, ValidationError
from lefschetz.poly import Poly, grevlex_key, grlex_key, parse_poly

XYZ = ("x", "y", "z")


def test_parse_basic_terms():
    f = parse_poly("x^2 + 2*x*y", XYZ)
    assert f.terms == {(2, 0, 0): 1, (1, 1, 0): 2}
    assert f.degree() == 2


def test_parse_zero():
    f = parse_poly("0", XYZ)
    assert f.is_zero()
    assert f.degree() is None


def test_parse_inhomogeneous_rejected_with_degrees():
    with pytest.raises(ValidationError) as err:
        parse_poly("x + y^2", XYZ, homogeneous=True)
    assert "1" in str(err.value) and "2" in str(err.value)


def test_parse_rational_coefficients_and_signs():
    f = parse_poly("3/2*x - y + 1/3*z", XYZ)
    assert f.terms[(1, 0, 0)] == Fraction(3, 2)
    assert f.terms[(0, 1, 0)] == -1
    assert f.terms[(0, 0, 1)] == Fraction(1, 3)


def test_parse_implicit_products_and_whitespace():
    assert parse_poly("2 x y^2", XYZ) == parse_poly("2*x*y^2", XYZ)
    assert parse_poly("x^2y", XYZ) == parse_poly("x^2*y", XYZ)


def test_parse_cancellation():
    assert parse_poly("x - x", XYZ).is_zero()


def test_parse_syntax_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x + @", XYZ)
    assert err.value.position == 4


def test_parse_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("x + w", XYZ)


def test_parse_dangling_operator():
    with pytest.raises(ParseError):
        parse_poly("x +", XYZ)
    with pytest.raises(ParseError):
        parse_poly("2*", XYZ)


def test_mul_square_binomial():
    f = parse_poly("x + y", XYZ)
    assert f * f == parse_poly("x^2 + 2*x*y + y^2", XYZ)


def test_mul_zero_absorbs():
    f = parse_poly("x + y", XYZ)
    assert (f * Poly.zero(3)).is_zero()


def test_mul_monomials_degree_adds():
    f = parse_poly("x", XYZ) * parse_poly("y^2", XYZ)
    assert f == parse_poly("x*y^2", XYZ)
    assert f.degree() == 3


def test_format_round_trip_and_canonical_order():
    f = parse_poly("z^2 - 2*x*y + x^2", XYZ)
    text = f.format(XYZ)
    assert text == "x^2 - 2*x*y + z^2"
    assert parse_poly(text, XYZ) == f


def test_format_zero_and_constants():
    assert Poly.zero(3).format(XYZ) == "0"
    assert Poly.constant(Fraction(-3, 2), 3).format(XYZ) == "-3/2"


def test_evaluate():
    f = parse_poly("x^2 + 2*x*y", XYZ)
    assert f.evaluate((2, 3, 0)) == 4 + 12


def test_grlex_vs_grevlex_disagree_where_expected():
    # x*z^2 vs y^3: grlex ranks by exponent tuple, grevlex penalizes trailing z
    a = (1, 0, 2)
    b = (0, 3, 0)
    assert grlex_key(a) > grlex_key(b)
    assert grevlex_key(a) < grevlex_key(b)


@st.composite
def polys(draw):
    nterms = draw(st.integers(0, 5))
    terms = {}
    for _ in range(nterms):
        mono = tuple(draw(st.integers(0, 3)) for _ in range(3))
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
        terms[mono] = terms.get(mono, 0) + coeff
    return Poly.from_terms(3, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f - g) + g == f


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_product_degree_adds(f, g):
    fg = f * g
    if f.is_zero() or g.is_zero():
        assert fg.is_zero()
    else:
        # over a field there are no zero divisors
        assert not fg.is_zero()
        assert fg.degree() == f.degree() + g.degree()


@settings(max_examples=40, deadline=None)
@given(polys())
def test_format_parse_round_trip(f):
    assert parse_poly(f.format(XYZ), XYZ) == f
