from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qwspectra.errors import IrrationalWeight, ParseError
from qwspectra.scalars import (I, ONE, ZERO, GaussianRational as GR, exact_sqrt,
                               format_gaussian, parse_gaussian, parse_rational)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
gaussians = st.builds(GR, rationals, rationals)


def test_i_squared():
    assert I * I == GR(-1)
    assert (1 + I) * (1 - I) == 2


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_conjugate_abs2(z):
    assert z * z.conjugate() == GR(z.abs2())
    assert complex(z).conjugate() == pytest.approx(complex(z.conjugate()))


def test_floats_rejected():
    with pytest.raises(TypeError):
        GR.coerce(0.5)
    with pytest.raises(ParseError):
        parse_rational(0.5)


@pytest.mark.parametrize("text,value", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)),
                                        (" 6/8 ", Fraction(3, 4)), (5, Fraction(5))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", "", True])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(gaussians)
def test_format_round_trip(z):
    assert parse_gaussian(format_gaussian(z)) == z


def test_format_shapes():
    assert format_gaussian(GR(Fraction(1, 2))) == "1/2"
    assert format_gaussian(GR(0, -3)) == {"re": "0", "im": "-3"}


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    with pytest.raises(IrrationalWeight):
        exact_sqrt(Fraction(1, 2))


def test_constants_and_power():
    assert I ** 4 == ONE and ZERO + ONE == ONE
    assert (2 * I) ** -1 == GR(0, Fraction(-1, 2))
