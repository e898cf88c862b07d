from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qwspectra.errors import NonzeroRemainder
from qwspectra.poly import X, ExactPolynomial, poly_divide_exact
from qwspectra.scalars import GaussianRational as GR

small = st.fractions(max_denominator=9).filter(lambda q: abs(q) < 50)
polys = st.lists(small, min_size=0, max_size=6).map(ExactPolynomial)


def test_from_roots_and_eval():
    p = ExactPolynomial.from_roots([1, -1, 2])
    assert p == (X - 1) * (X + 1) * (X - 2)
    assert p(2) == 0 and p(3) == 8


def test_degree_and_zero():
    assert ExactPolynomial([0, 0]).degree == -1
    assert ExactPolynomial([1, 0, 0]).degree == 0


@given(polys, polys)
def test_divmod_identity(a, b):
    if b.degree < 0:
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_exact_division():
    p = (X * X - 1) ** 3 * (X - 5)
    assert poly_divide_exact(p, (X * X - 1) ** 2) == (X * X - 1) * (X - 5)
    with pytest.raises(NonzeroRemainder):
        poly_divide_exact(p, X - 2)


def test_multiplicity():
    p = (X - 1) ** 4 * (X + 1) ** 2 * (X - 2)
    assert p.multiplicity(X - 1) == 4
    assert p.multiplicity(X * X - 1) == 2
    assert p.multiplicity(X - 3) == 0


def test_interpolate_recovers():
    p = ExactPolynomial([Fraction(1, 3), -2, GR(0, 1), 5])
    xs = list(range(-2, 2))
    assert ExactPolynomial.interpolate(xs, [p(x) for x in xs]) == p


@given(polys)
def test_json_round_trip(p):
    assert ExactPolynomial.from_json(p.to_json()) == p


def test_substitute():
    p = X * X + 1
    assert p.substitute(X + 1) == X * X + 2 * X + 2


def test_first_difference():
    assert (X + 1).first_difference(X + 2) == (0, GR(1), GR(2))
    assert (X + 1).first_difference(X + 1) is None
