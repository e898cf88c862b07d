"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals Q(i).

Serialization follows the JSON conventions used throughout the package:
a rational is the string ``"p/q"`` (or ``"p"`` for integers) and a Gaussian
rational is either such a string (when purely real) or ``{"re": .., "im": ..}``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Union

from .errors import IrrationalWeight, ParseError

RationalLike = Union[int, Fraction]


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with ``Fraction`` components."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)) or isinstance(value, Rational):
            return cls(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact; use float mode")
        if isinstance(value, float):
            raise TypeError("floats are not exact; use float mode")
        if isinstance(value, (str, dict)):
            return parse_gaussian(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    # -- structure -------------------------------------------------------
    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- arithmetic ------------------------------------------------------
    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction. Floats are rejected."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    s = text.strip()
    if "/" in s:
        p, _, q = s.partition("/")
        try:
            num, den = int(p), int(q)
        except ValueError:
            raise ParseError(f"not a rational: {text!r}") from None
        if den == 0:
            raise ParseError(f"zero denominator: {text!r}")
        return Fraction(num, den)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ParseError(f"not a rational: {text!r}") from None


def parse_gaussian(obj) -> GaussianRational:
    if isinstance(obj, GaussianRational):
        return obj
    if isinstance(obj, dict):
        return GaussianRational(parse_rational(obj.get("re", 0)),
                                parse_rational(obj.get("im", 0)))
    return GaussianRational(parse_rational(obj))


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def format_gaussian(z) -> str | dict:
    z = GaussianRational.coerce(z)
    if z.im == 0:
        return format_rational(z.re)
    return {"re": format_rational(z.re), "im": format_rational(z.im)}


def exact_sqrt(q) -> Fraction:
    """Rational square root of a nonnegative rational, or IrrationalWeight."""
    q = Fraction(q)
    if q < 0:
        raise IrrationalWeight(f"square root of negative value {q}")
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra != a or rb * rb != b:
        raise IrrationalWeight(f"sqrt({q}) is irrational")
    return Fraction(ra, rb)
