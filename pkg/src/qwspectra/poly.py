"""Univariate polynomials over Q(i), coefficients stored constant term first."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonzeroRemainder
from .scalars import GaussianRational, format_gaussian, parse_gaussian

GR = GaussianRational


class ExactPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GR.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "ExactPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "ExactPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-GR.coerce(r), 1])
        return p

    @classmethod
    def interpolate(cls, xs: Sequence, ys: Sequence) -> "ExactPolynomial":
        """Unique polynomial of degree < len(xs) through the points (Newton form)."""
        xs = [GR.coerce(x) for x in xs]
        if len(set((x.re, x.im) for x in xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        coef = [GR.coerce(y) for y in ys]
        n = len(xs)
        for j in range(1, n):
            for i in range(n - 1, j - 1, -1):
                coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
        p = cls([coef[-1]]) if coef else cls()
        for i in range(n - 2, -1, -1):
            p = p * cls([-xs[i], 1]) + cls([coef[i]])
        return p

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else GR(0)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else GR(0)

    def __call__(self, x):
        """Exact Horner evaluation; floats and complex values are evaluated in float."""
        if isinstance(x, (float, complex)):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + complex(c)
            return acc
        x = GR.coerce(x)
        acc = GR(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _coerce_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __mul__(self, other):
        other = _coerce_poly(other)
        if self.is_zero or other.is_zero:
            return ExactPolynomial()
        out = [GR(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial powers are not polynomials")
        result = ExactPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, den: "ExactPolynomial") -> tuple["ExactPolynomial", "ExactPolynomial"]:
        den = _coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = den.degree
        lead = den.leading
        if len(rem) - 1 < dd:
            return ExactPolynomial(), self
        quot = [GR(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(den.coeffs):
                    rem[k + j] = rem[k + j] - q * c
        return ExactPolynomial(quot), ExactPolynomial(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def multiplicity(self, factor: "ExactPolynomial") -> int:
        """Largest e with factor**e dividing self (self must be nonzero)."""
        if self.is_zero:
            raise ValueError("multiplicity in the zero polynomial is unbounded")
        if factor.degree < 1:
            raise ValueError("factor must be nonconstant")
        e, p = 0, self
        while True:
            q, r = p.divmod(factor)
            if not r.is_zero:
                return e
            e, p = e + 1, q

    def substitute(self, inner: "ExactPolynomial") -> "ExactPolynomial":
        """Composition self(inner(x))."""
        acc = ExactPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + ExactPolynomial([c])
        return acc

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        try:
            other = _coerce_poly(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def first_difference(self, other: "ExactPolynomial"):
        """(index, mine, theirs) of the lowest differing coefficient, or None."""
        n = max(len(self.coeffs), len(other.coeffs))
        for k in range(n):
            if self[k] != other[k]:
                return k, self[k], other[k]
        return None

    def to_json(self) -> list:
        return [format_gaussian(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "ExactPolynomial":
        return cls(parse_gaussian(c) for c in data)

    def to_complex(self) -> list[complex]:
        return [complex(c) for c in self.coeffs]

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if c.is_real:
                cs = str(c.re)
            else:
                cs = f"({c})"
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                cs = ""
            elif mono and c == -1:
                cs = "-"
            terms.append(cs + ("*" if cs and cs != "-" and mono else "") + mono)
        return " + ".join(terms).replace("+ -", "- ")


def _coerce_poly(x) -> ExactPolynomial:
    if isinstance(x, ExactPolynomial):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return ExactPolynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactPolynomial")


X = ExactPolynomial([0, 1])


def poly_divide_exact(num: ExactPolynomial, den: ExactPolynomial) -> ExactPolynomial:
    """Quotient num/den, raising NonzeroRemainder unless the division is exact."""
    q, r = num.divmod(den)
    if not r.is_zero:
        raise NonzeroRemainder(r)
    return q
