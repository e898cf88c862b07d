"""Dense exact matrices over Q(i).

An ``ExactMatrix`` is stored as a positive common denominator together with
integer numerator arrays for the real and imaginary parts.  The imaginary
array is ``None`` for purely real matrices.  Instances are immutable and kept
in lowest terms, so equality is a plain comparison of the stored parts.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch
from .scalars import GaussianRational

_INT64_SAFE = 1 << 62


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(abs(int(x)) for x in arr.flat)


def int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of two integer object arrays.

    Uses int64 arithmetic when the entry bounds guarantee no overflow.
    """
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    bound = _max_abs(a) * _max_abs(b) * a.shape[1]
    if bound < _INT64_SAFE:
        prod = a.astype(np.int64) @ b.astype(np.int64)
        return prod.astype(object)
    return np.dot(a, b)


class ExactMatrix:
    __slots__ = ("_den", "_re", "_im")

    def __init__(self, den: int, re: np.ndarray, im: np.ndarray | None = None):
        if re.ndim != 2:
            raise DimensionMismatch("matrix numerators must be 2-D")
        if im is not None and im.shape != re.shape:
            raise DimensionMismatch("real and imaginary parts differ in shape")
        if den <= 0:
            raise ValueError("denominator must be positive")
        re = re.astype(object)
        if im is not None:
            im = im.astype(object)
            if not any(im.flat):
                im = None
        g = den
        for x in re.flat:
            if g == 1:
                break
            g = gcd(g, x)
        if im is not None:
            for x in im.flat:
                if g == 1:
                    break
                g = gcd(g, x)
        if g > 1:
            den //= g
            re = re // g
            if im is not None:
                im = im // g
        re.setflags(write=False)
        if im is not None:
            im.setflags(write=False)
        self._den = den
        self._re = re
        self._im = im

    # -- construction ----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise DimensionMismatch("ragged rows")
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)}
        return cls.from_entries(n_rows, n_cols, entries)

    @classmethod
    def from_entries(cls, n_rows: int, n_cols: int,
                     entries: Mapping[tuple[int, int], object]) -> "ExactMatrix":
        """Build from a sparse ``{(i, j): value}`` map; missing entries are zero."""
        vals = {k: GaussianRational.coerce(v) for k, v in entries.items() if v != 0}
        den = 1
        for z in vals.values():
            den = lcm(den, z.re.denominator, z.im.denominator)
        re = np.zeros((n_rows, n_cols), dtype=object)
        im = None
        for (i, j), z in vals.items():
            if not (0 <= i < n_rows and 0 <= j < n_cols):
                raise DimensionMismatch(f"entry {(i, j)} outside {n_rows}x{n_cols}")
            re[i, j] = z.re.numerator * (den // z.re.denominator)
            if z.im:
                if im is None:
                    im = np.zeros((n_rows, n_cols), dtype=object)
                im[i, j] = z.im.numerator * (den // z.im.denominator)
        return cls(den, re, im)

    @classmethod
    def from_integers(cls, re, im=None, den: int = 1) -> "ExactMatrix":
        return cls(den, _ints(re), None if im is None else _ints(im))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> "ExactMatrix":
        n_cols = n_rows if n_cols is None else n_cols
        return cls(1, np.zeros((n_rows, n_cols), dtype=object))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        re = np.zeros((n, n), dtype=object)
        for i in range(n):
            re[i, i] = 1
        return cls(1, re)

    @classmethod
    def diagonal(cls, values: Iterable) -> "ExactMatrix":
        values = list(values)
        return cls.from_entries(len(values), len(values),
                                {(i, i): v for i, v in enumerate(values)})

    # -- accessors -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self._re.shape

    @property
    def rows(self) -> int:
        return self._re.shape[0]

    @property
    def cols(self) -> int:
        return self._re.shape[1]

    @property
    def is_real(self) -> bool:
        return self._im is None

    @property
    def is_integer(self) -> bool:
        return self._den == 1

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def denominator(self) -> int:
        return self._den

    def numerators(self) -> tuple[np.ndarray, np.ndarray | None]:
        """Integer numerator arrays ``(re, im)``; entries are ``(re + i*im)/denominator``."""
        return self._re, self._im

    def __getitem__(self, idx: tuple[int, int]) -> GaussianRational:
        i, j = idx
        re = Fraction(self._re[i, j], self._den)
        im = Fraction(self._im[i, j], self._den) if self._im is not None else 0
        return GaussianRational(re, im)

    def tolist(self) -> list[list[GaussianRational]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def nonzero(self) -> Iterable[tuple[int, int]]:
        mask = self._re != 0
        if self._im is not None:
            mask = mask | (self._im != 0)
        return [tuple(map(int, ij)) for ij in np.argwhere(mask)]

    # -- algebra ---------------------------------------------------------
    def _combine(self, other: "ExactMatrix", sign: int) -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        den = lcm(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        re = self._re * fa + sign * (other._re * fb)
        im = _add_opt(_scale_opt(self._im, fa), _scale_opt(other._im, sign * fb))
        return ExactMatrix(den, re, im)

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return ExactMatrix(self._den, -self._re, None if self._im is None else -self._im)

    def scale(self, c) -> "ExactMatrix":
        c = GaussianRational.coerce(c)
        den = lcm(c.re.denominator, c.im.denominator)
        cr = c.re.numerator * (den // c.re.denominator)
        ci = c.im.numerator * (den // c.im.denominator)
        re = self._re * cr
        im = self._re * ci
        if self._im is not None:
            re = re - self._im * ci
            im = im + self._im * cr
        return ExactMatrix(self._den * den, re, im)

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return NotImplemented
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "ExactMatrix":
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self._den, self._re.T.copy(),
                           None if self._im is None else self._im.T.copy())

    def conj_transpose(self) -> "ExactMatrix":
        return conj_transpose(self)

    def hadamard(self, other: "ExactMatrix") -> "ExactMatrix":
        """Entrywise product (real matrices only)."""
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        if not (self.is_real and other.is_real):
            raise ValueError("entrywise product is only defined here for real matrices")
        return ExactMatrix(self._den * other._den, self._re * other._re)

    # -- conversions -----------------------------------------------------
    def to_float(self) -> np.ndarray:
        re = np.array([[float(Fraction(x, self._den)) for x in row] for row in self._re.tolist()],
                      dtype=float).reshape(self.shape)
        if self._im is None:
            return re
        im = np.array([[float(Fraction(x, self._den)) for x in row] for row in self._im.tolist()],
                      dtype=float).reshape(self.shape)
        return re + 1j * im

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape or self._den != other._den:
            return False
        if (self._im is None) != (other._im is None):
            return False
        if not np.array_equal(self._re, other._re):
            return False
        return self._im is None or np.array_equal(self._im, other._im)

    __hash__ = None

    def first_difference(self, other: "ExactMatrix") -> tuple[int, int] | None:
        """Index of the first (row-major) entry where two same-shape matrices differ."""
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")
        for i in range(self.rows):
            for j in range(self.cols):
                if self[i, j] != other[i, j]:
                    return (i, j)
        return None

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, den={self._den}, real={self.is_real})"


def _ints(arr) -> np.ndarray:
    arr = np.asarray(arr)
    out = np.zeros(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = int(x)
    return out


def _scale_opt(arr, f):
    return None if arr is None else arr * f


def _add_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    ar, ai = a.numerators()
    br, bi = b.numerators()
    re = int_matmul(ar, br)
    im = None
    if ai is not None and bi is not None:
        re = re - int_matmul(ai, bi)
    if ai is not None:
        im = int_matmul(ai, br)
    if bi is not None:
        t = int_matmul(ar, bi)
        im = t if im is None else im + t
    return ExactMatrix(a.denominator * b.denominator, re, im)


def conj_transpose(a: ExactMatrix) -> ExactMatrix:
    """Adjoint (conjugate transpose)."""
    re, im = a.numerators()
    return ExactMatrix(a.denominator, re.T.copy(), None if im is None else (-im).T.copy())
