"""Exact characteristic polynomials and determinants over Q(i).

``charpoly_exact`` runs the Faddeev-LeVerrier recursion.  The default
``method="modular"`` clears denominators, runs the recursion modulo enough
28-bit primes to cover a Hadamard-type coefficient bound, and lifts with the
Chinese remainder theorem; the recursion only divides by 1..n so every
reduction is well defined.  ``method="direct"`` runs the same recursion on
``ExactMatrix`` values and is the slow reference path.

``det_bareiss`` and ``interpolate_determinant`` form the independent
determinant route used as an oracle and for the matrix pencils that appear
on the right-hand sides of the verified identities.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb, isqrt
from typing import Callable

import numpy as np

from . import kernels
from .errors import NonSquare
from .matrix import ExactMatrix
from .poly import ExactPolynomial
from .scalars import GaussianRational

GR = GaussianRational

_PRIME_CEILING = 1 << 28
_PRIMES: list[int] = []


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.2e9
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes(count: int) -> list[int]:
    """The ``count`` largest primes below 2**28, descending."""
    candidate = _PRIMES[-1] - 2 if _PRIMES else _PRIME_CEILING - 1
    while len(_PRIMES) < count:
        if _is_prime(candidate):
            _PRIMES.append(candidate)
        candidate -= 2
    return _PRIMES[:count]


def coefficient_bound(re: np.ndarray, im: np.ndarray | None) -> int:
    """Bound on |c_k| for the charpoly coefficients of a Gaussian-integer matrix.

    c_k is a signed sum of the C(n, k) principal k-minors, each bounded by
    the product of its k row norms (Hadamard).
    """
    n = re.shape[0]
    norms = []
    for i in range(n):
        s = sum(int(x) * int(x) for x in re[i])
        if im is not None:
            s += sum(int(x) * int(x) for x in im[i])
        norms.append(isqrt(s) + 1 if s else 0)
    norms.sort(reverse=True)
    best, prod = 1, 1
    for k in range(1, n + 1):
        prod *= norms[k - 1]
        best = max(best, comb(n, k) * prod)
    return best


def _symmetric(x: int, modulus: int) -> int:
    x %= modulus
    return x - modulus if x > modulus // 2 else x


def _crt_lift(residues: list[np.ndarray], ps: list[int]) -> list[int]:
    """Incremental CRT; returns symmetric representatives modulo prod(ps)."""
    values = [int(r) for r in residues[0]]
    modulus = ps[0]
    for res, p in zip(residues[1:], ps[1:]):
        inv = pow(modulus % p, -1, p)
        for idx, r in enumerate(res):
            v = values[idx]
            t = ((int(r) - v) * inv) % p
            values[idx] = v + modulus * t
        modulus *= p
    return [_symmetric(v, modulus) for v in values]


class KernelSelfCheckFailed(ArithmeticError):
    """The Faddeev-LeVerrier terminal matrix did not vanish."""


def _reduce(arr: np.ndarray, p: int) -> np.ndarray:
    return np.array([[int(x) % p for x in row] for row in arr.tolist()],
                    dtype=np.int64).reshape(arr.shape)


def charpoly_gaussian_integer(re: np.ndarray, im: np.ndarray | None,
                              backend: Callable | None = None) -> list[GaussianRational]:
    """Charpoly coefficients c_0..c_n (c_k multiplies lambda**(n-k)) of re + i*im."""
    fn = backend or kernels.fl_charpoly_mod
    n = re.shape[0]
    if n == 0:
        return [GR(1)]
    bound = coefficient_bound(re, im)
    ps: list[int] = []
    needed = 2 * bound + 1
    prod = 1
    count = 0
    while prod <= needed:
        count += 1
        prod *= primes(count)[-1]
    ps = primes(count)

    def run(p):
        c_re, c_im, ok = fn(_reduce(re, p), None if im is None else _reduce(im, p), p)
        if not ok:
            raise KernelSelfCheckFailed(f"Faddeev-LeVerrier self-check failed mod {p}")
        return c_re, c_im

    workers = min(kernels.threads(), len(ps))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, ps))
    else:
        results = [run(p) for p in ps]
    lifted_re = _crt_lift([r[0] for r in results], ps)
    lifted_im = _crt_lift([r[1] for r in results], ps) if im is not None else [0] * (n + 1)
    return [GR(a, b) for a, b in zip(lifted_re, lifted_im)]


def faddeev_leverrier(m: ExactMatrix) -> tuple[ExactPolynomial, ExactMatrix]:
    """Direct exact recursion; returns the charpoly and the terminal matrix
    ``A M_n + c_n I`` (zero for a correct run)."""
    if not m.is_square:
        raise NonSquare(f"charpoly of a {m.rows}x{m.cols} matrix")
    n = m.rows
    eye = ExactMatrix.identity(n)
    coeffs = [GR(1)]
    current = eye
    for k in range(1, n + 1):
        am = m @ current
        tr = sum((am[i, i] for i in range(n)), GR(0))
        ck = -tr / k
        coeffs.append(ck)
        current = am + eye.scale(ck)
    return ExactPolynomial(reversed(coeffs)), current


def charpoly_exact(m: ExactMatrix, method: str = "modular",
                   backend: Callable | None = None) -> ExactPolynomial:
    """det(lambda*I - m) with exact Q(i) coefficients."""
    if not m.is_square:
        raise NonSquare(f"charpoly of a {m.rows}x{m.cols} matrix")
    if method == "direct":
        return faddeev_leverrier(m)[0]
    if method == "interpolation":
        return charpoly_by_interpolation(m)
    if method != "modular":
        raise ValueError(f"unknown charpoly method {method!r}")
    re, im = m.numerators()
    d = m.denominator
    cs = charpoly_gaussian_integer(re, im, backend)
    # det(x I - N/d) = d^-n det(d x I - N): coefficient c_k scales by d^-k
    scaled = [c / (d ** k) if d != 1 else c for k, c in enumerate(cs)]
    return ExactPolynomial(reversed(scaled))


# -- determinants ------------------------------------------------------------

def _gdiv(ar: int, ai: int, br: int, bi: int) -> tuple[int, int]:
    """Exact Gaussian-integer quotient (a / b); asserts exactness."""
    nrm = br * br + bi * bi
    qr, rr = divmod(ar * br + ai * bi, nrm)
    qi, ri = divmod(ai * br - ar * bi, nrm)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian-integer division in Bareiss elimination")
    return qr, qi


def det_bareiss(m: ExactMatrix) -> GaussianRational:
    """Fraction-free (Bareiss) determinant over Z[i], rescaled to Q(i)."""
    if not m.is_square:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return GR(1)
    re_arr, im_arr = m.numerators()
    a = [[int(x) for x in row] for row in re_arr.tolist()]
    b = ([[int(x) for x in row] for row in im_arr.tolist()]
         if im_arr is not None else [[0] * n for _ in range(n)])
    sign = 1
    pr, pi = 1, 0
    for k in range(n - 1):
        if a[k][k] == 0 and b[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] or b[r][k]:
                    a[k], a[r] = a[r], a[k]
                    b[k], b[r] = b[r], b[k]
                    sign = -sign
                    break
            else:
                return GR(0)
        kr, ki = a[k][k], b[k][k]
        for i in range(k + 1, n):
            ir, ii = a[i][k], b[i][k]
            for j in range(k + 1, n):
                # (akk*aij - aik*akj) / prev_pivot
                xr = kr * a[i][j] - ki * b[i][j] - (ir * a[k][j] - ii * b[k][j])
                xi = kr * b[i][j] + ki * a[i][j] - (ir * b[k][j] + ii * a[k][j])
                a[i][j], b[i][j] = _gdiv(xr, xi, pr, pi)
            a[i][k], b[i][k] = 0, 0
        pr, pi = kr, ki
    d = Fraction(1, m.denominator ** n)
    return GR(sign * a[n - 1][n - 1] * d, sign * b[n - 1][n - 1] * d)


def interpolate_determinant(pencil: Callable[[Fraction], ExactMatrix], degree: int,
                            extra_points: int = 2) -> ExactPolynomial:
    """det(pencil(x)) as a polynomial of known maximal degree.

    Evaluates Bareiss determinants at ``degree + 1`` integer nodes and
    interpolates; ``extra_points`` further nodes are checked against the
    interpolant to catch an understated degree.
    """
    nodes = [Fraction(k) for k in range(-(degree // 2), degree - degree // 2 + 1 + extra_points)]
    values = [det_bareiss(pencil(x)) for x in nodes]
    fit_x, fit_y = nodes[:degree + 1], values[:degree + 1]
    poly = ExactPolynomial.interpolate(fit_x, fit_y)
    for x, y in zip(nodes[degree + 1:], values[degree + 1:]):
        if poly(x) != y:
            raise ArithmeticError("pencil determinant exceeds the declared degree")
    return poly


def charpoly_by_interpolation(m: ExactMatrix) -> ExactPolynomial:
    """det(x I - m) through Bareiss determinants at n + 1 points."""
    if not m.is_square:
        raise NonSquare(f"charpoly of a {m.rows}x{m.cols} matrix")
    eye = ExactMatrix.identity(m.rows)
    return interpolate_determinant(lambda x: eye.scale(x) - m, m.rows)
