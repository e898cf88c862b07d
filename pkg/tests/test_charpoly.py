"""Charpoly pipelines against each other and against cofactor expansion."""

from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from qwspectra import named, walks
from qwspectra.charpoly import (charpoly_exact, coefficient_bound, det_bareiss,
                                interpolate_determinant, primes, _is_prime)
from qwspectra.matrix import ExactMatrix
from qwspectra.poly import X, ExactPolynomial
from qwspectra.scalars import GaussianRational as GR


def rand_matrix(rng, n, complex_=True, bound=5):
    def val():
        re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if complex_ else 0
        return GR(re, im)
    return ExactMatrix.from_rows([[val() for _ in range(n)] for _ in range(n)])


def _perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign


def leibniz_charpoly(m: ExactMatrix) -> ExactPolynomial:
    """det(xI - m) summed over permutations with polynomial entries."""
    n = m.rows
    entries = [[(X if i == j else ExactPolynomial([0])) - ExactPolynomial([m[i, j]])
                for j in range(n)] for i in range(n)]
    total = ExactPolynomial([0])
    for p in permutations(range(n)):
        term = ExactPolynomial([_perm_sign(p)])
        for i in range(n):
            term = term * entries[i][p[i]]
        total = total + term
    return total


def test_primes_are_prime_and_distinct():
    ps = primes(6)
    assert len(set(ps)) == 6 and all(_is_prime(p) and p < 2**28 for p in ps)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_modular_matches_leibniz(rng, backend, n):
    m = rand_matrix(rng, n)
    assert charpoly_exact(m, backend=backend) == leibniz_charpoly(m)


def test_all_methods_agree(rng, backend):
    for n in range(1, 8):
        m = rand_matrix(rng, n)
        ref = charpoly_exact(m, method="direct")
        assert charpoly_exact(m, backend=backend) == ref
        assert charpoly_exact(m, method="interpolation") == ref


def test_det_is_constant_term(rng):
    for n in range(1, 7):
        m = rand_matrix(rng, n)
        assert det_bareiss(m) == (-1) ** n * charpoly_exact(m)[0]


def test_similarity_invariance(rng, backend):
    m = rand_matrix(rng, 5)
    while True:
        s = rand_matrix(rng, 5, complex_=False)
        if det_bareiss(s):
            break
    n = 5
    # exact Gauss-Jordan inverse
    aug = [[s[i, j] for j in range(n)] + [GR(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    s_inv = ExactMatrix.from_rows([row[n:] for row in aug])
    assert s @ s_inv == ExactMatrix.identity(n)
    assert charpoly_exact(s @ m @ s_inv, backend=backend) == charpoly_exact(m, backend=backend)


def test_petersen_adjacency():
    expected = (X - 3) * (X - 1) ** 5 * (X + 2) ** 4
    assert charpoly_exact(walks.adjacency(named.petersen())) == expected


def test_large_entries_need_many_primes(backend):
    m = ExactMatrix.from_integers(np.array([[10**12, 3], [7, -10**12]], dtype=object))
    expected = X * X - (10**24 + 21)
    assert coefficient_bound(*m.numerators()) >= 10**24
    assert charpoly_exact(m, backend=backend) == expected


def test_empty_and_scalar():
    assert charpoly_exact(ExactMatrix.zeros(0)) == ExactPolynomial([1])
    assert charpoly_exact(ExactMatrix.from_rows([[GR(0, 2)]])) == X - GR(0, 2)


def test_interpolate_determinant_pencil():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    eye = ExactMatrix.identity(2)
    p = interpolate_determinant(lambda x: eye.scale(x * x) - a, 4)
    assert p == X ** 4 - 5 * X ** 2 - 2


def test_grover_backends_agree_on_u3_plus(backend):
    g = named.heawood()
    assert charpoly_exact(walks.u3_plus(g), backend=backend) == \
        charpoly_exact(walks.u3_plus(g), method="direct")
