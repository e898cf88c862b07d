import numpy as np
import pytest

from qwspectra import named, walks
from qwspectra.eigen import symmetric_eigenvalues
from qwspectra.errors import NotSymmetric


def test_matches_numpy_random():
    rs = np.random.default_rng(3)
    for n in (1, 2, 5, 12, 30):
        a = rs.normal(size=(n, n))
        a = a + a.T
        ours = symmetric_eigenvalues(a, tol=1e-12)
        ref = sorted(np.linalg.eigvalsh(a), reverse=True)
        assert np.allclose(ours, ref, atol=1e-9)


def test_petersen_spectrum():
    vals = symmetric_eigenvalues(walks.adjacency(named.petersen(), "float").real)
    assert np.allclose(vals, [3] + [1] * 5 + [-2] * 4, atol=1e-9)


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        symmetric_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotSymmetric):
        symmetric_eigenvalues(np.ones((2, 3)))


def test_complex_hermitian_with_zero_imaginary_ok():
    vals = symmetric_eigenvalues(np.array([[2, 1], [1, 2]], dtype=complex))
    assert np.allclose(vals, [3, 1])


def test_diagonal_already_converged():
    assert symmetric_eigenvalues(np.diag([1.0, -4.0, 2.0])) == [2.0, 1.0, -4.0]
