from fractions import Fraction

import numpy as np
import pytest

from qwspectra import named, walks
from qwspectra.errors import (ComplexInput, InvalidProbability, IrrationalWeight, IsolatedVertex,
                              MissingWeight, PreconditionViolation)
from qwspectra.graph import Graph
from qwspectra.matrix import ExactMatrix
from qwspectra.sampling import (random_connected_multigraph, random_normalized_weights,
                                random_rational, random_reversible_probability,
                                random_weights)
from qwspectra.scalars import GaussianRational as GR


def test_p2_grover():
    assert walks.grover(named.path(2)) == ExactMatrix.from_rows([[0, 1], [1, 0]])


def test_shift_is_involution(rng):
    for _ in range(20):
        g = random_connected_multigraph(rng)
        P = walks.shift_P(g)
        assert P @ P == ExactMatrix.identity(g.n_arcs)


def test_factorization_identities(rng):
    # A*A = D, A*PA = S and P(s A A* - I) = U
    for _ in range(30):
        g = random_connected_multigraph(rng)
        w = random_weights(rng, g)
        s = random_rational(rng)
        A = walks.coboundary_Aw(g, w)
        P = walks.shift_P(g)
        assert A.conj_transpose() @ A == walks.matrix_D(g, w)
        assert A.conj_transpose() @ P @ A == walks.matrix_S(g, w)
        U = P @ (A.scale(s) @ A.conj_transpose() - ExactMatrix.identity(g.n_arcs))
        assert U == walks.matrix_U(g, w, s)


def test_grover_is_szegedy_of_simple_walk(rng):
    for _ in range(20):
        g = random_connected_multigraph(rng)
        assert walks.szegedy(g, walks.simple_walk(g)) == walks.grover(g)


def test_grover_from_unit_weights_on_regular_graph():
    # unit weights and s = 2/k give 2/k - [f = e^-1]
    g = named.petersen()
    assert walks.matrix_U(g, walks.unit_weights(g), Fraction(2, 3)) == walks.grover(g)


def test_unitarity_and_coined_form(rng):
    for _ in range(30):
        g = random_connected_multigraph(rng)
        w = random_normalized_weights(rng, g)
        U = walks.matrix_U(g, w, 2)
        assert U @ U.conj_transpose() == ExactMatrix.identity(g.n_arcs)
        assert walks.coined_form(g, w) == U


def test_quantum_coin_is_reflection(rng):
    g = named.petersen()
    w = random_normalized_weights(rng, g)
    C = walks.quantum_coin(g, w, 0)
    assert C @ C == ExactMatrix.identity(3)


def test_float_mode_matches_exact(rng):
    g = random_connected_multigraph(rng)
    w = random_weights(rng, g)
    exact = walks.matrix_U(g, w, Fraction(3, 2)).to_float()
    floaty = walks.matrix_U(g, [complex(x) for x in w], 1.5, mode="float")
    assert np.allclose(exact, floaty)


def test_u_plus_structure_petersen():
    g = named.petersen()
    up = walks.u_plus(g)
    re, _ = up.numerators()
    assert (re.sum(axis=1) == 2).all()
    B = walks.edge_matrix_B(g)
    assert up.T == B - walks.shift_P(g)


def test_reversible_measure_simple_walk(rng):
    for _ in range(50):
        g = random_connected_multigraph(rng)
        m = walks.reversible_measure(g, walks.simple_walk(g))
        ratio = Fraction(g.degrees[0]) / m[0]
        assert all(m[v] * ratio == g.degrees[v] for v in range(g.n))


def test_reversible_from_conductances(rng):
    for _ in range(20):
        g = random_connected_multigraph(rng)
        assert walks.reversible_measure(g, random_reversible_probability(rng, g)) is not None


def test_non_reversible_detected():
    g = named.cycle(3)
    # clockwise bias on a triangle has no reversible measure
    p = [Fraction(2, 3)] * 3 + [Fraction(1, 3)] * 3
    assert walks.reversible_measure(g, p) is None


def test_sp_tp_similar_float(rng):
    for _ in range(30):
        g = random_connected_multigraph(rng)
        p = [float(x) for x in random_reversible_probability(rng, g)]
        S = walks.matrix_Sp(g, p, "float").real
        T = walks.transition_T(g, p, "float").real
        es = np.sort(np.linalg.eigvalsh(S))
        et = np.sort(np.linalg.eigvals(T).real)
        assert np.allclose(es, et, atol=1e-8)


def test_errors():
    g = named.path(3)
    with pytest.raises(MissingWeight):
        walks.matrix_U(g, [1, 1], 2)
    with pytest.raises(MissingWeight):
        walks.matrix_U(g, [1, 0, 1, 1], 2)
    with pytest.raises(TypeError):
        walks.matrix_U(g, [0.5] * 4, 2)
    with pytest.raises(ComplexInput):
        walks.matrix_U(g, [1] * 4, GR(0, 1))
    with pytest.raises(InvalidProbability):
        walks.transition_T(g, [Fraction(1, 2)] * 4)
    with pytest.raises(IrrationalWeight):
        walks.matrix_Sp(g, walks.simple_walk(g))
    with pytest.raises(IrrationalWeight):
        walks.szegedy(g, [1, Fraction(1, 3), Fraction(2, 3), 1])
    with pytest.raises(IsolatedVertex):
        walks.grover(Graph(3, ((0, 1),)))
    with pytest.raises(PreconditionViolation):
        walks.reversible_measure(Graph(3, ((0, 1),)), [1, 1])
    with pytest.raises(ComplexInput):
        walks.positive_support(ExactMatrix.from_rows([[GR(0, 1)]]))


def test_positive_support_float_tolerance():
    m = np.array([[1e-12, 0.5], [-0.3, 2.0]])
    assert walks.positive_support(m) == ExactMatrix.from_rows([[0, 1], [0, 1]])
