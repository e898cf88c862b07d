"""Builders for the vertex- and arc-indexed matrices of weighted walks.

Every builder takes ``mode="exact"`` (Gaussian-rational weights, returns an
``ExactMatrix``) or ``mode="float"`` (complex weights, returns a complex
``numpy.ndarray``).  Arc-indexed matrices use the ``Graph`` arc order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import (ComplexInput, InvalidProbability, IsolatedVertex, MissingWeight,
                     PreconditionViolation)
from .graph import Graph
from .matrix import ExactMatrix
from .scalars import GaussianRational, exact_sqrt

GR = GaussianRational
MODES = ("exact", "float")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _assemble(n_rows: int, n_cols: int, entries: Mapping, mode: str):
    if mode == "exact":
        return ExactMatrix.from_entries(n_rows, n_cols, entries)
    out = np.zeros((n_rows, n_cols), dtype=complex)
    for (i, j), v in entries.items():
        out[i, j] = complex(v)
    return out


def _accumulate(entries: dict, key, value):
    if key in entries:
        entries[key] = entries[key] + value
    else:
        entries[key] = value


def prepare_weights(g: Graph, w: Sequence, mode: str = "exact") -> list:
    """Validate a weight assignment (one nonzero value per arc) and coerce it."""
    _check_mode(mode)
    if w is None or len(w) != g.n_arcs:
        got = 0 if w is None else len(w)
        raise MissingWeight(f"expected {g.n_arcs} arc weights, got {got}")
    if mode == "exact":
        out = [GR.coerce(x) for x in w]
    else:
        out = [complex(x) for x in w]
    for a, x in enumerate(out):
        if not x:
            raise MissingWeight(f"weight of arc {a} is zero")
    return out


def unit_weights(g: Graph) -> list[GaussianRational]:
    return [GR(1)] * g.n_arcs


def simple_walk(g: Graph) -> list[Fraction]:
    """p(e) = 1/deg(o(e))."""
    if g.min_degree == 0 and g.n:
        raise IsolatedVertex("simple random walk needs every vertex to have an arc")
    return [Fraction(1, g.degrees[g.origin(a)]) for a in range(g.n_arcs)]


def prepare_probability(g: Graph, p: Sequence, mode: str = "exact") -> list:
    """Validate p: one value per arc in (0, 1], summing to 1 over each vertex's out-arcs."""
    _check_mode(mode)
    if p is None or len(p) != g.n_arcs:
        got = 0 if p is None else len(p)
        raise InvalidProbability(f"expected {g.n_arcs} arc probabilities, got {got}")
    if mode == "exact":
        vals = []
        for x in p:
            if isinstance(x, GaussianRational):
                if not x.is_real:
                    raise InvalidProbability("probabilities must be real")
                x = x.re
            if isinstance(x, float):
                raise InvalidProbability("exact mode requires rational probabilities")
            vals.append(Fraction(x))
    else:
        vals = [float(complex(x).real) if isinstance(x, (complex, GaussianRational)) else float(x)
                for x in p]
    for a, x in enumerate(vals):
        if not 0 < x <= 1:
            raise InvalidProbability(f"p(arc {a}) = {x} is outside (0, 1]")
    for v, arcs in enumerate(g.out_arcs):
        total = sum((vals[a] for a in arcs), Fraction(0) if mode == "exact" else 0.0)
        ok = total == 1 if mode == "exact" else abs(total - 1.0) < 1e-12
        if arcs and not ok:
            raise InvalidProbability(f"probabilities out of vertex {v} sum to {total}")
    return vals


def _sqrt(x, mode):
    return exact_sqrt(x) if mode == "exact" else math.sqrt(x)


# -- vertex-indexed -------------------------------------------------------------

def adjacency(g: Graph, mode: str = "exact"):
    """Standard adjacency matrix (arc counts; a loop contributes 2)."""
    entries: dict = {}
    for a in range(g.n_arcs):
        _accumulate(entries, (g.origin(a), g.terminus(a)), 1)
    return _assemble(g.n, g.n, entries, mode)


def degree_matrix(g: Graph, mode: str = "exact"):
    return _assemble(g.n, g.n, {(v, v): d for v, d in enumerate(g.degrees) if d}, mode)


def matrix_S(g: Graph, w: Sequence, mode: str = "exact"):
    """Weighted adjacency: (S)_{u,v} = sum over arcs u->v of conj(w(e)) * w(e^-1)."""
    w = prepare_weights(g, w, mode)
    entries: dict = {}
    for a in range(g.n_arcs):
        _accumulate(entries, (g.origin(a), g.terminus(a)),
                    w[a].conjugate() * w[g.inverse(a)])
    return _assemble(g.n, g.n, entries, mode)


def matrix_D(g: Graph, w: Sequence, mode: str = "exact"):
    """Weighted degree: diagonal sum of |w(e)|^2 over arcs leaving v."""
    w = prepare_weights(g, w, mode)
    entries = {}
    for v, arcs in enumerate(g.out_arcs):
        if arcs:
            total = sum(((w[a] * w[a].conjugate()) for a in arcs), GR(0) if mode == "exact" else 0j)
            entries[(v, v)] = total
    return _assemble(g.n, g.n, entries, mode)


def transition_T(g: Graph, p: Sequence, mode: str = "exact"):
    """Random-walk transition matrix: (T_p)_{u,v} = sum of p(e) over arcs u->v."""
    p = prepare_probability(g, p, mode)
    entries: dict = {}
    for a in range(g.n_arcs):
        _accumulate(entries, (g.origin(a), g.terminus(a)), p[a])
    return _assemble(g.n, g.n, entries, mode)


def matrix_Sp(g: Graph, p: Sequence, mode: str = "exact"):
    """(S_p)_{u,v} = sum over arcs u->v of sqrt(p(e) p(e^-1)).

    Exact mode raises IrrationalWeight when a product is not a rational square.
    """
    p = prepare_probability(g, p, mode)
    entries: dict = {}
    for a in range(g.n_arcs):
        _accumulate(entries, (g.origin(a), g.terminus(a)),
                    _sqrt(p[a] * p[g.inverse(a)], mode))
    return _assemble(g.n, g.n, entries, mode)


def reversible_measure(g: Graph, p: Sequence) -> dict[int, Fraction] | None:
    """Measure m with m(o(e)) p(e) = m(t(e)) p(e^-1) on every arc, m(0) = 1.

    Propagates along a BFS spanning tree, then checks every arc.  Returns
    None when p is not reversible.
    """
    if not g.is_connected:
        raise PreconditionViolation("reversible_measure needs a connected graph")
    p = prepare_probability(g, p, "exact")
    if g.n == 0:
        return {}
    m: dict[int, Fraction] = {0: Fraction(1)}
    queue = [0]
    while queue:
        u = queue.pop(0)
        for a in g.out_arcs[u]:
            v = g.terminus(a)
            if v not in m:
                m[v] = m[u] * p[a] / p[g.inverse(a)]
                queue.append(v)
    for a in range(g.n_arcs):
        if m[g.origin(a)] * p[a] != m[g.terminus(a)] * p[g.inverse(a)]:
            return None
    return m


# -- arc-indexed --------------------------------------------------------------

def coboundary_Aw(g: Graph, w: Sequence, mode: str = "exact"):
    """2m x n matrix with (A^w)_{e,v} = w(e^-1) when t(e) = v."""
    w = prepare_weights(g, w, mode)
    entries = {(a, g.terminus(a)): w[g.inverse(a)] for a in range(g.n_arcs)}
    return _assemble(g.n_arcs, g.n, entries, mode)


def shift_P(g: Graph, mode: str = "exact"):
    """Arc-inversion permutation matrix."""
    _check_mode(mode)
    return _assemble(g.n_arcs, g.n_arcs, {(a, g.inverse(a)): 1 for a in range(g.n_arcs)}, mode)


def matrix_U(g: Graph, w: Sequence, s, mode: str = "exact"):
    """(U^{w,s})_{e,f} = s w(e) conj(w(f^-1)) - [f = e^-1] when o(e) = t(f)."""
    w = prepare_weights(g, w, mode)
    if mode == "exact":
        s = GR.coerce(s)
        if not s.is_real:
            raise ComplexInput("s must be real")
    else:
        s = complex(s)
        if s.imag:
            raise ComplexInput("s must be real")
    entries = {}
    for e in range(g.n_arcs):
        inv_e = g.inverse(e)
        for f in g.in_arcs[g.origin(e)]:
            val = s * w[e] * w[g.inverse(f)].conjugate()
            if f == inv_e:
                val = val - 1
            entries[(e, f)] = val
    return _assemble(g.n_arcs, g.n_arcs, entries, mode)


def grover(g: Graph, mode: str = "exact"):
    """Grover matrix: 2/deg(o(e)) - [f = e^-1] when t(f) = o(e)."""
    _check_mode(mode)
    if g.n and g.min_degree == 0:
        raise IsolatedVertex("Grover matrix needs min degree >= 1")
    entries = {}
    for e in range(g.n_arcs):
        two_over = Fraction(2, g.degrees[g.origin(e)])
        inv_e = g.inverse(e)
        for f in g.in_arcs[g.origin(e)]:
            entries[(e, f)] = two_over - 1 if f == inv_e else two_over
    return _assemble(g.n_arcs, g.n_arcs, entries, mode)


def szegedy(g: Graph, p: Sequence, mode: str = "exact"):
    """Szegedy evolution: 2 sqrt(p(e) p(f^-1)) - [f = e^-1] when t(f) = o(e)."""
    p = prepare_probability(g, p, mode)
    entries = {}
    for e in range(g.n_arcs):
        inv_e = g.inverse(e)
        for f in g.in_arcs[g.origin(e)]:
            val = 2 * _sqrt(p[e] * p[g.inverse(f)], mode)
            entries[(e, f)] = val - 1 if f == inv_e else val
    return _assemble(g.n_arcs, g.n_arcs, entries, mode)


def quantum_coin(g: Graph, w: Sequence, v: int, mode: str = "exact"):
    """Local reflection 2 w_v w_v^* - I on the arcs leaving v (in arc order)."""
    w = prepare_weights(g, w, mode)
    arcs = g.out_arcs[v]
    entries = {}
    for i, e in enumerate(arcs):
        for j, f in enumerate(arcs):
            val = 2 * w[e] * w[f].conjugate()
            entries[(i, j)] = val - 1 if i == j else val
    return _assemble(len(arcs), len(arcs), entries, mode)


def coined_form(g: Graph, w: Sequence, mode: str = "exact"):
    """(direct sum of the local coins, embedded on arcs) times the shift."""
    w = prepare_weights(g, w, mode)
    entries = {}
    for v, arcs in enumerate(g.out_arcs):
        for e in arcs:
            for f in arcs:
                val = 2 * w[e] * w[f].conjugate()
                entries[(e, f)] = val - 1 if e == f else val
    coins = _assemble(g.n_arcs, g.n_arcs, entries, mode)
    shift = shift_P(g, mode)
    return coins @ shift


def edge_matrix_B(g: Graph, mode: str = "exact"):
    """B_{e,f} = 1 iff t(e) = o(f); the edge matrix proper is B - P."""
    _check_mode(mode)
    entries = {(e, f): 1 for e in range(g.n_arcs) for f in g.out_arcs[g.terminus(e)]}
    return _assemble(g.n_arcs, g.n_arcs, entries, mode)


def positive_support(m, tol: float = 1e-9) -> ExactMatrix:
    """0/1 matrix marking strictly positive entries of a real matrix.

    Float input: imaginary parts must be below ``tol`` and only entries
    above ``tol`` count as positive.
    """
    if isinstance(m, ExactMatrix):
        if not m.is_real:
            raise ComplexInput("positive support needs a real matrix")
        re, _ = m.numerators()
        return ExactMatrix.from_integers((re > 0).astype(np.int64))
    arr = np.asarray(m)
    if np.iscomplexobj(arr):
        if np.any(np.abs(arr.imag) >= tol):
            raise ComplexInput("positive support needs a real matrix")
        arr = arr.real
    return ExactMatrix.from_integers((arr > tol).astype(np.int64))


def u_plus(g: Graph) -> ExactMatrix:
    return positive_support(grover(g))


def u2_plus(g: Graph) -> ExactMatrix:
    u = grover(g)
    return positive_support(u @ u)


def u3_plus(g: Graph) -> ExactMatrix:
    u = grover(g)
    return positive_support(u @ u @ u)
