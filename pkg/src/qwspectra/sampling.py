"""Random inputs for property checks: multigraphs, weights, probabilities."""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import Graph
from .scalars import GaussianRational


def random_connected_multigraph(rng: random.Random, max_n: int = 8, max_m: int = 14,
                                loops: bool = True, min_degree: int = 1) -> Graph:
    """Random spanning tree plus extra edges; extras may repeat edges or be loops."""
    while True:
        n = rng.randint(1, max_n)
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        extra = rng.randint(0, max(0, max_m - len(edges)))
        for _ in range(extra):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v and not loops:
                continue
            edges.append((u, v))
        rng.shuffle(edges)
        if not edges:
            continue
        g = Graph(n, tuple(edges))
        if g.min_degree >= min_degree:
            return g


def random_rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def random_gaussian(rng: random.Random, bound: int = 9) -> GaussianRational:
    while True:
        z = GaussianRational(random_rational(rng, bound), random_rational(rng, bound))
        if z.re or z.im:
            return z


def random_weights(rng: random.Random, g: Graph, bound: int = 9) -> list[GaussianRational]:
    return [random_gaussian(rng, bound) for _ in range(g.n_arcs)]


def _rational_unit_vector(rng: random.Random, dim: int, bound: int = 7) -> list[Fraction]:
    """A point with no zero coordinate on the unit sphere in Q^dim, by inverse
    stereographic projection."""
    if dim == 1:
        return [Fraction(rng.choice((-1, 1)))]
    while True:
        t = [random_rational(rng, bound, nonzero=True) for _ in range(dim - 1)]
        r2 = sum(x * x for x in t)
        if r2 != 1:
            return [2 * x / (1 + r2) for x in t] + [(r2 - 1) / (1 + r2)]


def random_normalized_weights(rng: random.Random, g: Graph) -> list[GaussianRational]:
    """Real rational weights whose squared magnitudes sum to 1 over each vertex's out-arcs."""
    w: list[GaussianRational] = [GaussianRational(0)] * g.n_arcs
    for v in range(g.n):
        arcs = g.out_arcs[v]
        for a, x in zip(arcs, _rational_unit_vector(rng, len(arcs))):
            w[a] = GaussianRational(x)
    return w


def random_reversible_probability(rng: random.Random, g: Graph, bound: int = 9) -> list[Fraction]:
    """p(e) = c(e) / sum of c over out-arcs of o(e), for symmetric conductances c."""
    cond = [Fraction(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(g.m)]
    c = [cond[a % g.m] for a in range(g.n_arcs)]
    out = [Fraction(0)] * g.n
    for a in range(g.n_arcs):
        out[g.origin(a)] += c[a]
    return [c[a] / out[g.origin(a)] for a in range(g.n_arcs)]


def random_probability(rng: random.Random, g: Graph, bound: int = 9) -> list[Fraction]:
    """Arbitrary (typically non-reversible) transition probability."""
    raw = [Fraction(rng.randint(1, bound)) for _ in range(g.n_arcs)]
    out = [Fraction(0)] * g.n
    for a in range(g.n_arcs):
        out[g.origin(a)] += raw[a]
    return [raw[a] / out[g.origin(a)] for a in range(g.n_arcs)]
