"""Finite multigraphs with self-loops and their oriented-arc indexing.

Arc ``i < m`` is edge ``i`` oriented from its first to its second endpoint;
arc ``i + m`` is the reverse orientation.  A self-loop contributes two
distinct arcs that are each other's inverse, which keeps the arc-inversion
permutation an involution.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import VertexOutOfRange


@dataclass(frozen=True)
class SRGParams:
    n: int
    k: int
    r: int
    s: int


@dataclass(frozen=True)
class NotSRG:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < self.n_vertices:
                    raise VertexOutOfRange(f"vertex {x} not in 0..{self.n_vertices - 1}")

    # -- sizes -----------------------------------------------------------
    @property
    def n(self) -> int:
        return self.n_vertices

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def n_arcs(self) -> int:
        return 2 * len(self.edges)

    # -- arcs ------------------------------------------------------------
    def origin(self, a: int) -> int:
        m = self.m
        return self.edges[a][0] if a < m else self.edges[a - m][1]

    def terminus(self, a: int) -> int:
        m = self.m
        return self.edges[a][1] if a < m else self.edges[a - m][0]

    def inverse(self, a: int) -> int:
        m = self.m
        return a + m if a < m else a - m

    @cached_property
    def arc_origins(self) -> tuple[int, ...]:
        return tuple(self.origin(a) for a in range(self.n_arcs))

    @cached_property
    def arc_termini(self) -> tuple[int, ...]:
        return tuple(self.terminus(a) for a in range(self.n_arcs))

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        """Arcs grouped by origin vertex, in arc-index order."""
        groups: list[list[int]] = [[] for _ in range(self.n)]
        for a, o in enumerate(self.arc_origins):
            groups[o].append(a)
        return tuple(tuple(g) for g in groups)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = [[] for _ in range(self.n)]
        for a, t in enumerate(self.arc_termini):
            groups[t].append(a)
        return tuple(tuple(g) for g in groups)

    # -- structure -------------------------------------------------------
    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.out_arcs)

    @cached_property
    def neighbours(self) -> tuple[frozenset, ...]:
        nb: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        todo = [0]
        while todo:
            u = todo.pop()
            for v in self.neighbours[u]:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return len(seen) == self.n

    @cached_property
    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    @cached_property
    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if not self.degrees:
            return None
        k = self.degrees[0]
        return k if all(d == k for d in self.degrees) else None

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.degrees else 0

    def adjacency_counts(self) -> np.ndarray:
        """Integer adjacency matrix counting arcs u -> v (a loop adds 2 on the diagonal)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for o, t in zip(self.arc_origins, self.arc_termini):
            a[o, t] += 1
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]; edge order is preserved."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def summary(self) -> dict:
        return {"n": self.n, "m": self.m, "k": self.regular_degree, "girth": girth(self)}


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    return g.degrees[v]


def girth(g: Graph) -> int | None:
    """Length of a shortest essential cycle, or None for acyclic graphs.

    A loop gives 1 and a pair of parallel edges gives 2; otherwise a BFS from
    every vertex closes the shortest cycle through a non-tree edge.
    """
    seen_pairs = set()
    has_parallel = False
    for u, v in g.edges:
        if u == v:
            return 1
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            has_parallel = True
        seen_pairs.add(key)
    if has_parallel:
        return 2
    best = None
    adj = [sorted(s) for s in g.neighbours]
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def srg_params(g: Graph) -> SRGParams | NotSRG:
    """Strongly regular parameters (n, k, r, s), or a NotSRG value with a reason."""
    if not g.is_simple:
        return NotSRG("NotSimple")
    if not g.is_connected:
        return NotSRG("Disconnected")
    k = g.regular_degree
    if k is None:
        return NotSRG("NotRegular")
    nb = g.neighbours
    r_vals, s_vals = set(), set()
    for u, v in combinations(range(g.n), 2):
        c = len(nb[u] & nb[v])
        (r_vals if v in nb[u] else s_vals).add(c)
    if not s_vals:
        return NotSRG("Degenerate")
    if len(r_vals) > 1:
        return NotSRG("AdjacentCountsVary")
    if len(s_vals) > 1:
        return NotSRG("NonadjacentCountsVary")
    r = r_vals.pop() if r_vals else 0
    return SRGParams(g.n, k, r, s_vals.pop())
