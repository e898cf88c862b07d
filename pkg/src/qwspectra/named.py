"""Small named graphs used in examples, tests and the CLI (``--graph name:petersen``)."""

from __future__ import annotations

from itertools import combinations, product

from .graph import Graph


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def heawood() -> Graph:
    # incidence graph of the Fano plane: points 0..6, lines 7..13
    lines = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    return Graph(14, tuple((p, 7 + j) for j, line in enumerate(lines) for p in line))


def dodecahedron() -> Graph:
    # LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2
    lcf = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4] * 2
    n = 20
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i, s in enumerate(lcf):
        j = (i + s) % n
        edges.add((min(i, j), max(i, j)))
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    return Graph(n, tuple(sorted(edges)))


def _cayley_z4z4(connection) -> Graph:
    verts = list(product(range(4), range(4)))
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for a, b in verts:
        for da, db in connection:
            u, v = index[(a, b)], index[((a + da) % 4, (b + db) % 4)]
            edges.add((min(u, v), max(u, v)))
    return Graph(16, tuple(sorted(edges)))


def shrikhande() -> Graph:
    """srg(16, 6, 2, 2): Cayley graph of Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1)."""
    return _cayley_z4z4([(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)])


def rook(n: int = 4) -> Graph:
    """n x n rook's graph (K_n box K_n); srg(16, 6, 2, 2) for n = 4."""
    verts = list(product(range(n), range(n)))
    edges = [(i, j) for (i, a), (j, b) in combinations(enumerate(verts), 2)
             if a[0] == b[0] or a[1] == b[1]]
    return Graph(n * n, tuple(edges))


NAMED = {
    "petersen": petersen,
    "heawood": heawood,
    "dodecahedron": dodecahedron,
    "shrikhande": shrikhande,
    "rook44": rook,
    "k4": lambda: complete(4),
    "c3": lambda: cycle(3),
    "c5": lambda: cycle(5),
    "p2": lambda: path(2),
}


def by_name(name: str) -> Graph:
    key = name.lower()
    if key in NAMED:
        return NAMED[key]()
    for prefix, fn in (("cycle", cycle), ("path", path), ("complete", complete)):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            return fn(int(key[len(prefix):]))
    raise KeyError(f"unknown graph name {name!r}")
