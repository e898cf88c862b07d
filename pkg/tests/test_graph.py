import random

import networkx as nx
import pytest

from qwspectra import named
from qwspectra.errors import VertexOutOfRange
from qwspectra.graph import Graph, NotSRG, SRGParams, girth, srg_params
from qwspectra.sampling import random_connected_multigraph


def to_nx(g: Graph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_arc_conventions():
    g = Graph(3, ((0, 1), (1, 2), (2, 2)))
    assert g.n_arcs == 6
    assert (g.origin(0), g.terminus(0)) == (0, 1)
    assert (g.origin(3), g.terminus(3)) == (1, 0)
    assert all(g.inverse(g.inverse(a)) == a for a in range(6))
    assert g.inverse(2) == 5 and g.origin(5) == g.terminus(5) == 2
    assert g.degrees == (1, 2, 3)  # a loop contributes two arcs


def test_out_in_arcs_partition():
    g = named.petersen()
    assert sorted(a for arcs in g.out_arcs for a in arcs) == list(range(g.n_arcs))
    assert all(g.terminus(a) == v for v, arcs in enumerate(g.in_arcs) for a in arcs)


def test_invalid_vertex():
    with pytest.raises(VertexOutOfRange):
        Graph(2, ((0, 2),))


@pytest.mark.parametrize("name,expected", [("petersen", 5), ("heawood", 6), ("dodecahedron", 5),
                                           ("k4", 3), ("c5", 5), ("shrikhande", 3),
                                           ("p2", None)])
def test_girth_named(name, expected):
    assert girth(named.by_name(name)) == expected


def test_girth_multigraph_cases():
    assert girth(Graph(2, ((0, 1), (0, 1)))) == 2
    assert girth(Graph(2, ((0, 1), (1, 1)))) == 1


def test_girth_matches_networkx():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 12)
        h = nx.gnp_random_graph(n, rng.uniform(0.15, 0.6), seed=rng.randint(0, 10**6))
        g = Graph(n, tuple(h.edges()))
        ref = nx.girth(h)
        assert girth(g) == (None if ref == float("inf") else ref)


def test_connectivity_and_degrees_match_networkx():
    rng = random.Random(6)
    for _ in range(50):
        g = random_connected_multigraph(rng)
        h = to_nx(g)
        assert g.is_connected == nx.is_connected(h)
        assert list(g.degrees) == [h.degree(v) for v in range(g.n)]
    assert not Graph(3, ((0, 1),)).is_connected


def test_named_graphs_isomorphic_to_networkx():
    assert nx.is_isomorphic(to_nx(named.petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(named.heawood()), nx.heawood_graph())
    assert nx.is_isomorphic(to_nx(named.dodecahedron()), nx.dodecahedral_graph())
    assert not nx.is_isomorphic(to_nx(named.shrikhande()), to_nx(named.rook()))


def test_srg_params():
    assert srg_params(named.petersen()) == SRGParams(10, 3, 0, 1)
    assert srg_params(named.shrikhande()) == SRGParams(16, 6, 2, 2)
    assert srg_params(named.rook()) == SRGParams(16, 6, 2, 2)
    r = srg_params(named.complete(4))
    assert isinstance(r, NotSRG) and not r and r.reason == "Degenerate"
    assert srg_params(named.path(3)).reason == "NotRegular"
    assert srg_params(named.heawood()).reason == "NonadjacentCountsVary"


def test_relabel_preserves_structure(rng):
    g = named.petersen()
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees) == sorted(g.degrees)
    assert girth(h) == girth(g)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))


def test_summary():
    assert named.petersen().summary() == {"n": 10, "m": 15, "k": 3, "girth": 5}
