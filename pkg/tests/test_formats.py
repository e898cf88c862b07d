import random

import networkx as nx
import pytest

from qwspectra import named
from qwspectra.errors import (EdgeCountMismatch, InvalidHeader, MalformedLine, ParseError,
                              Truncated, VertexOutOfRange)
from qwspectra.formats import (format_edge_list, parse_edge_list, parse_graph6,
                               read_graph_file, to_graph6)
from qwspectra.graph import Graph


def test_edge_list_basic():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2  # side\n2 0\n\n")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2), (2, 0))


def test_edge_list_multi_and_loops():
    g = parse_edge_list("2 3\n0 1\n0 1\n1 1\n")
    assert g.m == 3 and not g.is_simple


@pytest.mark.parametrize("text,exc", [
    ("", MalformedLine),
    ("3\n", MalformedLine),
    ("2 1\n0 x\n", MalformedLine),
    ("2 1\n0 1 2\n", MalformedLine),
    ("2 2\n0 1\n", EdgeCountMismatch),
    ("2 1\n0 2\n", VertexOutOfRange),
])
def test_edge_list_errors(text, exc):
    with pytest.raises(exc):
        parse_edge_list(text)


def test_edge_list_round_trip():
    g = named.petersen()
    assert parse_edge_list(format_edge_list(g)) == g


def test_graph6_known_strings():
    assert parse_graph6("Bw").edges == ((0, 1), (0, 2), (1, 2))
    assert parse_graph6(">>graph6<<A_").edges == ((0, 1),)
    assert parse_graph6("?").n == 0


def test_graph6_matches_networkx():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 70)
        h = nx.gnp_random_graph(n, 0.3, seed=rng.randint(0, 10**6))
        data = nx.to_graph6_bytes(h, header=False).strip()
        g = parse_graph6(data)
        assert g.n == n
        assert set(g.edges) == {(min(u, v), max(u, v)) for u, v in h.edges()}
        assert to_graph6(g) == data


@pytest.mark.parametrize("data,exc", [
    ("", Truncated),
    ("D", Truncated),
    ("Bww", ParseError),
    (":Fa@x^", InvalidHeader),
    ("B\x01", InvalidHeader),
    ("~", Truncated),
])
def test_graph6_errors(data, exc):
    with pytest.raises(exc):
        parse_graph6(data)


def test_read_graph_file_by_extension(tmp_path):
    el = tmp_path / "p.el"
    el.write_text(format_edge_list(named.petersen()))
    g6 = tmp_path / "two.g6"
    g6.write_bytes(to_graph6(named.shrikhande()) + b"\n" + to_graph6(named.rook()) + b"\n")
    assert read_graph_file(el) == [named.petersen()]
    graphs = read_graph_file(g6)
    assert len(graphs) == 2 and graphs[1] == Graph(16, named.rook().edges)
    with pytest.raises(FileNotFoundError):
        read_graph_file(tmp_path / "missing.el")
