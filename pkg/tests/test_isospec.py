import random

import pytest

from qwspectra import named
from qwspectra.errors import PreconditionViolation
from qwspectra.isospec import KINDS, batch_compare, compare, fingerprint
from qwspectra.poly import X


def test_p2_adjacency():
    assert fingerprint(named.path(2), "adjacency").polynomial == X * X - 1


def test_petersen_adjacency():
    fp = fingerprint(named.petersen(), "adjacency")
    assert fp.polynomial == (X - 3) * (X - 1) ** 5 * (X + 2) ** 4
    assert len(fp.digest) == 64


@pytest.mark.parametrize("kind", KINDS)
def test_relabel_invariance_and_reflexivity(kind):
    g = named.petersen()
    perm = list(range(g.n))
    random.Random(kind).shuffle(perm)
    h = g.relabel(perm)
    assert fingerprint(g, kind) == fingerprint(h, kind)
    assert compare(g, g, kind)["isospectral"]


def test_symmetry_of_compare():
    a, b = named.petersen(), named.heawood()
    ab, ba = compare(a, b, "adjacency"), compare(b, a, "adjacency")
    assert ab["isospectral"] is ba["isospectral"] is False
    assert ab["witness"]["a"] == ba["witness"]["b"]


def test_u_plus_family_needs_min_degree_two():
    with pytest.raises(PreconditionViolation):
        fingerprint(named.path(3), "u-plus")


def test_batch_empty_and_classes():
    assert batch_compare([], "adjacency") == {"kind": "adjacency", "classes": [], "excluded": []}
    g = named.petersen()
    rep = batch_compare([g, g.relabel(list(reversed(range(10)))), named.path(3)], "u2-plus")
    assert rep["classes"] == [["0", "1"]]
    assert rep["excluded"][0]["id"] == "2"


def test_batch_fingerprints_included():
    rep = batch_compare([named.complete(4),
                         named.cycle(4)], "adjacency", ids=["a", "b"], include_fingerprints=True)
    assert set(rep["fingerprints"]) == {"a", "b"}
    assert rep["classes"] == [["a"], ["b"]]


@pytest.mark.slow
def test_shrikhande_rook_pair():
    a, b = named.shrikhande(), named.rook()
    for kind in ("adjacency", "grover", "u-plus", "u2-plus"):
        assert compare(a, b, kind)["isospectral"], kind
    res = compare(a, b, "u3-plus")
    assert not res["isospectral"] and res["witness"] is not None
