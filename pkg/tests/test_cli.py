import json
import os
import subprocess
import sys

import pytest

from qwspectra import named, walks
from qwspectra.cli import main
from qwspectra.formats import format_edge_list, to_graph6
from qwspectra.matrix import ExactMatrix
from qwspectra.sampling import random_connected_multigraph, random_weights
from qwspectra.scalars import format_gaussian


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("petersen", "k4", "p2", "c5"):
        p = tmp_path / f"{name}.el"
        p.write_text(format_edge_list(named.by_name(name)))
        out[name] = str(p)
    for name in ("shrikhande", "rook44"):
        p = tmp_path / f"{name}.g6"
        p.write_bytes(to_graph6(named.by_name(name)) + b"\n")
        out[name] = str(p)
    out["dir"] = tmp_path
    return out


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_p2_grover(files, capsys):
    code, out, _ = run(["build", "--graph", files["p2"], "--matrix", "grover"], capsys)
    data = json.loads(out)
    assert code == 0 and data["entries"] == [["0", "1"], ["1", "0"]]
    assert data["arcs"][1] == {"arc": 1, "edge": 0, "origin": 1, "terminus": 0, "inverse": 0}


def test_build_u_plus_row_sums(files, capsys):
    code, out, _ = run(["build", "--graph", files["petersen"], "--matrix", "u-plus"], capsys)
    rows = json.loads(out)["entries"]
    assert code == 0 and len(rows) == 30
    assert all(sum(int(x) for x in row) == 2 for row in rows)


def test_build_round_trip_exact(files, capsys, rng):
    g = random_connected_multigraph(rng)
    w = random_weights(rng, g)
    gp = files["dir"] / "g.el"
    gp.write_text(format_edge_list(g))
    wp = files["dir"] / "w.json"
    wp.write_text(json.dumps([format_gaussian(x) for x in w]))
    code, out, _ = run(["build", "--graph", str(gp), "--matrix", "U", "--weights", str(wp),
                        "--s", "3/2"], capsys)
    rows = json.loads(out)["entries"]
    assert code == 0
    assert ExactMatrix.from_rows(rows) == walks.matrix_U(g, w, "3/2")


def test_build_szegedy_without_prob(files, capsys):
    code, _, err = run(["build", "--graph", files["p2"], "--matrix", "szegedy"], capsys)
    assert code == 4 and "--prob" in err


def test_build_csv_and_out(files, capsys):
    target = files["dir"] / "a.csv"
    code, out, _ = run(["build", "--graph", files["k4"], "--matrix", "adjacency", "--emit", "csv",
                        "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "0,1,1,1"


def test_exact_rejects_float_weights(files, capsys):
    wp = files["dir"] / "wf.json"
    wp.write_text(json.dumps([0.5, 0.5]))
    code, _, err = run(["build", "--graph", files["p2"], "--matrix", "U", "--weights", str(wp)], capsys)
    assert code >= 4 and "exact mode" in err
    code, out, _ = run(["build", "--graph", files["p2"], "--matrix", "U", "--weights", str(wp),
                        "--mode", "float"], capsys)
    assert code == 0 and json.loads(out)["entries"][0] == [0.0, -0.5]


@pytest.mark.parametrize("graph,tid,code", [("petersen", "thm2", 0), ("k4", "thm2", 3),
                                            ("c5", "eq24", 2), ("petersen", "eq24", 0),
                                            ("petersen", "cor23", 0), ("k4", "thm3", 0),
                                            ("petersen", "decomp", 0), ("petersen", "cor22", 0),
                                            ("c5", "cor21", 0)])
def test_verify_exit_codes(files, capsys, graph, tid, code):
    got, out, _ = run(["verify", tid, "--graph", files[graph]], capsys)
    report = json.loads(out)
    assert got == code and report["theorem"] == tid


def test_verify_thm1_with_weights(files, capsys, rng):
    g = named.by_name("k4")
    wp = files["dir"] / "w.json"
    wp.write_text(json.dumps([format_gaussian(x) for x in random_weights(rng, g)]))
    code, out, _ = run(["verify", "thm1", "--graph", files["k4"], "--weights", str(wp),
                        "--s", "3/2"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "holds"


def test_verify_unknown_id(files, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm9", "--graph", files["k4"]])
    assert exc.value.code == 4


def test_spectrum_u_plus(files, capsys):
    code, out, _ = run(["spectrum", "--matrix", "u-plus", "--graph", files["petersen"]], capsys)
    data = json.loads(out)
    vals = [complex(*p) for p in data["eigenvalues"]]
    assert code == 0 and len(vals) == 30
    assert vals == sorted(vals, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    assert sum(1 for z in vals if abs(z - complex(-1, 1)) < 1e-9) == 4


def test_spectrum_adjacency(files, capsys):
    code, out, _ = run(["spectrum", "--matrix", "adjacency", "--graph", files["petersen"]], capsys)
    vals = json.loads(out)["eigenvalues"]
    assert code == 0 and [round(v) for v in vals] == [3] + [1] * 5 + [-2] * 4


def test_spectrum_non_regular(capsys):
    code, _, err = run(["spectrum", "--matrix", "u2-plus", "--graph", "name:path4"], capsys)
    assert code == 3 and "NotRegular" in err


def test_isospec(files, capsys):
    code, out, _ = run(["isospec", "--matrix", "adjacency", files["shrikhande"], files["rook44"]], capsys)
    assert code == 0 and json.loads(out)["isospectral"]
    code, out, _ = run(["isospec", "--matrix", "u3-plus", files["shrikhande"], files["rook44"]], capsys)
    assert code == 1 and json.loads(out)["witness"]["index"] >= 0


def test_isospec_mixed_formats_and_single(files, capsys):
    code, out, _ = run(["isospec", "--matrix", "adjacency", files["petersen"], "name:petersen",
                        files["shrikhande"]], capsys)
    assert code == 1 and len(json.loads(out)["classes"]) == 2
    code, _, _ = run(["isospec", "--matrix", "adjacency", files["petersen"]], capsys)
    assert code == 4


def test_io_errors(files, capsys):
    code, _, err = run(["build", "--graph", str(files["dir"] / "nope.el"), "--matrix", "P"], capsys)
    assert code >= 4
    bad = files["dir"] / "bad.el"
    bad.write_text("3 2\n0 1\n")
    code, _, err = run(["verify", "thm2", "--graph", str(bad)], capsys)
    assert code >= 4 and "EdgeCountMismatch" in err


def test_console_entry_point_subprocess(files):
    env = dict(os.environ, QWSPECTRA_THREADS="1")
    res = subprocess.run([sys.executable, "-m", "qwspectra.cli", "verify", "thm2", "--graph",
                          files["k4"]], capture_output=True, text=True, env=env)
    assert res.returncode == 3
    assert json.loads(res.stdout)["verdict"] == "precondition-violated"
