import json
import subprocess
import sys

import pytest

from pline.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "--ring", '{"type":"Zn","n":4}', "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["n_points"] == 6 and d["n_components"] == 1 and d["diameters"] == [2]


def test_graph_dot_and_text(capsys):
    code, out, _ = run(capsys, "graph", "--ring", "F2", "--format", "dot")
    assert code == 0 and out.startswith("graph distant {") and out.count(" -- ") == 3
    code, out, _ = run(capsys, "graph", "--ring", "Z/4")
    assert "diameters   [2]" in out


def test_graph_from_file(capsys, tmp_path):
    f = tmp_path / "ring.json"
    f.write_text(json.dumps({"type": "quotientpoly", "base": {"type": "Zn", "n": 2}, "modulus": [0, 0, 1]}))
    code, out, _ = run(capsys, "graph", "--ring", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["n_points"] == 6


def test_points_and_distance(capsys):
    code, out, _ = run(capsys, "points", "--ring", "F3")
    assert code == 0 and "4 points" in out and "R(1,2)" in out
    code, out, _ = run(capsys, "distance", "--ring", "Z/4", "--p", "[1,0]", "--q", "[1,2]", "--format", "json")
    assert json.loads(out)["distance"] == 2


def test_orbit_and_ge2(capsys):
    code, out, _ = run(capsys, "orbit", "--ring", "F2[e]", "--format", "json")
    d = json.loads(out)
    assert d["size"] == 6 and d["equals_component"]
    code, out, _ = run(capsys, "ge2", "--ring", "Z/4", "--format", "json")
    d = json.loads(out)
    assert d["is_ge2"] and d["gl2_order"] == 96 == d["stabilizer_order"] and d["coset_count"] == 1


def test_chains(capsys):
    code, out, _ = run(capsys, "chains", "--ring", "F2[e]", "--subfield", "[0, [1, 0]]")
    d = json.loads(out)
    assert code == 0 and d["chain_count"] == 8 and d["axioms"]["ok"]
    code, _, err = run(capsys, "chains", "--ring", "Z/4", "--subfield", "[0, 1]")
    assert code == 2 and "1+1 = 2" in err


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--ring", "F2[X]", "--matrix", "X^2+1", "X", "X", "1")
    assert code == 0 and "params         (X, X)" in out and "recomposition  ok" in out
    code, out, _ = run(capsys, "decompose", "--ring", "F3[X]", "--word", "X^3", "X", "X^2+1", "--format", "json")
    assert json.loads(out)["params"] == ["X^3", "X", "X^2+1"]
    code, _, err = run(capsys, "decompose", "--matrix", "X", "0", "0", "1")
    assert code == 2 and "not invertible" in err


def test_certify_and_xy(capsys):
    code, out, _ = run(capsys, "certify-diameter", "--t", "X", "--mmax", "4")
    lines = [l for l in out.splitlines() if l.startswith("m=")]
    assert code == 0 and len(lines) == 4
    code, out, _ = run(capsys, "xy", "--p", "5", "--nmax", "10", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"] and 5 in d["identity_at"]


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "xy_matrix_identity,field_diameters")
    assert code == 0 and "2/2 checks passed" in out
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_json_output_is_reproducible(capsys):
    outs = []
    for _ in range(2):
        main(["verify", "--suite", "normalization_round_trip,standard_form_uniqueness", "--seed", "7", "--format", "json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    outs = []
    for _ in range(2):
        main(["graph", "--ring", "M2(F2)", "--format", "json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_bad_inputs(capsys):
    code, _, err = run(capsys, "points", "--ring", "F2[X]")
    assert code == 2 and "infinite" in err
    with pytest.raises(SystemExit):
        main(["points", "--ring", "F2", "--format", "dot"])


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "pline.cli", "graph", "--ring", "F3"], capture_output=True, text=True)
    assert out.returncode == 0 and "points      4" in out.stdout
