import json
import subprocess
import sys

import pytest

import worked_example as W
from motionfactor import DQPoly, Factorization, LinearFactor, is_bounded
from motionfactor.cli import main
from motionfactor.parse import load_input
from motionfactor.polyring import poly_to_json, rpoly_to_json
from motionfactor.algebra import serialize_dq


@pytest.fixture
def files(tmp_path):
    def write(name, content):
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(path)

    return {
        "worked": write("worked.json", poly_to_json(W.M)),
        "prismatic": write("prismatic.txt", "t^2 - (1 + j) t + j - eps ((i + k) t - 2k)"),
        "vertical": write("vertical.json", poly_to_json(W.VERTICAL)),
        "identity": write("identity.txt", "1"),
        "malformed": write("bad.json", '{"coeffs": [["1", "0"],, ]}'),
        "dir": tmp_path,
        "write": write,
    }


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_worked_example(capsys, files):
    code, out, _ = run(capsys, "analyze", files["worked"], "--json")
    report = json.loads(out)
    assert code == 0
    assert report["complexity"] == [2, 6, 6]
    assert report["is_bounded"] is True and report["is_generic"] is False
    assert report["is_planar"] is False
    assert report["quadratic_factors"] == [["1", "0", "1"]] * 4 + [["2", "2", "1"]] * 2


def test_analyze_text_output(capsys, files):
    code, out, _ = run(capsys, "--json", "analyze", files["prismatic"])
    assert code == 0 and json.loads(out)["is_bounded"] is False
    code, out, _ = run(capsys, "analyze", files["prismatic"])
    assert "bounded:      False" in out and "planar:       True" in out


def test_analyze_malformed_json(capsys, files):
    code, _, err = run(capsys, "analyze", files["malformed"])
    assert code == 2 and "position 23" in err


def test_analyze_rejects_non_motion(capsys):
    code, _, err = run(capsys, "analyze", "t - i - eps i")
    assert code == 3 and "precondition" in err


def test_factor_then_verify(capsys, files):
    out_path = files["dir"] / "f.json"
    code, _, _ = run(capsys, "factor", files["worked"], "--trace", "--out", out_path,
                     "--direction=-1,0,0", "--direction", "0,0,-1")
    assert code == 0
    obj = json.loads(out_path.read_text())
    assert obj["verified"] is True
    assert obj["cofactor"] == rpoly_to_json(W.COFACTOR)
    assert len(obj["factors"]) == 10
    assert [s["complexity"] for s in obj["trace"]] == [list(c) for c in W.COMPLEXITIES]
    assert obj["trace"][1]["h_r"] == serialize_dq(W.IT2_H)
    code, out, _ = run(capsys, "verify", out_path, files["worked"])
    assert code == 0 and out.strip() == "verified"


def test_factor_i_strategy(capsys, files):
    code, out, _ = run(capsys, "factor", files["worked"], "--strategy", "factor_i")
    obj = json.loads(out)
    assert code == 0 and obj["verified"] is True
    assert len(obj["cofactor"]) - 1 > 4


def test_factor_unbounded_hint(capsys, files):
    code, _, err = run(capsys, "factor", files["prismatic"])
    assert code == 3 and "reparam" in err


def test_factor_gfactor_on_non_generic(capsys, files):
    code, _, err = run(capsys, "factor", files["worked"], "--strategy", "gfactor")
    assert code == 4 and "NotGeneric" in err


def test_factor_bad_flags(capsys, files):
    assert run(capsys, "factor", files["worked"], "--order", "x")[0] == 2
    assert run(capsys, "factor", files["worked"], "--direction", "1,2")[0] == 2


def test_verify_fixture_pairs(capsys, files):
    printed = [W.L1, W.L2, W.L3, W.F1, W.F2, W.F3, W.F4, W.R1, W.R2, DQPoly.linear(W.IT2_H)]
    worked = Factorization(W.COFACTOR, [LinearFactor(-p.coeffs[0]) for p in printed])
    path = files["write"]("printed.json", worked.to_json())
    assert run(capsys, "verify", path, files["worked"])[0] == 0
    vertical = Factorization(W.VERTICAL_COFACTOR,
                             [LinearFactor(-p.coeffs[0]) for p in W.VERTICAL_FACTORS])
    path = files["write"]("vertical_f.json", vertical.to_json())
    assert run(capsys, "verify", path, files["vertical"])[0] == 0


def test_verify_corrupted(capsys, files):
    printed = [W.L1, W.L2, W.L3, W.F1, W.F2, W.F3, W.F4, W.R2, W.R1, DQPoly.linear(W.IT2_H)]
    swapped = Factorization(W.COFACTOR, [LinearFactor(-p.coeffs[0]) for p in printed])
    path = files["write"]("swapped.json", swapped.to_json())
    code, out, _ = run(capsys, "verify", path, files["worked"])
    assert code == 5 and "mismatch" in out
    path = files["write"]("broken.json", "{not json")
    assert run(capsys, "verify", path, files["worked"])[0] == 2
    path = files["write"]("short.json", {"cofactor": ["1"]})
    assert run(capsys, "verify", path, files["worked"])[0] == 2


def test_trajectory(capsys, files):
    code, out, _ = run(capsys, "trajectory", files["identity"], "--point", "1,0,0",
                       "--samples", "0..10")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "t,x1,x2,x3" and len(rows) == 12
    assert len({r.split(",", 1)[1] for r in rows[1:]}) == 1
    code, out, _ = run(capsys, "trajectory", "t - i", "--point", "0,1,0", "--samples", "0")
    assert out.strip().splitlines()[1] == "0,0,-1,0"
    out_path = files["dir"] / "traj.csv"
    code, _, _ = run(capsys, "trajectory", files["worked"], "--point", "1,2,3",
                     "--samples=-5..5:100", "--out", out_path)
    rows = out_path.read_text().strip().splitlines()
    assert code == 0 and len(rows) == 101


def test_trajectory_singular(capsys, files):
    code, _, err = run(capsys, "trajectory", files["prismatic"], "--point", "0,0,0",
                       "--samples", "0,1")
    assert code == 3 and "1" in err


def test_reparam(capsys, files):
    code, out, _ = run(capsys, "reparam", files["worked"], "--num", "t", "--den", "1")
    assert code == 0 and json.loads(out) == poly_to_json(W.M)
    out_path = files["dir"] / "bounded.json"
    code, _, _ = run(capsys, "reparam", files["prismatic"], "--num=-t^2", "--den", "t^2 + 1",
                     "--out", out_path)
    assert code == 0 and is_bounded(load_input(str(out_path)))
    code, out, _ = run(capsys, "analyze", out_path, "--json")
    assert json.loads(out)["is_bounded"] is True
    code, _, err = run(capsys, "reparam", files["worked"], "--num", "t^2 - 1", "--den", "t + 1")
    assert code == 3


def test_determinism(capsys, files):
    first = run(capsys, "factor", files["worked"], "--trace")[1]
    second = run(capsys, "factor", files["worked"], "--trace")[1]
    assert first == second


def test_float_mode(capsys):
    code, out, _ = run(capsys, "factor", "t^2 + 1 + eps i", "--mode", "float",
                       "--tolerance", "1e-9")
    assert code == 0 and json.loads(out)["verified"] is True


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "motionfactor", "analyze", files["worked"],
                           "--json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["complexity"] == [2, 6, 6]
