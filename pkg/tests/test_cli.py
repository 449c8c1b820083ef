import json
import subprocess
import sys

import pytest

from momentangle.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_flag_exit_codes(capsys):
    code, out, _ = call(capsys, "flag", "@pentagon")
    assert code == 0
    assert json.loads(out) == {"flag": True, "witness": None}
    code, out, _ = call(capsys, "flag", "@boundary-simplex:2")
    assert code == 1
    assert json.loads(out)["witness"] == [1, 2, 3]


def test_scx_file_input(capsys, tmp_path):
    path = tmp_path / "square.scx"
    path.write_text("vertices 4\nf 1 2\nf 2 3\nf 3 4\nf 1 4\n")
    code, out, _ = call(capsys, "rk", "homology", str(path))
    assert code == 0
    data = json.loads(out)
    assert [d["betti"] for d in data["degrees"]] == [1, 2, 1]


def test_input_errors(capsys, tmp_path):
    code, out, err = call(capsys, "flag", str(tmp_path / "missing.scx"))
    assert code == 2 and out == "" and "cannot read" in err
    bad = tmp_path / "bad.scx"
    bad.write_text("vertices 2\nf 1 5\n")
    code, _, err = call(capsys, "flag", str(bad))
    assert code == 2 and "line 2" in err
    code, _, _ = call(capsys, "flag", "@nonsense")
    assert code == 2
    code, _, _ = call(capsys, "no-such-command")
    assert code == 2


def test_capacity_error(capsys):
    code, _, err = call(capsys, "racg", "ball", "@pentagon", "--radius", "20")
    assert code == 3
    assert "capacity" in err


def test_aspherical(capsys):
    code, out, _ = call(capsys, "aspherical", "@pentagon", "--pair", "complex")
    assert code == 1
    assert json.loads(out)["failed"] == ["ii"]
    code, out, _ = call(capsys, "aspherical", "@pentagon")
    assert code == 0


def test_rk_build_and_euler(capsys):
    code, out, _ = call(capsys, "rk", "build", "@boundary-simplex:1")
    data = json.loads(out)
    assert [len(layer["cells"]) for layer in data["dims"]] == [4, 4]
    code, out, _ = call(capsys, "rk", "euler", "@pentagon")
    assert json.loads(out) == {"euler": -8, "formula": -8}
    code, out, _ = call(capsys, "rk", "homology", "@boundary-simplex:1", "--pair", "complex")
    assert [d["betti"] for d in json.loads(out)["degrees"]] == [1, 0, 0, 1]


def test_racg(capsys):
    code, out, _ = call(capsys, "racg", "nf", "@pentagon", "--word", "2,1,3,3")
    assert json.loads(out) == {"normal_form": "1,2", "length": 2, "sign": [1, 1, 0, 0, 0]}
    code, out, _ = call(capsys, "racg", "growth", "@points:3", "--radius", "3")
    assert json.loads(out)["sphere_sizes"] == [1, 3, 6, 12]
    code, out, _ = call(capsys, "racg", "ball", "@simplex:1", "--radius", "2")
    assert json.loads(out)["spheres"] == [["e"], ["1", "2"], ["1,2"]]
    code, _, err = call(capsys, "racg", "nf", "@pentagon")
    assert code == 2


def test_davis_and_npc(capsys):
    code, out, _ = call(capsys, "davis", "cover", "@boundary-simplex:1", "--radius", "3")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = call(capsys, "davis", "ball", "@points:2", "--radius", "1")
    assert code == 0 and json.loads(out)["chambers"] == 3
    code, out, _ = call(capsys, "npc", "@pentagon")
    assert code == 0 and json.loads(out)["issued"]
    code, out, _ = call(capsys, "npc", "@boundary-simplex:2")
    assert code == 1


def test_sphere_and_hochster(capsys):
    code, out, _ = call(capsys, "sphere-check", "@octahedron")
    assert code == 0 and json.loads(out)["verdict"] == "yes"
    code, out, _ = call(capsys, "sphere-check", "@path:3")
    assert code == 1
    code, out, _ = call(capsys, "hochster", "@pentagon")
    assert code == 0 and json.loads(out)["agrees"]


def test_catalog_round_trip(capsys, tmp_path):
    code, out, _ = call(capsys, "catalog", "pentagon", "--scx")
    path = tmp_path / "p.scx"
    path.write_text(out)
    code, out, _ = call(capsys, "flag", str(path))
    assert code == 0
    code, out, _ = call(capsys, "catalog", "empty:3")
    assert json.loads(out) == {"name": "empty:3", "vertices": 3, "facets": []}


def test_documented_examples(capsys):
    code, out, _ = call(capsys, "rk", "homology", "@boundary-simplex:2")
    assert code == 0 and json.loads(out)["betti"] == [1, 0, 1]


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "momentangle", "davis", "cover", "@pentagon", "--radius", "2"]
    first = subprocess.run(argv, capture_output=True).stdout
    second = subprocess.run(argv, capture_output=True).stdout
    assert first and first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "momentangle", "flag", "@pentagon"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["flag"] is True


@pytest.mark.parametrize("argv", [["--help"], ["rk", "--help"]])
def test_help(capsys, argv):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert "usage" in out
