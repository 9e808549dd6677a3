import json
import subprocess
import sys

import pytest

from hookimm.algebra import Poly
from hookimm.cli import main

K3 = "3 3\n1 2\n2 3\n1 3\n"


@pytest.fixture
def k3(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text(K3)
    return str(path)


def run(capsys, *argv) -> tuple:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_human(capsys, k3):
    code, out, _ = run(capsys, "poly", "--edges", k3, "--matrix", "laplacian", "--k", "1")
    assert code == 0
    assert out.strip() == "Phi_1(x) = x^3 - 6x^2 + 9x"


@pytest.mark.parametrize("method", ["oracle", "vertex", "edge", "general", "auto"])
def test_poly_json_methods_agree(capsys, k3, method):
    code, out, _ = run(capsys, "poly", "--edges", k3, "--matrix", "laplacian",
                       "--method", method, "--format", "json")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["k"] for r in recs] == [1, 2, 3]
    assert recs[1] == {"n": 3, "k": 2, "beta": "1", "gamma": "-1", "method": recs[1]["method"],
                       "coeffs": ["-18", "24", "-12", "2"]}


def test_json_round_trip(capsys, k3):
    _, out, _ = run(capsys, "poly", "--edges", k3, "--beta", "1/3", "--gamma", "2/3",
                    "--format", "json")
    for line in out.splitlines():
        coeffs = json.loads(line)["coeffs"]
        assert json.dumps(Poly.from_json(coeffs).to_json()) == json.dumps(coeffs)


def test_imm_and_out_of_range(capsys, k3):
    assert run(capsys, "imm", "--edges", k3, "--matrix", "laplacian", "--k", "2")[1] == "18\n"
    code, out, err = run(capsys, "poly", "--edges", k3, "--matrix", "laplacian", "--k", "5",
                         "--format", "json")
    assert code == 0 and json.loads(out)["coeffs"] == []
    assert "outside" in err


def test_stdin_and_graph6(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("2 1\n1 2\n"))
    assert run(capsys, "imm", "--edges", "-", "--matrix", "adjacency", "--k", "2")[1] == "1\n"
    assert run(capsys, "imm", "--graph6", "Bw", "--matrix", "laplacian", "--k", "3")[1] == "12\n"


def test_a_alpha(capsys):
    out = run(capsys, "poly", "--graph6", "A_", "--matrix", "a_alpha", "--alpha", "1/2",
              "--k", "1")[1]
    assert out.strip() == "Phi_1(x) = x^2 - x"


def test_cycles_and_chars(capsys):
    code, out, _ = run(capsys, "cycles", "--graph6", "C~", "--vertex", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "length,vertices" and len(lines) == 7
    out = run(capsys, "cycles", "--graph6", "C~", "--edge", "1,2")[1]
    assert len(out.splitlines()) == 5
    out = run(capsys, "chars", "--n", "3")[1]
    assert out.splitlines() == ["k,1+1+1,2+1,3", "1,1,-1,1", "2,2,0,-1", "3,1,1,1"]


def test_directed_pivot_edge(capsys, tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("3 4 directed\n1 2\n2 1\n2 3\n3 1\n")
    outs = {run(capsys, "poly", "--edges", str(path), "--beta", "2", "--gamma", "5",
                "--method", m, *extra, "--format", "csv")[1]
            for m, extra in [("oracle", ()), ("vertex", ("--pivot", "3")),
                             ("edge", ("--pivot-edge", "2,1")), ("edge", ("--pivot-edge", "3,1"))]}
    assert len(outs) == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "anchors")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "alpha-coefficient")
    assert code == 0 and "printed" in out


@pytest.mark.parametrize("argv, code", [
    (["poly", "--graph6", "Bw"], 1),
    (["poly", "--graph6", "Bw", "--matrix", "nope"], 1),
    (["poly", "--graph6", "Bw", "--matrix", "laplacian", "--beta", "1", "--gamma", "1"], 1),
    (["poly", "--graph6", "Bw", "--matrix", "laplacian", "--k", "two"], 1),
    (["poly", "--graph6", "Bw", "--matrix", "laplacian", "--pivot", "1"], 1),
    (["poly", "--graph6", "Bw", "--matrix", "laplacian", "--method", "edge", "--pivot-edge", "1,4"], 1),
    (["poly", "--graph6", "B", "--matrix", "laplacian"], 2),
    (["poly", "--graph6", "K" + "?" * 10, "--matrix", "laplacian"], 4),
    (["verify", "--suite", "oracle", "--n", "9"], 4),
    (["frobnicate"], 1),
])
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_bad_edge_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n1 2\n")
    assert main(["poly", "--edges", str(path), "--matrix", "laplacian"]) == 2
    assert "parse error" in capsys.readouterr().err
    assert main(["poly", "--edges", str(tmp_path / "missing"), "--matrix", "laplacian"]) == 2


def test_argparse_errors_exit_1():
    with pytest.raises(SystemExit) as info:
        main(["poly", "--graph6", "Bw", "--matrix", "nope"])
    assert info.value.code == 1


def test_console_script(k3):
    proc = subprocess.run([sys.executable, "-m", "hookimm.cli", "imm", "--edges", k3,
                           "--matrix", "laplacian", "--k", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "12\n"

