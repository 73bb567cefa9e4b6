import subprocess
import sys

import pytest

from helpers import THREE_EDGE_EXAMPLE, TAIL_EXAMPLE
from ldh import build, parse_hypergraph, serialize
from ldh.cli import main


@pytest.fixture
def three_edge_file(tmp_path):
    path = tmp_path / "three_edge.hg"
    path.write_text(serialize(build(10, THREE_EDGE_EXAMPLE)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_round_trips(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "hyperpath", "--m", "5", "--k", "3")
    assert code == 0
    H = parse_hypergraph(out)
    assert (H.n, H.m) == (11, 5)
    target = tmp_path / "p.hg"
    assert run(capsys, "gen", "hyperpath", "--m", "5", "--k", "3", "-o", str(target))[0] == 0
    assert target.read_text() == out


def test_lambda(capsys, tmp_path):
    path = tmp_path / "p.hg"
    run(capsys, "gen", "hyperpath", "--m", "5", "--k", "3", "-o", str(path))
    code, out, _ = run(capsys, "lambda", str(path))
    assert code == 0
    value = int(out.split()[0].split("=")[1])
    assert value == 4


def test_lambda_deterministic(capsys, three_edge_file):
    first = run(capsys, "lambda", three_edge_file, "--pretty")
    second = run(capsys, "lambda", three_edge_file, "--pretty")
    assert first == second
    assert first[1].startswith("lambda=6 set=")


def test_verify_exit_codes(capsys, tmp_path):
    path = tmp_path / "tail.hg"
    path.write_text(serialize(build(5, TAIL_EXAMPLE)))
    code, out, _ = run(capsys, "verify", str(path), "--set", "0,1")
    assert code == 1
    assert out.strip() == "verdict=not_locating witness=2,3 set=0,1"
    code, out, _ = run(capsys, "verify", str(path), "--set", "0,1,2,4")
    assert code == 0 and out.startswith("verdict=valid witness=-")


def test_bounds_coincident_packing(capsys, three_edge_file):
    _, out, _ = run(capsys, "bounds", three_edge_file)
    assert out.startswith("lower_coincident=4 upper_trivial=9 upper_packing=-")
    _, out, _ = run(capsys, "coincident", three_edge_file)
    lines = out.strip().splitlines()
    assert lines[0] == "cell degree=1 edges=1 members=5,6"
    assert lines[-1].startswith("cells=6 bound=")
    _, out, _ = run(capsys, "packing", three_edge_file)
    assert out.strip() == "packing=2 set=0,7"


def test_labels(capsys, tmp_path):
    path = tmp_path / "l.hg"
    path.write_text("vertices 2\nedge 0 1\nlabel 0 a\nlabel 1 b\n")
    _, out, _ = run(capsys, "lambda", str(path), "--labels")
    assert out.strip() == "lambda=1 set=0 set_labels=a"


def test_oracle_and_construct(capsys):
    code, out, _ = run(capsys, "oracle", "hyperpath", "--m", "5", "--k", "3")
    assert code == 0 and out.strip() == "lambda=4 theorem=2.33 preconditions_met=true"
    code, out, _ = run(capsys, "construct", "hyperpath", "--m", "5", "--k", "3")
    assert code == 0 and out.strip() == "set=1,2,5,10 size=4 verdict=valid"
    code, out, _ = run(capsys, "construct", "tpartite", "--r", "2", "--parts", "1,1,2")
    assert code == 1 and out.startswith("construction=rejected witness=0,1")
    _, out, _ = run(capsys, "oracle", "tpartite", "--r", "2", "--parts", "1,1,2")
    assert "preconditions_met=false" in out


def test_transform(capsys, tmp_path):
    path = tmp_path / "k.hg"
    path.write_text("vertices 3\nedge 0 1 2\n")
    _, out, _ = run(capsys, "transform", "primal", str(path))
    assert out == "vertices 3\nedge 0 1\nedge 0 2\nedge 1 2\n"
    _, out, _ = run(capsys, "transform", "section", str(path), "--k", "3")
    assert out == "vertices 3\nedge 0 1 2\n"
    code, _, err = run(capsys, "transform", "section", str(path))
    assert code == 2 and "--k" in err
    code, _, err = run(capsys, "transform", "section", str(path), "--k", "1")
    assert code == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", "2.33", "--m", "5..8")
    assert code == 0
    assert out.count("PASS") == 4
    assert out.strip().splitlines()[-1] == "summary theorem=2.33 pass=4 fail=0"
    code, out, _ = run(capsys, "check", "2.22", "--parts", "1,1,2")
    assert code == 0
    code, out, _ = run(capsys, "check", "2.13", "--m", "3", "--k", "4")
    assert code == 1 and out.startswith("FAIL")
    code, _, err = run(capsys, "check", "7.7")
    assert code == 2 and "unknown theorem" in err


def test_errors_exit_two(capsys, tmp_path):
    path = tmp_path / "bad.hg"
    path.write_text("vertices 3\nedge 0 1\n")
    code, _, err = run(capsys, "lambda", str(path))
    assert code == 2 and err.startswith("ldh: error:")
    code, _, _ = run(capsys, "lambda", str(tmp_path / "missing.hg"))
    assert code == 2
    path.write_text("vertices 2\nedge 0 1\nedge 0 1\n")
    assert run(capsys, "lambda", str(path), "--require-sperner")[0] == 0
    path.write_text("vertices 3\nedge 0 1\nedge 0\nedge 2\n")
    assert run(capsys, "lambda", str(path), "--require-sperner")[0] == 2
    assert run(capsys, "lambda", str(path), "--require-connected")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_max_n_cap(capsys, monkeypatch, three_edge_file):
    code, _, err = run(capsys, "lambda", three_edge_file, "--max-n", "5")
    assert code == 2
    assert err.startswith("ldh: error:")
    monkeypatch.setenv("LDH_MAX_N", "5")
    assert run(capsys, "lambda", three_edge_file)[0] == 2
    assert run(capsys, "lambda", three_edge_file, "--max-n", "12")[0] == 0
    monkeypatch.setenv("LDH_MAX_N", "many")
    assert run(capsys, "lambda", three_edge_file)[0] == 2


def test_stdin_and_module_entry(three_edge_file):
    text = open(three_edge_file).read()
    proc = subprocess.run(
        [sys.executable, "-m", "ldh", "lambda", "-"], input=text, capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("lambda=6 ")
