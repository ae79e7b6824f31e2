import json

import pytest

from assocmodels.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fvector_formats(capsys):
    code, out, _ = run(capsys, "fvector", "--model", "k", "--n", "4", "--format", "csv")
    assert code == 0 and out == "5,5,1\n"
    code, out, _ = run(capsys, "fvector", "--model", "k", "--n", "4")
    assert code == 0 and out == "5 5 1\n"
    code, out, _ = run(
        capsys, "fvector", "--model", "jprime", "--n", "3", "--format", "json"
    )
    assert code == 0 and json.loads(out) == {"model": "jprime", "n": 3, "f": [5, 5, 1]}


def test_enumerate_text_and_dot(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "cp", "--n", "1")
    assert code == 0
    lines = sorted(out.splitlines())
    assert lines == ["0 [r1]", "0 [s1]", "1 []"]
    code, out, _ = run(
        capsys, "enumerate", "--model", "j", "--n", "3", "--format", "dot"
    )
    assert code == 0
    nodes = sum(1 for line in out.splitlines() if line.startswith('    "'))
    assert nodes == 13
    assert out.count("->") == 18


def test_enumerate_json(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--model", "k", "--n", "3", "--format", "json"
    )
    data = json.loads(out)
    assert code == 0 and len(data["elements"]) == 3


def test_coords_csv(capsys):
    code, out, _ = run(capsys, "coords", "--n", "4", "--format", "csv")
    assert code == 0
    rows = sorted(out.splitlines())
    assert len(rows) == 5
    assert "1,2,3" in rows and "1,4,1" in rows
    for row in rows:
        assert sum(map(int, row.split(","))) == 6


def test_map_subcommand(capsys):
    code, out, _ = run(capsys, "map", "--name", "phi", "--input", "(p(t(u**))(p(t*)(t**)))")
    assert code == 0 and out.strip() == "f(a1a2)(f(a3)f(a4.a5))"
    code, out, _ = run(capsys, "map", "--name", "phiprime", "--input", "f(a1)f(a2)")
    assert code == 0 and out.strip() == "a1(a2a3)"
    tub = '{"n": 2, "tubes": [{"kind": "square", "nodes": [1]}]}'
    code, out, _ = run(capsys, "map", "--name", "tubing", "--input", tub)
    assert code == 0 and out.strip() == "f(a1)f(a2.a3)"
    code, out, _ = run(capsys, "map", "--name", "composed", "--input", tub)
    assert code == 0 and out.strip() == "a1(a2a3a4)"


def test_map_bad_input_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["map", "--name", "phi", "--input", "(x**)"])
    assert exc.value.code == 2


def test_verify_single_check_text(capsys):
    code, out, _ = run(capsys, "verify", "--check", "phi", "--n", "3")
    assert code == 0
    assert "pass" in out and "(13 = 13)" in out


def test_verify_q_pair_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--check", "q", "--p", "2", "--q", "3", "--format", "json"
    )
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["pass"] is True


def test_cap_violation_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["fvector", "--model", "j", "--n", "9"])
    assert exc.value.code == 2


def test_force_warns_on_stderr(capsys):
    code, out, err = run(
        capsys, "fvector", "--model", "cp", "--n", "6", "--force", "--format", "csv"
    )
    assert code == 0
    assert "warning" in err
    # CP(6) matches the 8-letter bracketing model: 429 vertices, 4279 faces
    assert out.startswith("429,")
    assert sum(map(int, out.split(","))) == 4279


def test_output_file(tmp_path, capsys):
    target = tmp_path / "fv.txt"
    code, out, _ = run(
        capsys, "fvector", "--model", "k", "--n", "5", "--output", str(target)
    )
    assert code == 0 and out == ""
    assert target.read_text() == "14 21 9 1\n"
