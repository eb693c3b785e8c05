import json

from gmatrices.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_symmetric_group_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm5.4", "--n", "2")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l]
    assert len(lines) == 2
    assert all(l.startswith("PASS thm-5.4") for l in lines)


def test_verify_json_stream(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm6.7", "--cartan-type", "A2", "--json")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    for line in lines:
        doc = json.loads(line)
        assert doc["pass"] is True
        assert doc["claim"] == "thm-6.7"
        assert "elapsed" not in doc


def test_mutate_example(capsys):
    code, out, _ = run_cli(
        capsys, "mutate", "--k", "1", "--matrix", "[[0,1],[-1,0]]", "--json"
    )
    assert code == 0
    assert json.loads(out) == [[0, -1], [1, 0]]


def test_weyl_reflection_display(capsys):
    code, out, _ = run_cli(capsys, "weyl", "rw", "--type", "A2", "--word", "1", "--json")
    assert code == 0
    assert json.loads(out) == [[-1, 1], [0, 1]]


def test_weyl_reduce_and_longest(capsys):
    code, out, _ = run_cli(capsys, "weyl", "reduce", "--cartan", "A2", "--word", "1,1")
    assert code == 0 and out.strip() == "e"
    code, out, _ = run_cli(capsys, "weyl", "longest", "--cartan", "B2")
    assert code == 0 and len(out.strip().split(",")) == 4


def test_algebra_build_from_json_file(tmp_path, capsys):
    doc = {
        "vertices": 2,
        "arrows": [
            {"label": "a1", "src": 1, "tgt": 2},
            {"label": "b2", "src": 2, "tgt": 1},
        ],
        "relations": [[{"coeff": 1, "path": ["a1", "b2"]}]],
        "caps": {"length": 8},
    }
    path = tmp_path / "algebra.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "algebra", "build", "--input", str(path), "--json")
    assert code == 0
    info = json.loads(out)
    assert info["dim"] == 5
    assert info["cartan"] == [[1, 1], [1, 2]]


def test_malformed_input_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "algebra", "build", "--input", str(path))
    assert code == 2
    assert "error" in err


def test_module_queries(capsys):
    code, out, _ = run_cli(
        capsys, "module", "gvec", "--type", "hereditary:A2", "--module", "simple:1",
        "--json",
    )
    assert code == 0 and json.loads(out) == [1, -1]
    code, out, _ = run_cli(
        capsys, "module", "tau", "--type", "hereditary:A2", "--module", "simple:1",
        "--json",
    )
    assert code == 0 and json.loads(out) == [0, 1]


def test_gmatrix_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "gmatrix",
        "--type",
        "hereditary:A2",
        "--modules",
        "proj:1,simple:1",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["g"] == [[1, 1], [0, -1]]
    assert doc["det"] in (1, -1)


def test_ideal_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "ideal",
        "--type",
        "auslander:n=2",
        "--cartan",
        "A2",
        "--word",
        "1",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["g"] == [[-1, 0], [1, 1]]


def test_silting_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "silting",
        "--type",
        "hereditary:A2",
        "--modules",
        "proj:1,simple:1",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["silting"] is True and doc["transfer_pass"] is True


def test_verify_unknown_claim_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "thm-99.9")
    assert code == 2 and "unknown claim" in err


def test_controls_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "controls")
    assert code == 0
    assert "control-congruence" in out and "control-nonreduced" in out
