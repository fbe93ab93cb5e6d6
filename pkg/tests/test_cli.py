"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from gtkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_patterns(capsys):
    code, out, _ = run(capsys, "patterns", "--hw", "1,0,-1")
    assert code == 0
    pats = json.loads(out)
    assert len(pats) == 8
    assert pats[0] == [[1, 0, -1], [1, 0], [1]]


def test_patterns_rejects_non_dominant(capsys):
    code, _, err = run(capsys, "patterns", "--hw", "0,1")
    assert code == 2
    assert "dominant" in err


def test_claim_output(capsys):
    code, out, _ = run(capsys, "claim", "--n", "3", "--m", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == {"(1,0,0)": "1/4", "(1,1,0)": "3/4"}
    assert payload["parseval"] == "1"


def test_claim_with_solve_cross_check(capsys):
    code, out, _ = run(capsys, "claim", "--n", "3", "--m", "2", "--solve")
    assert code == 0
    assert json.loads(out)["solved_vector_agrees"] is True


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--hw", "2,0,-2")
    assert code == 0 and json.loads(out)["dim"] == 27


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--hw", "1,0", "--p", "1", "--q", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"] == [[0, 1, "1"]]


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--hw", "1,0,0", "--S", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["types"] == [
        {"sigma": [[1, 0], [0]], "mult": 1, "dim": 2},
        {"sigma": [[0, 0], [1]], "mult": 1, "dim": 1}]


def test_project_and_fixed(capsys):
    code, out, _ = run(capsys, "project", "--hw", "1,0,0", "--S", "1",
                       "--sigma", "1,0|0")
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == 2
    assert payload["entries"] == [[0, 0, "1"], [1, 1, "1"]]

    code, out, _ = run(capsys, "fixed", "--hw", "1,0,-1", "--S", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1


def test_eta(capsys):
    code, out, _ = run(capsys, "eta", "--n", "3", "--m", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == {"(1,0,0)": "1", "(1,1,0)": "-3"}
    assert payload["normalizer"] == "6"


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "--n-max", "4", "--m-max", "5",
                       "--p-max", "2", "--m1-max", "5")
    assert code == 0
    assert json.loads(out)["all_equal"] is True


def test_decay_defaults(capsys):
    code, out, _ = run(capsys, "decay", "--n", "3", "--m-max", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "m,dim,trace_num_den,norm_est,lower,upper"
    assert lines[1].startswith("0,1,1,")
    assert lines[2].startswith("1,8,1/4,")


def test_support(capsys):
    code, out, _ = run(capsys, "support", "--hw", "1,0,-1", "--S", "1",
                       "--T", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["block_count"] >= 1
    assert payload["max_row"] >= 1


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_failure_exits_1(capsys, monkeypatch):
    from gtkit.verify import CheckResult

    def broken_suite(scale):
        return [CheckResult("stub", "stub", False, "forced failure", 0.0)]

    monkeypatch.setattr("gtkit.cli.run_suite", broken_suite)
    code, out, _ = run(capsys, "verify", "--suite", "fast")
    assert code == 1
    assert "FAIL" in out


def test_out_file_and_determinism(tmp_path, capsys):
    target = tmp_path / "claim.json"
    assert main(["claim", "--n", "3", "--m", "3",
                 "--out", str(target)]) == 0
    first = target.read_bytes()
    assert main(["claim", "--n", "3", "--m", "3",
                 "--out", str(target)]) == 0
    assert target.read_bytes() == first
    capsys.readouterr()
