"""Tests for the command-line driver: output formats, determinism, exit codes."""

import json

import pytest

from confchern import cli
from confchern.classes import ProjFixedPoint, TorusData, mc_conf_proj_at
from confchern.laurent import RatFunc


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_conf_proj_json_round_trip(capsys):
    code, out, _ = run(["conf-proj", "--n", "2", "--point", "1,1",
                        "--output", "json"], capsys)
    assert code == 0
    blob = json.loads(out)
    assert set(blob) == {"universe", "num", "den"}
    got = RatFunc.from_json(blob)
    t = TorusData.standard(2)
    want = mc_conf_proj_at(t, ProjFixedPoint((1, 1)))
    assert got == want.substitute({}, got.universe)


def test_output_deterministic(capsys):
    argv = ["conf-affine", "--n", "2", "--k", "2", "--output", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_text_output_parses(capsys):
    code, out, _ = run(["orbit", "--n", "1", "--k", "1"], capsys)
    assert code == 0
    assert "y" in out


def test_check_szeregi_pass(capsys):
    code, out, _ = run(["check", "--name", "szeregi", "--N", "3"], capsys)
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS"


def test_check_a_oracle_reports_counts(capsys):
    code, out, _ = run(["check", "--name", "a-oracle", "--k", "3"], capsys)
    assert code == 0
    assert out.strip() == "PASS 5/5"


def test_check_residue_custom_alphas(capsys):
    code, out, _ = run(["check", "--name", "residue", "--N", "2",
                        "--alphas", "2,5"], capsys)
    assert code == 0
    assert "PASS" in out


def test_check_recursion(capsys):
    code, out, _ = run(["check", "--name", "recursion", "--n", "2",
                        "--k", "2"], capsys)
    assert code == 0
    assert "4/4" in out


def test_usage_error_exit_2(capsys):
    # cap violation surfaces as exit code 2 with a message on stderr
    code, _, err = run(["check", "--name", "s2", "--n", "9", "--N", "2"],
                       capsys)
    assert code == 2
    assert "error" in err


def test_unknown_check_name_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["check", "--name", "bogus"], capsys)
    assert exc.value.code == 2


def test_check_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "check_partition_exp_identity", lambda N: False)
    code, out, _ = run(["check", "--name", "szeregi", "--N", "2"], capsys)
    assert code == 1
    assert out.strip().splitlines()[-1] == "FAIL"


def test_parallel_flag_accepted(capsys):
    code, out, _ = run(["conf-affine", "--n", "1", "--k", "1",
                        "--parallel", "4"], capsys)
    assert code == 0
    assert out.strip()
