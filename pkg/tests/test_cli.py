import json

import pytest

from g2cert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_check_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "cayley", "--samples", "5")
    assert code == 0
    assert "[PASS ] cayley" in out
    assert "norm_signature" in out


def test_verify_check_pulls_dependencies(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "recognition", "--samples", "3", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert [c["id"] for c in doc["checks"]] == ["decomposition", "recognition"]
    assert doc["summary"] == {"total": 2, "passed": 2, "failed": 0, "errored": 0}


def test_verify_unknown_check_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--check", "bogus")
    assert code == 2
    assert "valid ids" in err
    assert "cayley" in err


def test_unknown_flag_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--all", "--frobnicate")
    assert code == 2
    assert "usage" in err


def test_missing_selector_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2


def test_invalid_seed_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--check", "cayley", "--seed", "-3")
    assert code == 2
    assert "invalid configuration" in err


def test_verify_out_writes_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "verify", "--check", "cayley", "--samples", "3",
        "--format", "json", "--out", str(path),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert doc["checks"][0]["id"] == "cayley"
    assert doc["checks"][0]["status"] == "pass"


def test_dims_g2(capsys):
    code, out, _ = run_cli(capsys, "dims", "--type", "G2", "--max-coeff", "2")
    assert code == 0
    assert "1,0 -> 7" in out
    assert "0,1 -> 14" in out


def test_dims_json(capsys):
    code, out, _ = run_cli(
        capsys, "dims", "--type", "B", "--rank", "3", "--max-coeff", "1", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "B3"
    assert doc["monotone"] is True
    assert {"weight": [0, 0, 0], "dim": 1} in doc["dims"]


def test_dims_bad_type_exits_2(capsys):
    code, _, err = run_cli(capsys, "dims", "--type", "Z9", "--max-coeff", "1")
    assert code == 2


def test_census_dim21(capsys):
    code, out, _ = run_cli(capsys, "census", "--dim", "21")
    assert code == 0
    assert out.strip() == "B3 C3"


def test_census_json(capsys):
    code, out, _ = run_cli(capsys, "census", "--dim", "14", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"dim": 14, "max_rank": 8, "types": ["G2"]}


def test_census_empty(capsys):
    code, out, _ = run_cli(capsys, "census", "--dim", "4")
    assert code == 0
    assert out.strip() == "(none)"


def test_show_mul_table(capsys):
    code, out, _ = run_cli(capsys, "show", "mul-table")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 64
    assert "e1*e1 = e1" in out
    assert "e1*e2 = 0" in out


def test_show_killing_g2(capsys):
    code, out, _ = run_cli(capsys, "show", "killing", "--algebra", "g2")
    assert code == 0
    assert "signature: (8, 6, 0)" in out


def test_show_killing_so34(capsys):
    code, out, _ = run_cli(capsys, "show", "killing", "--algebra", "so34")
    assert code == 0
    assert "signature: (12, 9, 0)" in out


def test_show_decomposition(capsys):
    code, out, _ = run_cli(capsys, "show", "decomposition")
    assert code == 0
    assert "dimension 21" in out
    assert "dimension 14" in out
    assert "dimension 7" in out


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
