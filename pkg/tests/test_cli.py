"""Exit codes and output formats of the command line front end."""

import json

import pytest

from hypcensus import census
from hypcensus import oracle as oc
from hypcensus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hyp_json_decimal_strings(capsys):
    code, out, _ = run(capsys, "hyp", "--g", "2", "--q", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    row = payload["results"][0]
    assert row["hyp"] == "69"
    assert row["sd"] == "7"
    assert isinstance(row["hyp"], str)


def test_invalid_q_exits_2(capsys):
    code, _, err = run(capsys, "hyp", "--g", "2", "--q", "4")
    assert code == 2
    assert "odd prime power" in err
    assert run(capsys, "hyp", "--g", "2")[0] == 2
    assert run(capsys, "hyp", "--g", "2", "--q", "3", "--p", "3")[0] == 2


def test_p_e_selects_extension_field(capsys):
    code, out, _ = run(capsys, "sd", "--g", "2", "--p", "3", "--e", "2")
    assert code == 0
    assert out.strip() == f"g=2 q=9 sd={census.sd(2, 9)}"


def test_rows_sorted_by_g_then_q(capsys):
    code, out, _ = run(capsys, "sd", "--g", "2..3", "--q", "5,3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["g,q,sd", "2,3,7", "2,5,27", "3,3,12", "3,5,0"]


def test_table_markdown_full_range(capsys):
    code, out, _ = run(capsys, "table", "--format", "markdown")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11  # header, rule, nine genus rows
    assert lines[2].startswith("| 2 | 2q^3 + q^2 + 2q - 2")


def test_table_compare_clean_row(capsys):
    code, out, _ = run(capsys, "table", "--g", "2", "--which", "sd",
                       "--compare-paper")
    assert code == 0
    assert "matches the formula at all q <= 499" in out


def test_table_compare_flags_genus9(capsys):
    code, out, _ = run(capsys, "table", "--g", "9", "--which", "hyp",
                       "--compare-paper")
    assert code == 0
    assert "differs at 53 prime powers" in out
    assert "#   q=5: row=" in out


def test_table_rejects_unknown_genus(capsys):
    assert run(capsys, "table", "--g", "11")[0] == 2


def test_symbolic_frozen_sd2(capsys):
    code, out, _ = run(capsys, "symbolic", "--g", "2", "--which", "sd")
    assert code == 0
    assert out.strip() == (
        "sd(2) = q^2 - 2  +  [2]_{q = 2 (mod 3)}  +  [2]_{q = 5,7 (mod 8)}"
    )


def test_oracle_agreement(capsys):
    code, out, _ = run(capsys, "oracle", "--g", "2", "--q", "3",
                       "--method", "both")
    assert code == 0
    assert "AGREES" in out
    assert "orbit_hyp=69" in out
    assert "burnside_hyp=69" in out


def test_oracle_budget_refusal(capsys):
    code, _, err = run(capsys, "oracle", "--g", "5", "--q", "9")
    assert code == 2
    assert "refused" in err


def test_oracle_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(census, "hyp", lambda g, q: 999)
    code, out, err = run(capsys, "oracle", "--g", "2", "--q", "3",
                         "--method", "orbit")
    assert code == 1
    assert "MISMATCH" in out
    assert "counterexamples:" in err


def test_verify_suite_runs(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "norm", "--q", "3,5")
    assert code == 0
    assert "32 checks ok" in out
    code, out, _ = run(capsys, "verify", "--suite", "quot", "--q", "3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["suite"] == "quot"


def test_verify_failure_exits_1(capsys, monkeypatch):
    def boom(**kwargs):
        raise AssertionError(3, "C", 2)

    monkeypatch.setitem(oc.SUITES, "norm", boom)
    code, _, err = run(capsys, "verify", "--suite", "norm")
    assert code == 1
    assert "counterexample" in err


def test_verify_wrong_option_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--suite", "cocycle", "--q", "3,5")
    assert code == 2
    assert "error" in err


def test_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
