"""CLI surface: subcommands, exit codes, formats, determinism."""

import copy
import json

import pytest

from constaqec import verify
from constaqec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_table_text(capsys):
    code, out, _ = run(capsys, "family", "--construction", "I", "--q", "9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family=I q=9 n=40 codes=36"
    assert len(lines) == 37
    assert lines[1] == "[[40,38,2/2]]_81"


def test_family_table5(capsys):
    code, out, _ = run(capsys, "family", "--construction", "III+", "--q", "23")
    assert code == 0
    assert len(out.splitlines()) == 29
    assert "[[106,92,14/2]]_529" in out


def test_family_constraint_violation_exits_2(capsys):
    code, out, err = run(
        capsys, "family", "--construction", "II", "--q", "7", "--lambda", "2"
    )
    assert code == 2
    assert "must be odd" in err


def test_family_empty_range_exits_2(capsys):
    code, _, err = run(capsys, "family", "--construction", "Ir", "--q", "3", "--r", "4")
    assert code == 2
    assert "empty" in err


def test_family_deterministic_output(capsys):
    _, first, _ = run(capsys, "family", "--construction", "III-", "--q", "17",
                      "--format", "json")
    _, second, _ = run(capsys, "family", "--construction", "III-", "--q", "17",
                       "--format", "json")
    assert first == second


def test_family_out_file(tmp_path, capsys):
    target = tmp_path / "table.txt"
    code, out, _ = run(capsys, "family", "--construction", "I", "--q", "5",
                       "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("family=I q=5 n=12")


def test_verify_tables_passes(capsys):
    code, out, _ = run(capsys, "verify-tables")
    assert code == 0
    assert "6/6 tables, 2/2 examples PASS" in out


def test_verify_tables_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify-tables", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out
    assert parsed["ok"] is True


def test_verify_tables_deep_mode(capsys):
    # tiny budgets push every distance to the bound-coincidence route,
    # which still certifies the family codes exactly
    code, out, _ = run(capsys, "verify-tables", "--deep",
                       "--budget-enum", "0", "--budget-mds", "0")
    assert code == 0
    assert "deep table1: PASS" in out
    assert "deep table2: PASS [skipped (q beyond oracle range)]" in out


def test_verify_tables_detects_injected_fault(capsys, monkeypatch):
    fixture = copy.deepcopy(verify.load_reference_tables())
    fixture["tables"]["table3"]["codes"][0][1] += 1  # corrupt one dimension
    monkeypatch.setattr(verify, "load_reference_tables", lambda: fixture)
    code, out, _ = run(capsys, "verify-tables")
    assert code == 1
    assert "table3: FAIL" in out
    assert "[[24,23,2/2]]" in out  # the altered entry is named
    assert "table1: PASS" in out


def test_code_info_family_mode_json(capsys):
    code, out, _ = run(
        capsys, "code-info", "--construction", "III+", "--q", "23", "--s", "0",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert (doc["n"], doc["k"], doc["distance_exact"]) == (106, 105, 2)
    assert doc["mds"] is True
    assert doc["defining_set"]["members"] == [265]
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == out


def test_code_info_explicit_mode(capsys):
    code, out, _ = run(
        capsys, "code-info", "--q", "3", "--n", "4", "--r", "2",
        "--eta-exp", "4", "--members", "1", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert (doc["k"], doc["distance_exact"], doc["distance_method"]) == (3, 2, "enumeration")


def test_code_info_open_orbit_names_missing_members(capsys):
    code, _, err = run(
        capsys, "code-info", "--q", "17", "--n", "58", "--r", "18",
        "--eta-exp", "16", "--members", "73",
    )
    assert code == 2
    assert "217" in err


def test_code_info_missing_flags(capsys):
    code, _, err = run(capsys, "code-info", "--q", "3", "--n", "4")
    assert code == 2
    assert "--members" in err


def test_dual_check(capsys):
    code, out, _ = run(
        capsys, "dual-check", "--construction", "I", "--q", "9", "--s", "8",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dual_containing"] is True
    assert len(doc["dual_defining_set"]["members"]) == 32


def test_crosscheck_single_instance(capsys):
    code, out, _ = run(
        capsys, "crosscheck", "--construction", "II", "--q", "7",
        "--lambda", "3", "--s", "6", "--t", "6",
    )
    assert code == 0
    assert "criterion_containment: True" in out
    assert "oracle_containment: True" in out


def test_crosscheck_sweep_restricted_q(capsys):
    code, out, _ = run(capsys, "crosscheck", "--q", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["containment_lemmas"]["failures"] == []
    assert doc["oracle_agreement"]["disagreements"] == []


def test_crosscheck_rejects_oversized_q(capsys):
    code, _, err = run(capsys, "crosscheck", "--q", "23")
    assert code == 2
    assert "budgeted" in err
