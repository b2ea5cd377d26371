"""Tests for the command-line interface: outputs, formats, and exit codes."""

import csv
import io
import json

import sdpdeg.cli as cli
import sdpdeg.degree as degree_mod
from sdpdeg.cli import main
from sdpdeg.degree import DegreeResult, Method


def _fields(line):
    return dict(part.split("=", 1) for part in line.split())


def test_value_basic(capsys):
    assert main(["value", "3", "4", "2"]) == 0
    out = _fields(capsys.readouterr().out.strip())
    assert out["delta"] == "10"
    assert out["m"] == "3" and out["k"] == "0" and out["l"] == "4"


def test_value_invalid_triple(capsys):
    assert main(["value", "2", "4", "2"]) == 2
    err = capsys.readouterr().err
    assert "3" in err  # names the violated lower bound


def test_value_residue_with_check(capsys):
    assert main(["value", "4", "4", "2", "--method", "residue", "--check"]) == 0
    out = _fields(capsys.readouterr().out.strip())
    assert out["delta"] == "30" and out["method"] == "residue"


def test_value_theorem1_with_check(capsys):
    assert main(["value", "2", "3", "2", "--method", "theorem1", "--check"]) == 0
    out = _fields(capsys.readouterr().out.strip())
    assert out["delta"] == "6" and out["method"] == "theorem1"


def test_value_custom_lambda(capsys):
    code = main(["value", "2", "3", "2", "--method", "residue", "--lambda", "2,5,11"])
    assert code == 0
    assert _fields(capsys.readouterr().out.strip())["delta"] == "6"
    # rationals parse too
    code = main(["value", "2", "3", "2", "--method", "residue", "--lambda", "1/2,3/2,4"])
    assert code == 0
    assert _fields(capsys.readouterr().out.strip())["delta"] == "6"


def test_value_lambda_validation(capsys):
    assert main(["value", "2", "3", "2", "--lambda", "1,2"]) == 2
    capsys.readouterr()
    assert main(["value", "2", "3", "2", "--method", "residue", "--lambda", "1,1,2"]) == 2


def test_value_closed_not_applicable(capsys):
    assert main(["value", "6", "5", "3", "--method", "closed"]) == 2
    assert "closed" in capsys.readouterr().err


def test_value_cross_check_disagreement_exits_3(capsys, monkeypatch):
    t = degree_mod.validate_triple(3, 4, 2)
    fake = DegreeResult(t, 11, Method.RESIDUE, 0.0)
    monkeypatch.setattr(degree_mod, "delta_residue", lambda *a, **k: fake)
    assert main(["value", "3", "4", "2", "--method", "theorem1", "--check"]) == 3
    assert "disagreement" in capsys.readouterr().err


def test_table_csv(capsys):
    assert main(["table", "3"]) == 0
    out = capsys.readouterr().out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "n", "r", "k", "l", "delta", "method"]
    data = {(row[0], row[2]): row[5] for row in rows[1:]}
    assert data[("2", "2")] == "6"  # (m=2, r=2)
    assert data[("3", "1")] == "4"  # (m=3, r=1)
    keys = [(int(row[2]), int(row[0])) for row in rows[1:]]
    assert keys == sorted(keys)  # ordered by (r, m)


def test_table_check_duality(capsys):
    assert main(["table", "4", "--check-duality"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 14  # header + 13 triples


def test_table_json_round_trips_csv(capsys):
    assert main(["table", "4", "--format", "json"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert len(records) == 13
    for rec in records:
        assert set(rec) == {"m", "n", "r", "k", "l", "delta", "method", "elapsed_ms"}
        assert isinstance(rec["delta"], str)
        assert int(rec["delta"]) >= 1
    assert main(["table", "4", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    json_data = [
        {key: str(rec[key]) for key in ("m", "n", "r", "k", "l", "delta", "method")}
        for rec in records
    ]
    assert rows == json_data


def test_table_invalid_n(capsys):
    assert main(["table", "1"]) == 2


def test_table_duality_violation_prints_no_table(capsys, monkeypatch):
    def fake_delta(t, **kwargs):
        return DegreeResult(t, t.m, Method.RESIDUE, 0.0)

    monkeypatch.setattr(cli, "delta", fake_delta)
    assert main(["table", "3", "--check-duality"]) == 3
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "duality violated" in captured.err


def test_table_respects_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("SDPDEG_THREADS", "3")
    assert main(["table", "4"]) == 0
    threaded = capsys.readouterr().out
    monkeypatch.setenv("SDPDEG_THREADS", "1")
    assert main(["table", "4"]) == 0
    assert capsys.readouterr().out == threaded
    monkeypatch.setenv("SDPDEG_THREADS", "nonsense")
    assert main(["table", "3"]) == 0


def test_verify_suites(capsys):
    assert main(["verify", "--suite", "lemma21", "--seed", "7"]) == 0
    assert "lemma21: 100/100 passed" in capsys.readouterr().out
    assert main(["verify", "--suite", "identities"]) == 0
    capsys.readouterr()
    assert main(["verify", "--suite", "cross-methods", "--max-n", "3"]) == 0
    assert "cross-methods" in capsys.readouterr().out


def test_verify_all_default(capsys):
    assert main(["verify", "--seed", "1", "--max-n", "3"]) == 0
    out = capsys.readouterr().out
    for name in ("lemma21", "prop22", "identities", "cross-methods"):
        assert name in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    import sdpdeg.verify as verify_mod

    def broken(seed=0, max_n=4):
        return verify_mod.SuiteReport("identities", 1, 1, "inputs: ...; values: 1 vs 2")

    monkeypatch.setitem(cli.SUITES, "identities", broken)
    assert main(["verify", "--suite", "identities"]) == 1
    captured = capsys.readouterr()
    assert "1/2 passed" in captured.out
    assert "counterexample" in captured.err
