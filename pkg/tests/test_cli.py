import csv
import io
import json
from dataclasses import replace

import pytest

from bnverify.cli import CSV_COLUMNS, ConfigError, SuiteConfig, exit_status, main, run_suite


def test_list_checks(capsys):
    assert main(["list-checks"]) == 0
    names = [line.split("\t")[0] for line in capsys.readouterr().out.splitlines()]
    assert "theorem1" in names and "counterexample" in names and "eq12" in names


def test_empty_checks_is_config_error(capsys):
    assert main(["verify", "--checks", ""]) != 0
    assert "config error" in capsys.readouterr().err
    with pytest.raises(ConfigError):
        SuiteConfig(checks=())
    with pytest.raises(ConfigError):
        SuiteConfig(checks=("nope",))
    with pytest.raises(ConfigError):
        SuiteConfig(trials=0)


def test_bad_config_file(tmp_path, capsys):
    bad = tmp_path / "cfg.json"
    bad.write_text("{not json")
    assert main(["verify", "--config", str(bad)]) == 2
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 2
    bad.write_text(json.dumps({"generator": {"unknown_field": 1}}))
    assert main(["verify", "--config", str(bad)]) == 2


def test_verify_writes_reports(tmp_path, capsys):
    out = tmp_path / "run"
    code = main(["verify", "--checks", "theorem1,counterexample,ABC", "--trials", "15",
                 "--out", str(out), "--format", "jsonl"])
    assert code == 0
    lines = (tmp_path / "run.jsonl").read_text().splitlines()
    assert list(json.loads(lines[0])) == ["timestamp"]
    header = json.loads(lines[1])["header"]
    assert header["config"]["trials"] == 15 and header["version"]
    records = [json.loads(x) for x in lines[2:-1]]
    assert len(records) == 15 + 1 + 15
    keys = {"check", "seed", "index", "lhs", "rhs", "margin", "status", "nodes", "instance"}
    for r in records:
        assert keys <= set(r)
        assert set(r["instance"]) == {"n", "lambda", "alpha", "delta", "R", "p", "poly_digest"}
    assert [r["check"] for r in records] == ["theorem1"] * 15 + ["counterexample"] + ["ABC"] * 15
    cx = records[15]
    assert abs(cx["lhs"]) < 1e-10 and abs(cx["rhs"] - 8) < 1e-10
    rows = list(csv.DictReader(io.StringIO((tmp_path / "run.csv").read_text())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert [r["check_name"] for r in rows] == ["theorem1", "counterexample", "ABC"]
    # stdout carries the same body as the file, minus the timestamp line
    assert capsys.readouterr().out.splitlines() == lines[1:]


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"checks": ["C2"], "trials": 50,
                               "generator": {"master_seed": 1}}))
    assert main(["verify", "--config", str(cfg), "--trials", "3", "--seed", "7",
                 "--format", "jsonl"]) == 0
    lines = capsys.readouterr().out.splitlines()
    conf = json.loads(lines[0])["header"]["config"]
    assert conf["trials"] == 3 and conf["checks"] == ["C2"]
    assert conf["generator"]["master_seed"] == 7
    assert len(lines) == 1 + 3 + 1


def test_workers_give_identical_body():
    base = SuiteConfig(checks=("theorem1", "lemma5", "eq7"), trials=12)
    a = run_suite(base)
    b = run_suite(replace(base, workers=3))
    assert a.jsonl_body == b.jsonl_body
    assert a.status == b.status == 0


def test_exit_status_rule():
    rows = [{"fail": 0, "uncertified": 2}]
    assert exit_status(rows, 2) == 0
    assert exit_status(rows, 1) == 1
    assert exit_status([{"fail": 1, "uncertified": 0}], 10) == 1


def test_rejections_are_not_failures():
    res = run_suite(SuiteConfig(checks=("TheoremB",), trials=30))
    row = res.rows[0]
    assert row["rejected"] > 0 and row["fail"] == 0
    assert row["pass"] + row["equality"] + row["rejected"] + row["excluded"] == 30


def test_subcommands(capsys):
    assert main(["counterexample", "--n", "4", "--lambda", "0,1,0", "--R", "2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["modulus_composite_of_star"] < 1e-10
    assert abs(rep["modulus_star_of_composite"] - 8) < 1e-10
    assert main(["norms", "--coeffs", "1,1", "--p", "1,2"]) == 0
    norms = json.loads(capsys.readouterr().out)["norms"]
    assert abs(norms["2"]["value"] - 2 ** 0.5) < 1e-12
    assert main(["sharpness", "--n", "2", "--p", "2", "--phases", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["max_gap"] <= 1e-9
