import csv
import io
import json

import pytest

from kstable.cli import main, render_report, render_table, run_suite


def test_run_exit_codes(tmp_path, capsys):
    assert main(["run", "--type", "A1", "--suite", "hecke,stable", "--quiet"]) == 0
    assert main(["run", "--type", "A1", "--suite", "parabolic", "--quiet"]) == 1
    assert main(["run", "--type", "Z9", "--quiet"]) == 2
    assert main(["run", "--type", "A1", "--suite", "nope", "--quiet"]) == 2
    assert main(["export", "--type", "A1", "--table", "K", "--out", str(tmp_path / "missing" / "x.csv")]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["export", "--type", "A1", "--table", "nonsense"])
    assert exc.value.code == 2


def test_report_is_deterministic(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p, jobs in zip(paths, ["1", "2"]):
        main(["run", "--type", "A1", "--suite", "all", "--seed", "11", "--jobs", jobs, "--quiet", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()
    body = json.loads(paths[0].read_text())
    assert body["type"] == "A1" and "elapsed" not in paths[0].read_text()


def test_stable_suite_lists_the_A1_value():
    report = run_suite("A1", ["stable"], quiet=True)
    refs = [c.reference for c in report.checks]
    assert "stab₋(e)|_s = 1-q" in refs and report.ok


def test_restrictions_csv():
    text = render_table("A1", "restrictions-", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 3 and all(len(r) == 3 for r in rows)
    assert rows[1][2] == "1-q"
    assert text == render_table("A1", "restrictions-", "csv")


def test_K_json_is_unitriangular():
    body = json.loads(render_table("A2", "K", "json"))
    assert body["type"] == "A2" and body["basis"] == "K"
    rows = body["rows"]
    assert len(rows) == 6 and all(len(r["entries"]) == 6 for r in rows)
    for i, r in enumerate(rows):
        values = list(r["entries"].values())
        assert values[i] == "1"
        assert all(v == "0" for v in values[:i])


def test_latex_delimiters_balance():
    text = render_table("B2", "padic-a", "latex")
    assert text.count("{") == text.count("}")
    assert text.count("\\begin{array}") == text.count("\\end{array}") == 1
    report = render_report(run_suite("A1", ["parabolic"], quiet=True), "latex")
    assert report.count("{") == report.count("}")


def test_numeric_table_and_config(tmp_path, capsys):
    cfg = tmp_path / "k.cfg"
    cfg.write_text("type = A1\ntable = padic-a\ntau = omega1=3,q=4\n")
    assert main(["export", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert "27/32" in out
