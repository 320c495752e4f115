import json

import pytest

from clustercol.config import InputError
from clustercol.generators import complete, fan, path
from clustercol.graph import from_edgelist, to_edgelist
from clustercol.harness import (
    Claim,
    SuiteConfig,
    SuiteReport,
    UnknownSuiteError,
    export,
    report_store,
    run_suite,
)
from clustercol.harness.cli import main


def test_export_edgelist(tmp_path):
    out = export(complete(3), "edgelist", tmp_path / "k3.txt")
    assert out.read_bytes() == b"3 3\n0 1\n0 2\n1 2\n"


def test_export_dot(tmp_path):
    text = export(path(2), "dot", tmp_path / "p2.dot").read_text()
    assert text.count("[label=") == 2 and text.count(" -- ") == 1


def test_export_errors(tmp_path):
    with pytest.raises(OSError):
        export(path(2), "edgelist", tmp_path / "missing" / "x.txt")
    with pytest.raises(InputError):
        export(path(2), "graphml", tmp_path / "x")


def test_report_store_schema(tmp_path):
    report = run_suite("thresholds")
    data = json.loads(report_store(report, tmp_path / "r.json").read_text(encoding="utf-8"))
    assert {"suite", "timestamp", "config", "claims"} <= set(data)
    assert set(data["config"]) == {"seed", "budgets"}
    fan_c2 = next(c for c in data["claims"] if c["id"] == "fan-c2")
    assert fan_c2 == {"id": "fan-c2", "paper_ref": "fan lower bound", "expected": "≥3", "observed": 3, "status": "pass"}
    assert [c["id"] for c in data["claims"]] == sorted(c["id"] for c in data["claims"])


def test_empty_report_passes(tmp_path):
    report = SuiteReport("empty", SuiteConfig().as_dict(), [])
    data = json.loads(report_store(report, tmp_path / "e.json").read_text())
    assert data["claims"] == [] and data["status"] == "pass"


def test_report_store_bad_path(tmp_path):
    with pytest.raises(OSError):
        report_store(SuiteReport("x", {}, []), tmp_path / "no" / "such" / "dir.json")


def test_indeterminate_is_not_failure():
    claims = [Claim("a", "x", "yes", "indeterminate", "indeterminate"), Claim("b", "x", "1", 1, "pass")]
    assert SuiteReport("s", {}, claims).ok
    assert not SuiteReport("s", {}, claims + [Claim("c", "x", "1", 2, "fail")]).ok


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("unknown")
    assert main(["suite", "unknown"]) == 2


def test_weakstrong_suite_passes():
    report = run_suite("weakstrong")
    assert report.ok and all(c.observed == "yes" for c in report.claims)


def _write(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(to_edgelist(g))
    return str(p)


def test_cli_gen_and_export(tmp_path, capsys):
    assert main(["gen", "fan", "--n", "6"]) == 0
    assert from_edgelist(capsys.readouterr().out) == fan(6)
    src = _write(tmp_path, "g.txt", fan(3))
    dst = tmp_path / "g.dot"
    assert main(["--format", "dot", "--out", str(dst), "export", "--graph", src]) == 0
    assert dst.read_text().startswith("graph G {")


def test_cli_colour_json(tmp_path, capsys):
    src = _write(tmp_path, "g.txt", fan(6))
    assert main(["colour", "--algo", "oracle", "--c", "2", "--graph", src]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["colours"] == 3 and out["clustering"] <= 2 and out["bound_check"] == "pass"
    assert main(["colour", "--algo", "two", "--k", "3", "--graph", src]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["colours"] <= 2 and "defect" in out


def test_cli_colour_witness(tmp_path, capsys):
    src = _write(tmp_path, "g.txt", path(6))
    assert main(["colour", "--algo", "weakclosure", "--h", "2", "--k", "1", "--graph", src]) == 0
    out = json.loads(capsys.readouterr().out)
    assert "witness" in out


def test_cli_colour_missing_parameter(tmp_path):
    src = _write(tmp_path, "g.txt", path(3))
    assert main(["colour", "--algo", "heart", "--graph", src]) == 2


def test_cli_verify(tmp_path, capsys):
    src = _write(tmp_path, "g.txt", path(3))
    col = tmp_path / "c.txt"
    col.write_text("0 0 1\n")
    assert main(["verify", "--graph", src, "--colouring", str(col), "--c", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["clustering"] == 2
    assert main(["verify", "--graph", src, "--colouring", str(col), "--c", "1"]) == 1


def test_cli_minor(tmp_path, capsys):
    host = _write(tmp_path, "h.txt", path(4))
    pat = _write(tmp_path, "p.txt", complete(3))
    assert main(["minor", "--host", host, "--pattern", pat]) == 0
    assert json.loads(capsys.readouterr().out) == {"result": "no", "model": None}
    pat = _write(tmp_path, "p2.txt", path(3))
    main(["minor", "--host", host, "--pattern", pat])
    assert json.loads(capsys.readouterr().out)["result"] == "yes"


def test_cli_minor_indeterminate(tmp_path, capsys):
    from clustercol.generators import random_graph

    host = _write(tmp_path, "h.txt", random_graph(11, 0.45, 1))
    pat = _write(tmp_path, "p.txt", complete(5))
    assert main(["--budget-nodes", "3", "minor", "--host", host, "--pattern", pat]) == 0
    assert json.loads(capsys.readouterr().out)["result"] == "indeterminate"


def test_cli_oracle(tmp_path, capsys):
    src = _write(tmp_path, "g.txt", complete(4))
    main(["oracle", "chromatic", "--graph", src])
    assert json.loads(capsys.readouterr().out)["colours"] == 4
    main(["oracle", "defect", "--d", "1", "--graph", src])
    assert json.loads(capsys.readouterr().out)["colours"] == 2


def test_cli_env_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("CLUSTERCOL_OUT", str(tmp_path / "env.txt"))
    assert main(["gen", "path", "--n", "3"]) == 0
    assert (tmp_path / "env.txt").read_text() == "3 2\n0 1\n1 2\n"


def test_cli_suite_exit_codes(tmp_path):
    assert main(["--out", str(tmp_path / "w.json"), "suite", "weakstrong"]) == 0
    assert json.loads((tmp_path / "w.json").read_text())["suite"] == "weakstrong"
    # the threshold suite records the single-vertex fat path at c = 1 as a failure
    assert main(["--out", str(tmp_path / "t.json"), "suite", "thresholds"]) == 1
