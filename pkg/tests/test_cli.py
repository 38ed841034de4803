from __future__ import annotations

import json

from sqwu.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_norm(capsys):
    assert run(capsys, "norm", "Sq2 Sq2")[:2] == (0, "Sq3 Sq1\n")
    assert run(capsys, "norm", "Sq5")[:2] == (0, "Sq5\n")
    code, _, err = run(capsys, "norm", "Sq0")
    assert code == 2 and "position 0" in err


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "--m", "3", "--which", "3", "--json")
    data = json.loads(out)
    assert code == 0 and [r["dim"] for r in data["rows"]] == [1, 2, 3, 5, 7, 9, 13, 18, 23]
    code, out, _ = run(capsys, "tables", "--which", "4", "--json")
    assert [r["dim"] for r in json.loads(out)["rows"]] == [1, 0, 1, 0, 2, 0, 3, 1, 5]
    code, out, _ = run(capsys, "tables", "--m", "3", "--which", "1", "--json")
    first = json.loads(out)["rows"][0]
    assert first["j"] == 1 and first["basis"] == ["Sq13"] and json.loads(out)["m"] == 3


def test_tables_m2_conventions(capsys):
    code, out, _ = run(capsys, "tables", "--m", "2", "--which", "2", "--json")
    assert code == 0 and json.loads(out)["rows"][-1]["dim"] == 15
    code, out, _ = run(capsys, "tables", "--m", "2", "--which", "2", "--include-cube", "--json")
    row = json.loads(out)["rows"][-1]
    assert code == 0 and row["dim"] == 16 and row["basis"][-1].endswith("(nonstandard)")


def test_tables_mismatch_exit(capsys, monkeypatch):
    import sqwu.reproduce as rp

    monkeypatch.setitem(rp.TABLE1_DIMS, 4, 99)
    code, _, err = run(capsys, "tables", "--which", "1")
    assert code == 3 and "table 1, row 4" in err


def test_em_basis(capsys):
    code, out, _ = run(capsys, "em-basis", "--n", "12", "--deg", "13", "--json")
    assert code == 0 and json.loads(out)["basis"] == ["(Sq1 l)"]
    assert run(capsys, "em-basis", "--n", "2", "--deg", "80")[0] == 2


def test_verify_relations_and_out(capsys, tmp_path):
    out = tmp_path / "rel.json"
    code, text, _ = run(capsys, "verify", "relations", "--m", "3", "--out", str(out))
    assert code == 0 and text.startswith("suite relations: PASS")
    body = out.read_text()
    assert json.loads(body)["pass"] is True
    assert (tmp_path / "rel.json.meta.json").exists()
    run(capsys, "verify", "relations", "--m", "3", "--out", str(out))
    assert out.read_text() == body


def test_verify_wu_input(capsys):
    code, out, _ = run(capsys, "verify", "wu", "--input", "corpus/rp10.json", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert any(c["check"] == "wu.closed_form" and c["pass"] for c in data["checks"])


def test_wu_bad_inputs(capsys, tmp_path):
    assert run(capsys, "wu", "--input", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert run(capsys, "wu", "--input", str(bad))[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({"name": "b", "top": 2, "generators": [{"g": "x", "deg": 1}],
                                  "relations": [["x", "x", "x", 0]], "sq": {"x": {"1": "x*x"}},
                                  "fundamental": 0}))
    assert run(capsys, "wu", "--input", str(broken))[0] == 3


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"m": 4, "format": "json"}))
    code, out, _ = run(capsys, "tables", "--which", "1", "--config", str(cfg))
    assert code == 0 and json.loads(out)["m"] == 4
    code, out, _ = run(capsys, "tables", "--which", "1", "--config", str(cfg), "--m", "5")
    assert json.loads(out)["m"] == 5
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "tables", "--config", str(cfg))[0] == 2
    cfg.write_text(json.dumps({"m": 1}))
    assert run(capsys, "tables", "--config", str(cfg))[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "tables", "--which", "7")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2
    code, out, _ = run(capsys, "--version")
    assert code == 0 and out.startswith("sq ")
