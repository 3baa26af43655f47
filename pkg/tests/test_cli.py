"""Command line interface: JSON shapes, exit codes, and determinism."""

import json

from finetrop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_roots_json(capsys):
    code, out = run(capsys, "roots", "--hyperfield", "T",
                    "X^2 + (1, 3)")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["roots"]) == 1
    rec = doc["roots"][0]
    assert rec["root"] == ["1", "3/2"]
    assert rec["multiplicity"] == 2


def test_eval_phase(capsys):
    code, out = run(capsys, "eval", "--hyperfield", "P",
                    "X^2 + X + 1", "dir(-1, 1)")
    doc = json.loads(out)
    assert code == 0
    assert doc["contains_zero"] is True
    code, out = run(capsys, "eval", "--hyperfield", "P",
                    "X^2 + X + 1", "dir(1, 1)")
    assert json.loads(out)["contains_zero"] is False


def test_axioms_reports_stringency(capsys):
    code, out = run(capsys, "axioms", "--hyperfield", "W")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"
    assert doc["stringent"] is False
    code, out = run(capsys, "axioms", "--hyperfield", "S")
    assert json.loads(out)["stringent"] is True


def test_pushforward_and_tropicalize(capsys):
    code, out = run(capsys, "pushforward", "X + Y - 1")
    doc = json.loads(out)
    assert code == 0
    assert doc["hyperfield"] == "Qx|Q"
    code, out = run(capsys, "tropicalize", "X + Y - 1")
    assert json.loads(out)["hyperfield"] == "Kx|Q"


def test_intersect_stable(capsys):
    code, out = run(capsys, "intersect", "--hom", "fval", "--stable",
                    "X + Y - 1", "t*X + (1 + t^2)*Y + 1")
    doc = json.loads(out)
    assert code == 0
    assert doc["points"] == [[["2", "0"], ["-1", "0"]]]
    assert doc["components"] == []
    assert doc["stable"] == [["0", "0"]]


def test_homotopy_start_cli(capsys):
    code, out = run(capsys, "homotopy-start", "--field", "Qi",
                    "X^2 - Y", "Y + 1")
    doc = json.loads(out)
    assert code == 0
    assert doc["report"] == {"cells": 1, "mixed_volume": 2,
                             "start_solutions": 2}
    assert sorted(s[0][0] for s in doc["solutions"]) == ["-1i", "1i"]


def test_fine_curve_svg(capsys, tmp_path):
    out_file = tmp_path / "curve.svg"
    code, _ = run(capsys, "fine-curve", "--hyperfield", "T",
                  "--format", "svg", "--out", str(out_file),
                  "X + Y + (1, 0)")
    assert code == 0
    assert out_file.read_text().startswith("<svg")


def test_verify_multbound(capsys):
    code, out = run(capsys, "verify", "multbound", "--hyperfield", "TR",
                    "--trials", "10")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"


def test_parse_error_exit_code(capsys):
    code, out = run(capsys, "roots", "--hyperfield", "T", "X^2 +")
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "ParseError"


def test_determinism(capsys):
    args = ("intersect", "--hom", "fval", "--stable", "--seed", "3",
            "X + Y + 1", "t*X + (1 + t^2)*Y + 1")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second
