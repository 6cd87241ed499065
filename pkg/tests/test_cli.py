import json
import pathlib
import re

from foundry.cli import run as cli

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def test_check_exit_codes(capsys):
    assert cli(["check", str(CORPUS / "fol_basics.fol"), "--calculus", "fol"]) == 0
    capsys.readouterr()
    assert cli(["check", str(CORPUS / "girard.dtt"), "--calculus", "dtt"]) == 1
    out = capsys.readouterr().out
    assert "universe-error" in out and re.search(r"at \d+:\d+", out)


def test_missing_file_is_usage_error(capsys):
    assert cli(["check", "no_such_file.fol", "--calculus", "fol"]) == 2


def test_unknown_flag_is_usage_error():
    assert cli(["check", str(CORPUS / "fol_basics.fol"), "--calculus", "fol", "--zap"]) == 2


def test_eval_prints_final_value(capsys):
    code = cli(["eval", str(CORPUS / "nat_arith.dtt"), "--calculus", "dtt"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip().splitlines()[-1] == "12"


def test_cc_reports(capsys):
    assert cli(["cc", str(CORPUS / "cc_valid.fol")]) == 0
    capsys.readouterr()
    assert cli(["cc", str(CORPUS / "cc_notentailed.fol")]) == 1
    out = capsys.readouterr().out
    assert "not-entailed" in out and "partition" in out


def test_countermodel_exit_codes(capsys):
    assert cli(["countermodel", str(CORPUS / "cm_two_elements.fol"), "--max-size", "2"]) == 1
    capsys.readouterr()
    assert cli(["countermodel", str(CORPUS / "cm_classical_tautology.fol"), "--max-size", "3"]) == 0


def test_model_check(capsys):
    code = cli(["model-check", str(CORPUS / "geometry.model"), str(CORPUS / "geometry.formula")])
    assert code == 0


def test_json_report_idempotent(capsys):
    args = ["check", str(CORPUS / "add_comm.dtt"), "--calculus", "dtt", "--report", "json"]
    assert cli(args) == 0
    first = capsys.readouterr().out
    assert cli(args) == 0
    second = capsys.readouterr().out

    def strip_elapsed(s):
        doc = json.loads(s)
        doc.pop("elapsed_s")
        return json.dumps(doc, sort_keys=True)

    assert strip_elapsed(first) == strip_elapsed(second)
    doc = json.loads(first)
    assert doc["ok"] is True and doc["theorems_certified"] == 1
    # stable key order: serialization sorts keys
    assert first.index('"calculus"') < first.index('"commands"') < first.index('"file"')


def test_trace_flag(capsys):
    code = cli(["check", str(CORPUS / "fol_basics.fol"), "--calculus", "fol", "--trace"])
    out = capsys.readouterr().out
    assert code == 0
    assert "trace:" in out and "[Hyp]" in out


def test_diaconescu_via_cli(capsys):
    code = cli([
        "check", str(CORPUS / "diaconescu.hol"), "--calculus", "hol",
        "--axiom", "choice", "--axiom", "propext",
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "1 theorem(s) certified" in out


def test_countermodel_json_report(capsys):
    code = cli([
        "countermodel", str(CORPUS / "cm_no_empty_set.fol"),
        "--max-size", "3", "--report", "json",
    ])
    out = capsys.readouterr().out
    assert code == 1
    doc = json.loads(out)
    assert doc["found"] is True and "model" in doc


def test_model_check_json_report(capsys):
    code = cli([
        "model-check", str(CORPUS / "geometry.model"),
        str(CORPUS / "geometry.formula"), "--report", "json",
    ])
    out = capsys.readouterr().out
    assert code == 0 and json.loads(out)["holds"] is True
