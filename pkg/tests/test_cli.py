import io
import json

import pytest

from gorgraph.cli import EXIT_CAP, EXIT_OK, EXIT_PARSE, main
from gorgraph.gorenstein import Verdict


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_classify_circulant_human():
    code, text = run("classify", "--circulant", "13:1,5")
    assert code == EXIT_OK
    assert "gorenstein=true" in text.splitlines()[2]


def test_classify_w2_but_not_gorenstein():
    code, text = run("classify", "--circulant", "8:1,2", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(text)
    assert d["components"][0]["w2"]["verdict"] is True
    assert d["components"][0]["gorenstein"] is False
    assert "failed clause: euler" in run("classify", "--circulant", "8:1,2")[1]


def test_classify_edges_file(tmp_path):
    f = tmp_path / "k2.txt"
    f.write_text("# a single edge\n0 1\n")
    code, text = run("classify", "--edges", str(f), "--format", "json")
    assert code == EXIT_OK
    assert Verdict.from_json(text).gorenstein


def test_classify_g6_and_csv():
    code, text = run("classify", "--g6", "Dhc", "--format", "csv")
    assert code == EXIT_OK
    header, row = text.strip().splitlines()
    assert header.startswith("component,shape,alpha")
    assert row.split(",")[1] == "complement-of-cycle(5)"


def test_json_output_round_trips():
    _, text = run("classify", "--circulant", "12:4,6", "--format", "json")
    v = Verdict.from_json(text)
    assert v.to_json(indent=2) + "\n" == text
    assert len(v.components) == 2  # gcd(12, 4, 6) = 2 copies


@pytest.mark.parametrize("argv", [
    ["classify", "--circulant", "13:1,x"],
    ["classify", "--g6", "!"],
    ["classify", "--circulant", "7:1,2", "--char", "4"],
    ["classify"],
    ["survey", "--family", "sextic"],
])
def test_parse_errors_exit_2(argv, capsys):
    # argparse errors exit directly, input errors come back as a return code
    try:
        code = main(argv, io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_PARSE


def test_missing_edge_file_is_parse_error(tmp_path):
    assert run("classify", "--edges", str(tmp_path / "nope.txt"))[0] == EXIT_PARSE


def test_cap_violation_exits_3():
    assert run("classify", "--circulant", "30:1,2", "--cap", "20")[0] == EXIT_CAP
    assert run("classify", "--circulant", "30:1,2", "--cap", "30")[0] == EXIT_OK


def test_survey_csv():
    code, text = run("survey", "--family", "band", "--max-n", "9")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "n,a,b,prediction,wellCovered,w2,cm,eulerOk,linkOk,gorenstein,match,millis"
    assert all(line.split(",")[10] == "true" for line in lines[1:])


def test_survey_jsonl_and_human():
    code, text = run("survey", "--family", "cubic", "--max-n", "10", "--format", "json")
    assert code == EXIT_OK
    recs = [json.loads(x) for x in text.splitlines()]
    assert recs and all(r["match"] for r in recs)
    code, text = run("survey", "--family", "quartic", "--max-n", "8", "--format", "human")
    assert code == EXIT_OK and "MISMATCH" not in text


def test_sqc_reports():
    code, text = run("sqc", "--g6", "Dhc")
    assert code == EXIT_OK
    assert "basic 5-cycle" in text and "cross-check agree" in text
    _, text = run("sqc", "--circulant", "7:1")
    assert text == "not SQC\n"
    _, text = run("sqc", "--circulant", "4:1,2", "--format", "json")
    d = json.loads(text)
    assert d["sqc"] and d["gorenstein"] is False and d["agree"]


def test_sqc_on_path(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("0 1\n1 2\n2 3\n")
    code, text = run("sqc", "--edges", str(f), "--format", "csv")
    assert code == EXIT_OK
    assert text.splitlines()[1] == "true,2,0,0,false,false,true"


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("GORGRAPH_CIRCULANT", "13:2,3")
    monkeypatch.setenv("GORGRAPH_FORMAT", "json")
    code, text = run("classify")
    assert code == EXIT_OK and json.loads(text)["char"] == "all"
    # the flag wins over the environment
    _, text = run("classify", "--format", "human")
    assert text.startswith("graph: n=13")


def test_reports_are_byte_identical():
    for argv in (["classify", "--circulant", "14:1,4", "--format", "json"],
                 ["classify", "--circulant", "9:1,3"],
                 ["sqc", "--circulant", "10:5"]):
        assert run(*argv) == run(*argv)
