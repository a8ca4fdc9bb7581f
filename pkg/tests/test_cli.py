from __future__ import annotations

import csv
import io
import json
import re
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from symcy.cli import main
from symcy.fixtures import table_path

SCHEMA = json.loads(resources.files("symcy").joinpath("output.schema.json").read_text())
TABLE4 = str(table_path("table4.txt"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    record = json.loads(out)
    jsonschema.validate(record, SCHEMA)
    return record


def test_egyptian_json(capsys):
    rec = run_json(capsys, "egyptian")
    assert len(rec["rows"]) == 147
    assert rec["summary"]["counts"] == {"2": 108, "3": 33, "4": 5, "5": 1}
    assert rec["command"] == "egyptian" and rec["version"]


@pytest.mark.parametrize("n,count", [(4, 6), (5, 1), (9, 0)])
def test_egyptian_min_first(capsys, n, count):
    rec = run_json(capsys, "egyptian", "--min-first-denominator", str(n))
    assert len(rec["rows"]) == count


def test_egyptian_bad_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["egyptian", "--min-first-denominator", "x"])
    assert exc.value.code == 2


def test_classify_fermat(capsys):
    rec = run_json(capsys, "classify", "--fermat")
    assert len(rec["rows"]) == 101
    row = next(r for r in rec["rows"] if r["quad"] == [3, 7, 48, 336])
    assert (row["h12"], row["g"], row["order"]) == (281, 6, 48)


def test_classify_case2(capsys):
    rec = run_json(capsys, "classify", "--case2")
    weights = {tuple(r["weights"]) for r in rec["rows"]}
    assert {(1, 1, 2, 3, 7), (1, 1, 2, 6, 10), (5, 1, 2, 7, 15), (13, 1, 2, 10, 26),
            (7, 1, 2, 18, 28)} <= weights


def test_classify_case1_csv(capsys):
    code, out, _ = run(capsys, "classify", "--case1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["weights", "degree", "case"]
    assert len(rows) == 56


@pytest.mark.parametrize("argv", [["classify"], ["classify", "--fermat", "--case2"]])
def test_classify_mode_misuse(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_hodge_threefold(capsys):
    code, out, _ = run(capsys, "hodge", "14", "1", "1", "2", "3", "7")
    assert code == 0 and "(1,132,132,1)" in out
    rec = run_json(capsys, "hodge", "14", "1", "1", "2", "3", "7")
    assert rec["rows"][0]["hodge"] == [1, 132, 132, 1]
    assert rec["rows"][0]["kuranishi"] == 132


def test_hodge_curve(capsys):
    rec = run_json(capsys, "hodge", "14", "1", "2", "3")
    assert rec["rows"][0]["genus"] == 10
    assert rec["rows"][0]["hodge"] is None


@pytest.mark.parametrize("argv,fragment", [
    (["14", "2", "2", "2", "3", "7"], "CY-sum violation"),
    (["14", "1", "2", "3", "7"], "3 or 5 weights"),
    (["10", "1", "1", "7"], "not quasi-smooth"),
    (["0", "1", "1", "1"], "degree"),
])
def test_hodge_invalid(capsys, argv, fragment):
    code, _, err = run(capsys, "hodge", *argv)
    assert code == 3
    assert fragment in err


def test_decompose_worked_example(capsys):
    rec = run_json(capsys, "decompose", "1", "2", "3", "7")
    nonzero = {r["d"]: r["hodge"] for r in rec["rows"] if r["multiplicity"]}
    assert nonzero == {14: [1, 62, 62, 1], 7: [0, 60, 60, 0], 2: [0, 10, 10, 0]}
    assert rec["summary"]["total"] == [1, 132, 132, 1]


def test_decompose_rep_string(capsys):
    code, out, _ = run(capsys, "decompose", "7", "48", "112", "168")
    assert code == 0
    assert "rep: 12.(48,24,16,12,8,6,4,3,2)" in out


def test_decompose_quotient(capsys):
    rec = run_json(capsys, "decompose", "1", "2", "3", "7", "--quotient", "7")
    assert rec["summary"]["quotient"]["hodge"] == [0, 60, 60, 0]
    assert rec["summary"]["quotient"]["type"] == "(14,[2,1,2,3,7])"


@pytest.mark.parametrize("d", ["5", "14", "0"])
def test_decompose_bad_quotient(capsys, d):
    code, _, err = run(capsys, "decompose", "1", "2", "3", "7", "--quotient", d)
    assert code == 4 and "--quotient" in err


def test_decompose_invalid_type(capsys):
    code, _, err = run(capsys, "decompose", "2", "2", "3", "7")
    assert code == 3 and "CY-sum violation" in err


def test_verify_table4(capsys):
    rec = run_json(capsys, "verify", TABLE4)
    assert rec["summary"] == {"total": 72, "failed": 0}
    assert all(r["quasi_smooth"]["status"] == "QuasiSmooth" for r in rec["rows"])


def test_verify_failure(capsys, tmp_path):
    f = tmp_path / "rows.txt"
    f.write_text("# one bad row\n(2,1,2,3,7)\n")
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 1
    assert "sum" in out


def test_verify_empty(capsys, tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("")
    code, out, _ = run(capsys, "verify", str(f), "--format", "json")
    assert code == 0
    assert json.loads(out)["rows"] == []


@pytest.mark.parametrize("text,line", [
    ("(1,1,3,5,10)\n\n(1,1,3,5)\n", 3),
    ("# c\n(1,1,3,x,10)\n", 2),
])
def test_verify_parse_errors(capsys, tmp_path, text, line):
    f = tmp_path / "rows.txt"
    f.write_text(text)
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2
    assert f"line {line}" in err


def test_verify_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
    assert code == 2


def test_verify_accepts_bare_numbers(capsys, tmp_path):
    f = tmp_path / "rows.txt"
    f.write_text("1 1 3 5 10\n1, 1, 3, 7, 12  # trailing comment\n")
    code, out, _ = run(capsys, "verify", str(f), "--format", "json")
    assert code == 0
    assert len(json.loads(out)["rows"]) == 2


DIFF_COMMANDS = [
    ["egyptian", "--min-first-denominator", "3"],
    ["classify", "--case2"],
    ["classify", "--fermat"],
    ["hodge", "14", "1", "1", "2", "3", "7"],
    ["decompose", "1", "2", "3", "7"],
    ["verify", TABLE4],
]


def _numbers(text: str) -> list[int]:
    return [int(x) for x in re.findall(r"\d+", text)]


@pytest.mark.parametrize("argv", DIFF_COMMANDS, ids=lambda a: a[0])
def test_formats_carry_identical_rows(capsys, argv):
    _, text, _ = run(capsys, *argv)
    _, csv_out, _ = run(capsys, *argv, "--format", "csv")
    rec = run_json(capsys, *argv)
    table = list(csv.reader(io.StringIO(csv_out)))
    header, body = table[0], table[1:]
    assert len(body) == len(rec["rows"])
    text_lines = text.splitlines()[1:1 + len(body)]
    for cells, line, row in zip(body, text_lines, rec["rows"]):
        assert header == list(row)
        json_numbers = _numbers(json.dumps(list(row.values())))
        assert _numbers(",".join(cells)) == json_numbers
        assert _numbers(line) == json_numbers


def test_json_round_trips(capsys):
    rec = run_json(capsys, "decompose", "1", "2", "3", "7", "--quotient", "2")
    assert json.loads(json.dumps(rec)) == rec


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symcy", "hodge", "14", "1", "2", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "10" in proc.stdout
