import csv
import io
import json
import shutil
import subprocess
import sys

import pytest

from weakfano.audit import GOLDEN_DIR
from weakfano.cli import main
from weakfano.tables import TABLES


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("argv,code", [
    (["-g", "0", "-d", "8", "--cubic-section", "--no-4secant-line", "--no-7secant-conic"], 0),
    (["-g", "10", "-d", "11"], 1),
    (["-g", "0", "-d", "6", "--quadric-section"], 2),
    (["-g", "0", "-d", "6", "--quadric-section", "--has-4secant-line"], 1),
])
def test_classify_exit_codes(capsys, argv, code):
    assert run(capsys, "classify", *argv)[0] == code


def test_usage_errors(capsys):
    for argv in (["classify", "-g", "0"], ["classify", "-g", "0", "-d", "3", "--bogus"],
                 ["classify", "-g", "-1", "-d", "3"], ["table", "nope"],
                 ["classify", "-g", "0", "-d", "3", "--hyperplane", "--cubic-section"]):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 64
    capsys.readouterr()


def test_classify_json(capsys):
    _, out = run(capsys, "classify", "-g", "2", "-d", "8", "--format", "json")
    doc = json.loads(out)
    assert doc["verdict"] == "insufficient_data" and "containment" in doc["missing"]


@pytest.mark.parametrize("table_id", sorted(TABLES))
def test_tables_all_formats(capsys, table_id):
    _, js = run(capsys, "table", table_id, "--format", "json")
    rows = json.loads(js)
    _, cs = run(capsys, "table", table_id, "--format", "csv")
    assert list(csv.DictReader(io.StringIO(cs))) == rows
    _, txt = run(capsys, "table", table_id)
    assert len(txt.strip().splitlines()) >= len(rows)


def test_table_determinism(capsys):
    for fmt in ("text", "json"):
        a = run(capsys, "table", "obstructions", "--format", fmt)[1]
        b = run(capsys, "table", "obstructions", "--format", fmt)[1]
        assert a == b


def test_audit_passes_and_is_deterministic(capsys):
    c1, out1 = run(capsys, "audit")
    c2, out2 = run(capsys, "audit")
    assert c1 == 0 and out1 == out2
    assert "mismatch" not in out1


def test_tampered_golden_is_caught(capsys, tmp_path):
    d = tmp_path / "golden"
    shutil.copytree(GOLDEN_DIR, d)
    p = d / "B.txt"
    p.write_text(p.read_text(encoding="utf-8").replace("\n14 16\n", "\n14 17\n"), encoding="utf-8")
    code, out = run(capsys, "audit", "--golden-dir", str(d))
    assert code == 1
    assert "B: mismatch" in out and "17" in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "weakfano.cli", "classify", "-g", "0", "-d", "3"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "weak_fano" in r.stdout
