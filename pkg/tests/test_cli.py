import json
import subprocess
import sys

import pytest

from pmcubic.cli import MISMATCH, OK, RESOURCE, USAGE, main


def test_tables_match_golden(capsys):
    assert main(["tables", "table1", "table2"]) == OK
    out = capsys.readouterr()
    assert "253897473024" in out.out
    assert "matches golden values" in out.err


def test_tables_written_to_files(tmp_path):
    assert main(["tables", "--out", str(tmp_path), "--format", "json"]) == OK
    rows = json.loads((tmp_path / "table1.json").read_text())
    assert len(rows) == 10 and rows[-1]["T"] == 22201410
    rows = json.loads((tmp_path / "table2.json").read_text())
    assert len(rows) == 9
    names = {r["name"] for r in json.loads((tmp_path / "constants.json").read_text())}
    assert {"gamma", "delta"} <= names


def test_variant_reading_is_a_mismatch(capsys):
    assert main(["tables", "table2", "--variant-h-substitution", "--order", "10"]) == MISMATCH
    assert "row 8 expected [70875, 70560, 70560] got [60795, 60480, 60480]" in capsys.readouterr().err


def test_usage_and_resource_errors(capsys):
    assert main(["tables", "table9"]) == USAGE
    assert main(["verify", "--threads", "0"]) == USAGE
    assert main(["verify", "--max-n", "9"]) == RESOURCE
    assert main(["enumerate", "cubic", "5"]) == RESOURCE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_series_and_counts(capsys):
    assert main(["series", "M", "--order", "3", "--format", "csv"]) == OK
    assert capsys.readouterr().out == "n,coefficient\n0,0\n1,6\n2,54\n3,648\n"
    assert main(["series", "C", "--order", "8", "--format", "json"]) == OK
    assert json.loads(capsys.readouterr().out)[8]["labeled"] == 70560
    assert main(["series", "T1", "--order", "4", "--format", "json"]) == OK
    assert json.loads(capsys.readouterr().out)["order"] == 4
    assert main(["counts", "cubic", "--nmax", "2", "--format", "csv"]) == OK
    assert capsys.readouterr().out == "n,kind,value\n1,cubic,4\n2,cubic,32\n"


def test_enumerate_and_dump(tmp_path, capsys):
    path = tmp_path / "maps.jsonl"
    assert main(["enumerate", "cubic", "2", "--dump-maps", str(path), "--format", "json"]) == OK
    row = json.loads(capsys.readouterr().out)[0]
    assert (row["maps"], row["all"], row["bridgeless"], row["three_connected"]) == (32, 54, 18, 3)
    assert len(path.read_text().splitlines()) == 54
    gpath = tmp_path / "graphs.txt"
    assert main(["enumerate", "graphs", "4", "--dump-maps", str(gpath)]) == OK
    assert gpath.read_text().startswith("4 6\n1 2\n")


def test_ising_bijection_roots(capsys):
    assert main(["ising", "2", "--format", "json"]) == OK
    assert main(["bijection", "contract", "3"]) == OK
    assert main(["bijection", "flip", "3", "--seed", "7"]) == OK
    assert main(["roots", "--format", "json"]) == OK
    out = capsys.readouterr().out
    assert '"gamma"' in out


def test_verify_small_order_skips_rows(capsys):
    assert main(["verify", "--order", "10", "--max-n", "2", "--format", "json"]) == OK
    checks = json.loads(capsys.readouterr().out)
    statuses = {c["name"]: c["status"] for c in checks}
    assert statuses["table1 20 vertices"] == "pass"
    assert statuses["table2 n=12 (squared)"] == "skipped"
    assert statuses["map oracle 6 vertices"] == "skipped"
    assert all(c["status"] in ("pass", "skipped") for c in checks)


def test_verify_reports_first_disagreement(capsys):
    assert main(["verify", "--order", "10", "--max-n", "1", "--variant-h-substitution",
                 "--format", "json"]) == MISMATCH
    checks = json.loads(capsys.readouterr().out)
    info = [c for c in checks if c["name"] == "first disagreement of the two readings"]
    assert info[0]["got"] == [8, "G", 70875, 60795]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "pmcubic", "counts", "matched_cubic", "--nmax", "1",
                        "--format", "csv"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip().endswith("1,matched_cubic,6")
