import csv
import io
import json
from pathlib import Path

import pytest

from parabose.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_green_relations_suite_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "green-relations", "--order", "2", "--modes", "2",
                       "--cutoff", "6")
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass"
    assert {c["suite"] for c in rep["checks"]} == {"green-relations"}
    for c in rep["checks"]:
        assert set(c) == {"suite", "check_id", "anchor", "parameters", "status", "witness"}


def test_ideal_inclusions_suite_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ideal-inclusions", "--modes", "2", "--bound", "5")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "green-relations", "--order", "0"],
    ["verify", "--modes", "0"],
    ["verify", "--cutoff", "-1"],
    ["verify", "--bound", "0"],
    ["verify", "--suite", "nope"],
    ["dims", "--format", "xml"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_failing_check_exits_one(capsys, tmp_path):
    f = tmp_path / "rels.txt"
    f.write_text("# boson ccr does not hold at order 2\n[B1-, B1+] - I\n")
    code, out, _ = run(capsys, "verify", "--suite", "hopf-axioms", "--relators", str(f), "--modes", "1",
                       "--cutoff", "4")
    assert code == 1
    rep = json.loads(out)
    bad = [c for c in rep["checks"] if c["status"] == "fail"]
    assert len(bad) == 1 and bad[0]["suite"] == "custom-relators"
    assert bad[0]["witness"]


def test_custom_relators_pass(capsys, tmp_path):
    f = tmp_path / "rels.txt"
    f.write_text("<B1-, B1+, B2-> - 2 B2-\n<B1+, B2+, B1+>\n")
    code, out, _ = run(capsys, "verify", "--suite", "gamma2", "--relators", str(f), "--cutoff", "4")
    assert code == 0


def test_bad_relator_file(capsys, tmp_path):
    f = tmp_path / "rels.txt"
    f.write_text("B1+\n[B1+, \n")
    code, _, err = run(capsys, "verify", "--relators", str(f))
    assert code == 2
    assert "2:" in err
    code, _, err = run(capsys, "verify", "--relators", str(tmp_path / "missing.txt"))
    assert code == 2
    f.write_text("B3+\n")
    code, _, err = run(capsys, "verify", "--relators", str(f), "--modes", "2")
    assert code == 2


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "dims", "--out", str(tmp_path / "no" / "such" / "dir.csv"))
    assert code == 2


def test_csv_report(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "single-paraboson", "--format", "csv", "--order", "3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["check_id"] for r in rows] == ["norm-ratios", "lowering-coefficients"]
    params = json.loads(rows[0]["parameters"])
    assert params["ratios"][:3] == ["3/1", "2/1", "5/1"]


def test_matelem_single_mode_profile(capsys):
    code, out, _ = run(capsys, "matelem", "--order", "2", "--modes", "1", "--cutoff", "8", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "matelem_p2_m1_n8.csv").read_text()
    rows = list(csv.DictReader(io.StringIO(out)))
    for r in rows:
        assert r["ratio"] == r["expected_ratio"]
        assert r["lowering"] == r["expected_lowering"]
        assert "/" in r["ratio"]


def test_matelem_multimode_json(capsys):
    code, out, _ = run(capsys, "matelem", "--order", "2", "--modes", "2", "--cutoff", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["table"] == "matrix_elements"
    assert all(isinstance(x, str) and "/" in x for row in obj["rows"] for x in row[-1:])


def test_dims_boson_binomials(capsys):
    code, out, _ = run(capsys, "dims", "--order", "1", "--modes", "2", "--cutoff", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert rows == [[str(d), str(d + 1), str(d + 1)] for d in range(7)]


def test_tables_match_golden(capsys):
    for name, argv in [("dims_p2_m2_n4.csv", ["dims", "--order", "2", "--modes", "2", "--cutoff", "4"]),
                       ("gram_p2_m2_n4.csv", ["gram", "--order", "2", "--modes", "2", "--cutoff", "4"])]:
        code, out, _ = run(capsys, *argv, "--format", "csv")
        assert code == 0
        assert out == (GOLDEN / name).read_text()


def test_out_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        code, out, err = run(capsys, "gram", "--order", "3", "--modes", "2", "--cutoff", "3", "--out", str(p))
        assert code == 0 and out == ""
    assert a.read_bytes() == b.read_bytes()
