import csv
import io
import json

import pytest

from bismash.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_indicators_dimension_two_census(capsys):
    code, out, err = run_cli(capsys, "indicators", "--n", "12", "--t", "2")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 24
    weighted = {"1": 0, "-1": 0, "0": 0}
    for row in rows:
        weighted[row["indicator"]] += int(row["t"])
    assert weighted == {"1": 30, "-1": 2, "0": 16}
    assert "+1=30 -1=2 0=16" in err


def test_indicators_degree_two(capsys):
    code, out, _err = run_cli(capsys, "indicators", "--n", "2")
    assert code == 0
    rows = parse_csv(out)
    assert [row["indicator"] for row in rows] == ["1", "1"]


def test_indicators_rejects_bad_degree(capsys):
    code, _out, err = run_cli(capsys, "indicators", "--n", "0")
    assert code == 1 and "usage error" in err
    code, _out, _err = run_cli(capsys, "indicators", "--n", "12", "--t", "5")
    assert code == 1


def test_indicators_workload_guard(capsys):
    code, _out, err = run_cli(
        capsys, "indicators", "--n", "12", "--t", "12", "--max-work", "1000"
    )
    assert code == 2 and "workload" in err


def test_count_stabilizer_census(capsys):
    code, out, _err = run_cli(capsys, "count", "--n", "12", "--quantity", "M")
    assert code == 0
    rows = parse_csv(out)
    got = {int(r["t"]): int(r["value"]) for r in rows}
    assert got[1] == 4 and got[2] == 8 and got[3] == 60
    assert got[6] == 3768 and got[4] == 312
    assert sum(got.values()) == 39916800


def test_count_dimension_two(capsys):
    code, out, _err = run_cli(capsys, "count", "--n", "36", "--quantity", "It2")
    assert code == 0
    rows = parse_csv(out)
    vals = {r["quantity"]: int(r["value"]) for r in rows}
    assert vals["It2_minus"] == 8
    code, _out, err = run_cli(capsys, "count", "--n", "35", "--quantity", "It2")
    assert code == 1 and "even" in err


def test_count_quantities_cover_tower(capsys):
    for q in ("T", "R", "X", "O"):
        code, out, _err = run_cli(capsys, "count", "--n", "8", "--quantity", q)
        assert code == 0
        assert parse_csv(out)
    code, out, _err = run_cli(
        capsys, "count", "--n", "12", "--quantity", "Oj", "--t", "3"
    )
    assert code == 0
    rows = parse_csv(out)
    assert {(r["r"], r["j"]) for r in rows} == {
        (str(r), str(j)) for r in (1, 2, 3) for j in (1, 3)
    }
    code, out, _err = run_cli(capsys, "count", "--n", "9", "--quantity", "Iplus")
    assert code == 0
    code, _out, _err = run_cli(
        capsys, "count", "--n", "8", "--quantity", "Iplus", "--t", "2"
    )
    assert code == 1  # even dimension has no odd-dimension census


def test_count_ratios(capsys):
    code, out, _err = run_cli(
        capsys, "count", "--n", "2", "--quantity", "ratios", "--t", "1",
        "--m-max", "6",
    )
    assert code == 0
    rows = parse_csv(out)
    names = {r["quantity"] for r in rows}
    assert {"ratio_nonzero", "t_over_m", "m_over_inv", "e_size"} <= names


def test_csv_json_equivalence(tmp_path, capsys):
    code, out_csv, _ = run_cli(capsys, "count", "--n", "12", "--quantity", "M")
    assert code == 0
    code, out_json, _ = run_cli(
        capsys, "count", "--n", "12", "--quantity", "M", "--format", "json"
    )
    assert code == 0
    csv_rows = parse_csv(out_csv)
    json_rows = json.loads(out_json)
    assert len(csv_rows) == len(json_rows)
    for a, b in zip(csv_rows, json_rows):
        assert a == {k: str(v) for k, v in b.items()}


def test_output_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "indicators", "--n", "10", "--t", "2")
    _, out2, _ = run_cli(capsys, "indicators", "--n", "10", "--t", "2")
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli(
        capsys, "count", "--n", "6", "--quantity", "T", "--out", str(target)
    )
    assert code == 0 and out == ""
    rows = parse_csv(target.read_text())
    assert {int(r["t"]): int(r["value"]) for r in rows} == {1: 2, 2: 2, 3: 4, 6: 18}


def test_verify_small_degree(capsys):
    code, out, _err = run_cli(capsys, "verify", "--n", "6")
    assert code == 0
    rows = parse_csv(out)
    assert all(r["status"] == "PASS" for r in rows)
    names = {r["check"] for r in rows}
    assert "indicator_oracle_equivalence" in names
    assert "hopf_antipode n=4" in names
    assert "I_t2" in names


def test_verify_rejects_degree_one(capsys):
    code, _out, _err = run_cli(capsys, "verify", "--n", "1")
    assert code == 1


def test_verify_workload_guard(capsys):
    code, _out, err = run_cli(capsys, "verify", "--n", "13")
    assert code == 2 and "workload" in err


def test_unknown_quantity_rejected(capsys):
    code, _out, _err = run_cli(capsys, "count", "--n", "8", "--quantity", "Z")
    assert code == 1
