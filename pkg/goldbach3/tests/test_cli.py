"""Tests for the command-line front end."""

import json
import math

import pytest

from goldbach3.app.config import settings
from goldbach3.app.main import main


def _run(capsys, cache_dir, *argv):
    code = main([*argv, "--cache-dir", str(cache_dir)])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _csv_rows(text: str) -> list[list[str]]:
    return [line.split(",") for line in text.splitlines() if not line.startswith("#")]


def test_count_csv(capsys, cache_dir):
    """Test the count command output for n = 9."""
    code, out, _ = _run(capsys, cache_dir, "count", "--n", "9", "--pmax", "1000")
    header, row = _csv_rows(out)
    values = dict(zip(header, row))

    assert code == 0
    assert out.startswith("# goldbach3 0.1.0\n# config: ")
    assert float(values["j3"]) == pytest.approx(
        3 * math.log(2) ** 2 * math.log(5) + 6 * math.log(2) ** 2 * math.log(3) + math.log(3) ** 3
    )
    assert values["r3"] == "4"
    assert values["w3"] == "2"


def test_count_engines_agree(capsys, cache_dir):
    """Test that the both-engines mode succeeds."""
    code, out, _ = _run(
        capsys, cache_dir, "count", "--n", "501", "--q1", "4", "--a1", "1", "--engine", "both"
    )

    assert code == 0
    assert len(_csv_rows(out)) == 2


def test_output_is_deterministic(capsys, cache_dir):
    """Test that identical runs give identical bytes."""
    argv = ("deviation", "--n", "301", "--qmax", "3", "--pmax", "500", "--format", "json")
    _, first, _ = _run(capsys, cache_dir, *argv)
    _, second, _ = _run(capsys, cache_dir, *argv, "--threads", "1")

    assert first == second
    assert json.loads(first)["row_count"] == 4**3


def test_deviation_csv_columns(capsys, cache_dir):
    """Test that every deviation column is filled."""
    code, out, _ = _run(
        capsys, cache_dir, "deviation", "--n", "101", "--qmax", "2", "--pmax", "500"
    )
    header, *rows = _csv_rows(out)

    assert code == 0
    assert header == [
        "n", "q1", "a1", "q2", "a2", "q3", "a3",
        "j3", "s3_lower", "s3_upper", "s3_mid", "main", "abs_dev", "rel_dev", "sampled",
    ]  # fmt: skip
    assert len(rows) == 2**3
    assert all(cell != "" for row in rows for cell in row)


def test_series_json(capsys, cache_dir):
    """Test the series enclosure with a partial sum."""
    code, out, _ = _run(
        capsys, cache_dir, "series", "--n", "9", "--partial", "200", "--format", "json"
    )
    document = json.loads(out)

    assert code == 0
    assert document["result"]["lower"] == pytest.approx(1.5339, abs=1e-4)
    assert document["result"]["partial"]["Q"] == 200
    assert [case["label"] for case in document["result"]["cases"]] == ["B", "A"]


def test_series_enclosure_formats(capsys, cache_dir):
    """Test n = 9 in JSON and in the default CSV."""
    code, out, _ = _run(capsys, cache_dir, "series", "--n", "9", "--format", "json")
    result = json.loads(out)["result"]

    assert code == 0
    assert result["lower"] == pytest.approx(1.5339, abs=1e-4)
    assert result["upper"] == pytest.approx(1.5339, abs=1e-4)
    assert result["lower"] <= result["upper"]

    code, out, _ = _run(capsys, cache_dir, "series", "--n", "9")
    header, row = _csv_rows(out)
    values = dict(zip(header, row))

    assert code == 0
    assert float(values["lower"]) == result["lower"]
    assert float(values["upper"]) == result["upper"]


def test_series_zero_reason_csv(capsys, cache_dir):
    """Test that the zero reason is printed in CSV."""
    code, out, _ = _run(
        capsys, cache_dir, "series", "--n", "11", "--q1", "3", "--a1", "1", "--q2", "3", "--a2", "1"
    )
    header, row = _csv_rows(out)

    assert code == 0
    assert dict(zip(header, row))["zero_reason"] == "E_CASE(3)"


def test_admissible_check(capsys, cache_dir):
    """Test the verdict row for an inadmissible triple."""
    code, out, _ = _run(capsys, cache_dir, "admissible", "check", "--n", "10")
    header, row = _csv_rows(out)
    values = dict(zip(header, row))

    assert code == 0
    assert values["admissible"] == "false"
    assert values["reason"] == "P2_VANISHING(2)"


def test_admissible_construct(capsys, cache_dir):
    """Test the construction of a2 and a1."""
    code, out, _ = _run(
        capsys, cache_dir,
        "admissible", "construct", "--n", "101", "--q3", "15", "--a3", "2", "--q2", "10",
        "--q1", "6", "--format", "json",
    )  # fmt: skip
    row = json.loads(out)["rows"][0]

    assert code == 0
    assert row["a2"] == 1
    assert math.gcd(row["a1"], 6) == 1


def test_admissible_construct_even_n(capsys, cache_dir):
    """Test exit code 3 for an impossible request."""
    code, _, err = _run(
        capsys,
        cache_dir,
        "admissible",
        "construct",
        *("--n", "100", "--q3", "3", "--a3", "1", "--q2", "3"),
    )

    assert code == 3
    assert "even" in err


def test_invalid_constraint_exit_code(capsys, cache_dir):
    """Test exit code 2 naming the offending index."""
    code, out, err = _run(capsys, cache_dir, "count", "--n", "9", "--q2", "4", "--a2", "2")

    assert code == 2
    assert out == ""
    assert "a2" in err


def test_capacity_exit_code(capsys, cache_dir, monkeypatch):
    """Test exit code 4 when the table ceiling is exceeded."""
    monkeypatch.setattr(settings, "table_ceiling", 1000)
    code, _, err = _run(capsys, cache_dir, "tables", "--limit", "5000")

    assert code == 4
    assert "ceiling" in err


def test_tables_populates_cache(capsys, cache_dir):
    """Test that the tables command writes a cache file."""
    code, out, _ = _run(capsys, cache_dir, "tables", "--limit", "100")
    header, row = _csv_rows(out)

    assert code == 0
    assert dict(zip(header, row))["primes"] == "25"
    assert (cache_dir / "tables_100.g3tb").exists()


def test_discrepancy_bv(capsys, cache_dir):
    """Test the summed discrepancy trailer."""
    code, out, _ = _run(
        capsys, cache_dir, "discrepancy", "--x", "10", "--U", "2", "--format", "json"
    )
    document = json.loads(out)

    assert code == 0
    assert document["sum"] == pytest.approx(16 - math.log(6300))
    assert [row["h"] for row in document["rows"]] == [1, 2]


def test_discrepancy_real_x(capsys, cache_dir):
    """Test a non-integer x on a cold cache."""
    code, out, err = _run(
        capsys, cache_dir, "discrepancy", "--x", "10.5", "--h", "1", "--format", "json"
    )
    document = json.loads(out)
    (row,) = document["rows"]

    assert code == 0, err
    assert row["x"] == 10.5
    assert row["delta"] == pytest.approx(7 - math.log(60))
    assert row["argmax_y"] == 7.0


def test_ramanujan_rows(capsys, cache_dir):
    """Test b(q) and λ(q) rows."""
    code, out, _ = _run(
        capsys, cache_dir, "ramanujan", "--n", "9", "--qmax", "3", "--method", "crosscheck"
    )
    header, *rows = _csv_rows(out)

    assert code == 0
    assert header == ["q", "b_re", "b_im", "lam"]
    assert float(rows[2][1]) == pytest.approx(-2.0)


def test_arcs_command(capsys, cache_dir):
    """Test the arcs report row."""
    code, out, _ = _run(capsys, cache_dir, "arcs", "--n", "101", "--R", "2", "--pmax", "1000")
    header, row = _csv_rows(out)
    values = dict(zip(header, row))

    assert code == 0
    assert values["N"] == "203"
    split = float(values["j3_major"]) + float(values["j3_minor"])
    assert float(values["j3"]) == pytest.approx(split)


def test_sievecheck_commands(capsys, cache_dir):
    """Test the sieve ratio grid and Montgomery rows."""
    code, out, _ = _run(
        capsys, cache_dir, "sievecheck", "ratio", "--n", "200", "--Q", "5", "10", "--H", "2", "4"
    )
    assert code == 0
    assert len(_csv_rows(out)) == 1 + 4

    code, out, _ = _run(
        capsys,
        cache_dir,
        "sievecheck",
        "montgomery",
        *("--n", "100", "--d", "6", "10", "--format", "json"),
    )
    rows = json.loads(out)["rows"]
    assert code == 0
    assert all(row["lhs"] == pytest.approx(row["rhs"]) for row in rows)


def test_output_file(capsys, cache_dir, tmp_path):
    """Test writing to --output."""
    target = tmp_path / "out" / "series.csv"
    code, out, _ = _run(capsys, cache_dir, "series", "--n", "9", "--output", str(target))

    assert code == 0
    assert out == ""
    assert target.read_text().startswith("# goldbach3")


def test_count_small_n(capsys, cache_dir):
    """Test r3 for n = 7 and the all-zero row for n = 3."""
    code, out, _ = _run(capsys, cache_dir, "count", "--n", "7", "--pmax", "1000")
    header, row = _csv_rows(out)
    assert code == 0
    assert dict(zip(header, row))["r3"] == "3"

    code, out, _ = _run(capsys, cache_dir, "count", "--n", "3", "--pmax", "1000")
    header, row = _csv_rows(out)
    values = dict(zip(header, row))
    assert code == 0
    assert float(values["j3"]) == 0.0
    assert [values[key] for key in ("r3", "w1", "w2", "w3", "w4")] == ["0"] * 5


def test_count_rejects_zero_residue(capsys, cache_dir):
    """Test exit code 2 for gcd(a1, q1) = 2."""
    code, _, err = _run(capsys, cache_dir, "count", "--n", "7", "--q1", "2", "--a1", "0")

    assert code == 2
    assert "a1" in err


def test_admissible_construct_small(capsys, cache_dir):
    """Test a2 = 1 for n = 9 and the refusal for n = 8."""
    argv = ("admissible", "construct", "--q3", "3", "--a3", "1", "--q2", "6")
    code, out, _ = _run(capsys, cache_dir, *argv, "--n", "9", "--format", "json")
    assert code == 0
    assert json.loads(out)["rows"][0]["a2"] == 1

    code, _, _ = _run(capsys, cache_dir, *argv, "--n", "8")
    assert code == 3
