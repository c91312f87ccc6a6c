"""Tests for CSV/JSON export."""

import json

from goldbach3.app.schemas.counting import DeviationRow
from goldbach3.app.schemas.run import OutputFormat, RunConfig
from goldbach3.app.services import export_service


def _config(**fields) -> RunConfig:
    return RunConfig(command="count", n=9, seed=0, **fields)


def test_header_lines_are_reproducible(tmp_path):
    """Test the header carries version and sorted config, no paths, pool size or clocks."""
    config = _config(output=tmp_path / "out.csv", cache_dir=tmp_path / "cache", threads=3)
    lines = export_service.header_lines(config)

    assert lines[0] == "goldbach3 0.1.0"
    assert lines[1] == 'config: {"command":"count","n":9,"output_format":"csv","seed":0}'
    assert lines == export_service.header_lines(_config())


def test_export_csv():
    """Test CSV layout with comment header and fixed columns."""
    rows = [{"x": 10.0, "h": 1, "delta": 0.5, "argmax_y": 7.0, "argmax_l": 0}]
    document = export_service.export_rows(
        rows, _config(), OutputFormat.CSV, export_service.DISCREPANCY_COLUMNS
    )
    lines = document.splitlines()

    assert lines[0].startswith("# goldbach3")
    assert lines[1].startswith("# config: ")
    assert lines[2] == "x,h,delta,argmax_y,argmax_l"
    assert lines[3] == "10.0,1,0.5,7.0,0"


def test_export_csv_missing_and_bool_cells():
    """Test empty cells for None and lower-case booleans."""
    rows = [{"a": None, "b": True}]
    document = export_service.export_rows(rows, _config(), OutputFormat.CSV, ["a", "b", "c"])

    assert document.splitlines()[-1] == ",true,"


def test_export_csv_extra_trailer():
    """Test that extra values follow the rows as comment lines."""
    document = export_service.export_rows(
        [{"a": 1}], _config(), OutputFormat.CSV, extra={"aggregate": 2.5}
    )

    assert document.splitlines()[-1] == "# aggregate: 2.5"


def test_export_json_models():
    """Test JSON output of model rows with meta and extra members."""
    row = DeviationRow(
        n=9, q1=1, a1=0, q2=1, a2=0, q3=1, a3=0,
        j3=6.8, s3_lower=1.5, s3_upper=1.6, s3_mid=1.55,
        main=62.0, abs_dev=55.2, rel_dev=0.89,
    )  # fmt: skip
    document = json.loads(
        export_service.export_rows([row], _config(), OutputFormat.JSON, extra={"aggregate": 55.2})
    )

    assert document["meta"]["tool"] == "goldbach3"
    assert document["meta"]["config"]["n"] == 9
    assert document["aggregate"] == 55.2
    assert document["rows"][0]["j3"] == 6.8
    assert document["rows"][0]["sampled"] is False


def test_export_result_json():
    """Test single-result JSON keeps nesting under "result"."""
    document = json.loads(
        export_service.export_result(
            {"lower": 1.0, "cases": [{"p": 2}]}, _config(), OutputFormat.JSON
        )
    )

    assert document["result"]["cases"] == [{"p": 2}]
