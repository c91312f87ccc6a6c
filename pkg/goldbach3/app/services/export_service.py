"""CSV and JSON rendering of result rows with a reproducible header."""

import csv
import json
from collections.abc import Sequence
from io import StringIO
from typing import Any

from pydantic import BaseModel

from goldbach3.app.config import settings
from goldbach3.app.schemas.run import OutputFormat, RunConfig

COUNT_COLUMNS = [
    "n", "q1", "a1", "q2", "a2", "q3", "a3",
    "j3", "r3big", "r3", "w1", "w2", "w3", "w4",
    "s3_lower", "s3_upper", "main", "abs_dev", "rel_dev",
]  # fmt: skip
DEVIATION_COLUMNS = [
    "n", "q1", "a1", "q2", "a2", "q3", "a3",
    "j3", "s3_lower", "s3_upper", "s3_mid", "main", "abs_dev", "rel_dev", "sampled",
]  # fmt: skip
DISCREPANCY_COLUMNS = ["x", "h", "delta", "argmax_y", "argmax_l"]
ARC_COLUMNS = ["n", "R", "N", "j3", "j3_major", "j3_minor", "H_truncated", "main_term"]
SIEVE_COLUMNS = ["n", "Q", "H", "lhs", "rhs1", "rhs2", "ratio", "seed"]
SERIES_COLUMNS = ["lower", "upper", "finite_part", "pmax", "zero_reason"]


def header_lines(config: RunConfig) -> list[str]:
    """Tool version and compact sorted config; no timestamps."""
    return [
        f"{settings.app_name} {settings.app_version}",
        "config: " + json.dumps(config.header_dict(), sort_keys=True, separators=(",", ":")),
    ]


def _as_dict(row: BaseModel | dict[str, Any]) -> dict[str, Any]:
    if isinstance(row, BaseModel):
        return row.model_dump(mode="json")
    return row


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def export_rows(
    rows: Sequence[BaseModel | dict[str, Any]],
    config: RunConfig,
    export_format: OutputFormat,
    columns: list[str] | None = None,
    extra: dict[str, Any] | None = None,
) -> str:
    """Render rows in the specified format.

    Args:
        rows: Result models or plain dicts
        config: Resolved run configuration echoed into the header
        export_format: csv or json
        columns: CSV columns (missing keys become empty cells); defaults to
            the keys of the first row
        extra: Additional top-level JSON members (e.g. an aggregate); written
            as trailing comment lines in CSV

    Returns:
        The document as a string
    """
    dicts = [_as_dict(row) for row in rows]
    if export_format == OutputFormat.JSON:
        return _export_json(dicts, config, extra)
    if export_format == OutputFormat.CSV:
        return _export_csv(dicts, config, columns, extra)

    raise ValueError(f"Unsupported export format: {export_format}")


def export_result(
    result: BaseModel | dict[str, Any],
    config: RunConfig,
    export_format: OutputFormat,
    columns: list[str] | None = None,
) -> str:
    """Render a single result; JSON keeps nested members under "result"."""
    data = _as_dict(result)
    if export_format == OutputFormat.JSON:
        document = {"meta": _meta(config), "result": data}
        return json.dumps(document, indent=2) + "\n"
    return export_rows([data], config, export_format, columns)


def _meta(config: RunConfig) -> dict[str, Any]:
    return {
        "tool": settings.app_name,
        "version": settings.app_version,
        "config": config.header_dict(),
    }


def _export_json(
    rows: list[dict[str, Any]], config: RunConfig, extra: dict[str, Any] | None
) -> str:
    """Export rows as JSON."""
    document: dict[str, Any] = {"meta": _meta(config)}
    if extra:
        document.update(extra)
    document["rows"] = rows
    return json.dumps(document, indent=2) + "\n"


def _export_csv(
    rows: list[dict[str, Any]],
    config: RunConfig,
    columns: list[str] | None,
    extra: dict[str, Any] | None,
) -> str:
    """Export rows as CSV."""
    output = StringIO()
    for line in header_lines(config):
        output.write(f"# {line}\n")

    if columns is None:
        columns = list(rows[0]) if rows else []
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])

    for key, value in (extra or {}).items():
        output.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
    return output.getvalue()
