"""
Deterministic report output.

Floats are written with FLOAT_SIGNIFICANT_DIGITS significant digits so that
identical runs give byte-identical files. CSV output starts with a version
line so downstream tools can detect format changes.
"""

import csv
import io
import json
import math
import os
from typing import Any, Dict, Iterable, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel

from specgap.config import CSV_HEADER_VERSION, DATA_FOLDER, FLOAT_SIGNIFICANT_DIGITS


def format_float(x: float, digits: int = FLOAT_SIGNIFICANT_DIGITS) -> str:
    if math.isnan(x) or math.isinf(x):
        return str(x)
    text = f"{x:.{digits}g}"
    return "0" if text == "-0" else text


def round_floats(value: Any, digits: int = FLOAT_SIGNIFICANT_DIGITS) -> Any:
    """Recursively round every float in a JSON-like structure."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(format_float(value, digits))
    if isinstance(value, dict):
        return {k: round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, digits) for v in value]
    return value


def to_json_text(report: Any) -> str:
    """JSON text of a pydantic model (or plain data) with rounded floats."""
    data = report.model_dump(mode="json") if isinstance(report, BaseModel) else report
    return json.dumps(round_floats(data), indent=2, sort_keys=True) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    if isinstance(value, float):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


def to_csv_text(rows: Iterable[Dict[str, Any]], columns: Sequence[str]) -> str:
    """CSV text with a version line, the given columns and stable formatting."""
    buffer = io.StringIO()
    buffer.write(CSV_HEADER_VERSION + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buffer.getvalue()


def model_rows(models: Sequence[BaseModel], extra: Sequence[str] = ()) -> List[Dict[str, Any]]:
    """Dump models to dicts, adding the named properties (e.g. 'passed')."""
    rows = []
    for m in models:
        row = m.model_dump()
        for name in extra:
            row[name] = getattr(m, name)
        rows.append(row)
    return rows


def write_report(text: str, path: Optional[str] = None, name: str = "report") -> str:
    """
    Write report text as UTF-8.

    Args:
        text: Report content
        path: Destination; "-" means stdout, None means DATA_FOLDER/name

    Returns:
        Where the report went
    """
    if path == "-":
        print(text, end="")
        return "-"
    target = path or os.path.join(DATA_FOLDER, name)
    folder = os.path.dirname(target)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info(f"Report written to {target}")
    return target
