"""
Utils package for specgap.

- from specgap.utils import format_float, to_json_text, to_csv_text, write_report
"""

from .reporting import (
    format_float,
    model_rows,
    round_floats,
    to_csv_text,
    to_json_text,
    write_report,
)

__all__ = [
    # Reporting
    "format_float",
    "round_floats",
    "to_json_text",
    "to_csv_text",
    "model_rows",
    "write_report",
]
