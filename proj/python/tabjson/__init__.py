"""Convert JSON to typed tables and back."""

import json

from ._core import (
    CsvError,
    JsonParseError,
    Value,
    diagnostics,
    from_json,
    read_csv,
    reformat,
    roundtrip,
    run_cli,
)
from . import _core

__all__ = [
    "CsvError",
    "JsonParseError",
    "Value",
    "diagnostics",
    "from_json",
    "lint",
    "read_csv",
    "reformat",
    "roundtrip",
    "run_cli",
]


def lint(documents, max_singleton_key_ratio=0.5, flag_numeric_keys=True):
    """Lint one JSON text or a list of them; returns the report as a dict."""
    if isinstance(documents, str):
        documents = [documents]
    report = _core.lint_report(list(documents), max_singleton_key_ratio, flag_numeric_keys)
    return json.loads(report)
