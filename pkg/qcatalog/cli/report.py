"""Tables and the CSV/JSON report writers

Both formats are byte-reproducible: no timestamps, fixed column and key order, floats
rendered with 12 significant digits and LF line endings.
"""
import csv
import io
import json
import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np

from ..utils.random import prng_identifier
from ..version import ARTIFACT, __version__

__all__ = ["ARTIFACT", "Table", "Report", "format_value", "write_report"]

_logger = logging.getLogger(__name__)


@dataclass
class Table:
    name: str
    columns: List[str]
    rows: List[list] = field(default_factory=list)

    def add_row(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(f"Table {self.name} has {len(self.columns)} columns, got a row of {len(values)}.")
        self.rows.append(list(values))

    def column(self, name):
        k = self.columns.index(name)
        return [row[k] for row in self.rows]


@dataclass
class Report:
    """Result of one command: run metadata plus named tables."""

    command: str
    seed: int
    meta: Dict[str, Any] = field(default_factory=dict)
    tables: List[Table] = field(default_factory=list)
    prng: str = field(default_factory=prng_identifier)

    def add_table(self, table: Table):
        self.tables.append(table)
        return table

    def table(self, name):
        for t in self.tables:
            if t.name == name:
                return t
        raise KeyError(f"Report {self.command} has no table {name}")

    def header(self):
        head = {"artifact": ARTIFACT, "version": __version__, "command": self.command, "seed": self.seed}
        head["prng"] = self.prng
        head.update(self.meta)
        return head


def _plain(value):
    """Convert numpy scalars and fractions into JSON-ready values. Non-finite floats become null."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return None
        return float(format(float(value), ".12g"))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    return value


def format_value(value):
    """CSV text of one cell. Missing and non-finite values are empty."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return ""
        return format(float(value), ".12g")
    if isinstance(value, (list, tuple, np.ndarray)):
        return " ".join(format_value(v) for v in value)
    return str(value)


def _to_csv(report: Report):
    buf = io.StringIO()
    for key, value in report.header().items():
        buf.write(f"# {key}={format_value(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    for table in report.tables:
        buf.write(f"# table={table.name}\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _to_json(report: Report):
    doc = {
        "meta": {k: _plain(v) for k, v in report.header().items()},
        "tables": {t.name: {"columns": list(t.columns), "rows": [_plain(r) for r in t.rows]} for t in report.tables},
    }
    return json.dumps(doc, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_report(report: Report, fmt="csv", path=None):
    """Render ``report`` as ``csv`` or ``json``; write it to ``path`` when given.

    Returns:
        The rendered text.
    """
    if fmt == "csv":
        text = _to_csv(report)
    elif fmt == "json":
        text = _to_json(report)
    else:
        raise ValueError(f"Unsupported output format {fmt}, expected csv or json.")
    if path:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        _logger.info(f"Report is saved to {path}.")
    return text
