"""Deterministic CSV and JSON table output."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class Table:
    columns: list[str]
    types: list[type]
    rows: list[tuple] = field(default_factory=list)

    def __post_init__(self):
        if len(self.columns) != len(self.types):
            raise ValueError("columns and types differ in length")


def format_value(value, kind: type) -> str:
    if kind is float:
        return format(float(value), ".17g")
    if kind is int:
        return str(int(value))
    return str(value)


def to_csv(tables: list[Table]) -> str:
    """Tables as CSV sections separated by one blank line."""
    buf = io.StringIO()
    for i, table in enumerate(tables):
        if i:
            buf.write("\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([format_value(v, t) for v, t in zip(row, table.types)])
    return buf.getvalue()


def parse_csv(text: str, type_sets: list[list[type]]) -> list[Table]:
    """Inverse of :func:`to_csv`, given the column types of each section."""
    sections = [s for s in text.split("\n\n") if s.strip()]
    if len(sections) != len(type_sets):
        raise ValueError(f"expected {len(type_sets)} CSV sections, found {len(sections)}")
    tables = []
    for section, types in zip(sections, type_sets):
        reader = csv.reader(io.StringIO(section))
        header = next(reader)
        rows = [tuple(t(v) for t, v in zip(types, rec)) for rec in reader]
        tables.append(Table(header, list(types), rows))
    return tables


def _json_value(value, kind: type):
    if kind is float:
        value = float(value)
        return value if math.isfinite(value) else None
    return kind(value)


def to_json(command: str, version: str, seed, parameters: dict, tables: dict[str, Table]) -> str:
    doc = {
        "meta": {
            "command": command,
            "schema_version": SCHEMA_VERSION,
            "version": version,
            "seed": seed,
            "parameters": parameters,
        }
    }
    for key, table in tables.items():
        doc[key] = [
            {c: _json_value(v, t) for c, v, t in zip(table.columns, row, table.types)} for row in table.rows
        ]
    return json.dumps(doc, indent=2) + "\n"
