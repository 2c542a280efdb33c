from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import List, Optional

from monoclass.errors import InputError

Rows = List[List[float]]


def _to_rows(data: object, source: str) -> Rows:
    if not isinstance(data, list) or not data:
        raise InputError(f"{source}: expected a non-empty list of rows")
    rows: Rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or not row:
            raise InputError(f"{source}: row {i} is not a non-empty list")
        try:
            values = [float(x) for x in row]
        except (TypeError, ValueError) as exc:
            raise InputError(f"{source}: row {i} has a non-numeric entry ({exc})") from exc
        if not all(math.isfinite(v) for v in values):
            raise InputError(f"{source}: row {i} has a non-finite entry")
        rows.append(values)
    width = len(rows[0])
    ragged = [i for i, row in enumerate(rows) if len(row) != width]
    if ragged:
        raise InputError(f"{source}: row {ragged[0]} has {len(rows[ragged[0]])} entries, expected {width}")
    return rows


def parse_rows(text: str, source: str = "input") -> Rows:
    """
    Rows of reals from JSON (an array of arrays) or CSV (one row per line,
    blank lines and lines starting with '#' skipped).
    """
    stripped = text.strip()
    if not stripped:
        raise InputError(f"{source}: empty input")
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
        return _to_rows(data, source)

    lines = [line for line in stripped.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    reader = csv.reader(io.StringIO("\n".join(lines)), skipinitialspace=True)
    return _to_rows([[cell for cell in row if cell.strip()] for row in reader], source)


def parse_matrix(text: str, source: str = "input") -> Rows:
    rows = parse_rows(text, source)
    if len(rows) != len(rows[0]):
        raise InputError(f"{source}: matrix is {len(rows)}×{len(rows[0])}, expected a square matrix")
    return rows


def parse_relation_rows(text: str, source: str = "input") -> Rows:
    """Graph spanning vectors in R^{2d}: x-part first, image part second."""
    rows = parse_rows(text, source)
    if len(rows[0]) % 2:
        raise InputError(f"{source}: relation rows need an even length 2d, got {len(rows[0])}")
    return rows


def read_source(inline: Optional[str], file: Optional[str]) -> tuple[str, str]:
    """Exactly one of an inline string or a file path; returns (text, source label)."""
    if (inline is None) == (file is None):
        raise InputError("give exactly one of --inline or --file")
    if inline is not None:
        return inline, "--inline"
    path = Path(file)  # type: ignore[arg-type]
    try:
        return path.read_text(encoding="utf-8"), str(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
