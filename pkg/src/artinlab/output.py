"""Byte-deterministic CSV/JSON writers for census-lab records."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, is_dataclass
from pathlib import Path

from .census import CensusRow, LevelSetStat, MomentReport, TitchmarshResult
from .errors import OutputError

COLUMNS = {
    "census": ("q", "num_primitive", "max_abs", "normalized"),
    "levelsets": ("y", "w", "count", "nicolas_main", "lower_ref"),
    "moments": (
        "x",
        "y",
        "first_moment",
        "first_prediction",
        "second_central",
        "normalized_variance",
        "lambda_used",
    ),
    "titchmarsh": ("x", "sum", "ratio"),
}

_KINDS = {
    CensusRow: "census",
    LevelSetStat: "levelsets",
    MomentReport: "moments",
    TitchmarshResult: "titchmarsh",
}


def fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".12g")
    return str(value)


def header(kind: str, n_thresholds: int = 0) -> list[str]:
    cols = list(COLUMNS[kind])
    if kind == "census":
        cols += [f"exceeds_t{i + 1}" for i in range(n_thresholds)]
    return cols


def csv_text(records, kind: str | None = None, n_thresholds: int | None = None) -> str:
    records = list(records)
    if kind is None:
        if not records:
            raise ValueError("cannot infer the record kind of an empty list")
        kind = _KINDS[type(records[0])]
    if kind == "census" and n_thresholds is None:
        n_thresholds = len(records[0].exceeds) if records else 0
    if kind == "census":
        records = sorted(records, key=lambda r: r.q)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header(kind, n_thresholds or 0))
    for rec in records:
        row = [fmt(getattr(rec, col)) for col in COLUMNS[kind]]
        if kind == "census":
            row += [fmt(e) for e in rec.exceeds]
        writer.writerow(row)
    return buf.getvalue()


def _jsonable(obj):
    if is_dataclass(obj):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def json_text(payload) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"


def write_text(text: str, path) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc


def write_outputs(records, format: str, path, kind: str | None = None, n_thresholds=None) -> None:
    """Write ``records`` as ``csv`` or ``json`` to ``path``."""
    if format == "csv":
        write_text(csv_text(records, kind, n_thresholds), path)
    elif format == "json":
        write_text(json_text(records), path)
    else:
        raise ValueError(f"unknown output format {format!r}")
