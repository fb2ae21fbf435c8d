#!/usr/bin/env python3
"""Utilities for compton-width (deterministic CSV/JSON artifacts)."""
from __future__ import annotations

import csv
import json
import math
import typing
from pathlib import Path

import numpy as np

from compton_width.constants import UNIT_NOTE
from compton_width.exception import DomainError


def format_float(value: float) -> str:
    """Format a float with 12 significant digits."""
    value = float(value)
    if value == 0.0:
        # normalizes -0
        return "0"
    return f"{value:.12g}"


def _round_for_json(data: typing.Any) -> typing.Any:
    if isinstance(data, dict):
        return {str(k): _round_for_json(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_round_for_json(v) for v in data]
    if isinstance(data, np.ndarray):
        return [_round_for_json(v) for v in data.tolist()]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        value = float(data)
        if not math.isfinite(value):
            return str(value)
        return float(format_float(value))
    return data


def write_json(path: str | Path, data: dict) -> Path:
    """Write a JSON artifact (UTF-8, sorted keys, 12 significant digits)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(_round_for_json(data), f, indent=4, sort_keys=True, ensure_ascii=False)
        f.write("\n")
    return path


def write_csv(
    path: str | Path,
    header: typing.Sequence[str],
    rows: typing.Iterable[typing.Sequence[float]],
    *,
    unit_note: str = UNIT_NOTE,
) -> Path:
    """Write a CSV artifact with a unit comment line and a header row."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(f"# units: {unit_note}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(v) for v in row])
    return path


def read_tabulated_csv(path: str | Path) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Read a tabulated momentum amplitude (header ``p,re,im``)."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File {path} does not exist.")
    with open(path, encoding="utf-8") as f:
        lines = [line for line in f if line.strip() and not line.startswith("#")]

    reader = csv.reader(lines)
    header = [h.strip() for h in next(reader)]
    if header != ["p", "re", "im"]:
        raise DomainError(f"Tabulated amplitude header must be 'p,re,im', got {header}")

    rows = [[float(v) for v in row] for row in reader if row]
    if len(rows) < 4:
        raise DomainError("Tabulated amplitude needs at least 4 rows.")
    table = np.array(rows)
    return table[:, 0], table[:, 1] + 1j * table[:, 2]
