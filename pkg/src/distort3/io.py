"""Point files: a ``dim=<d>`` CSV and an equivalent JSON object.

CSV::

    dim=2
    0,0
    1,0

JSON: ``{"dim": 2, "points": [[0, 0], [1, 0]]}``. Row order is the path order.
Values are written with 17 significant digits so a round trip is exact;
infinite values in reports are written as the string ``"inf"``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np


class PointFileError(ValueError):
    pass


def format_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(float(x), ".17g")


def json_real(x: float):
    """JSON-safe real: finite floats pass through, infinities become ``"inf"``."""
    x = float(x)
    return format_real(x) if math.isinf(x) else x


def dumps_csv(points) -> str:
    P = np.asarray(points, dtype=float)
    lines = [f"dim={P.shape[1]}"]
    lines += [",".join(format_real(v) for v in row) for row in P]
    return "\n".join(lines) + "\n"


def dumps_json(points) -> str:
    P = np.asarray(points, dtype=float)
    rows = ",\n    ".join("[" + ", ".join(format_real(v) for v in row) + "]" for row in P)
    return f'{{\n  "dim": {P.shape[1]},\n  "points": [\n    {rows}\n  ]\n}}\n'


def loads_csv(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("dim="):
        raise PointFileError("first line must be 'dim=<d>'")
    try:
        dim = int(lines[0].split("=", 1)[1])
    except ValueError as exc:
        raise PointFileError(f"bad dimension header {lines[0]!r}") from exc
    if dim < 1:
        raise PointFileError("dimension must be positive")
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            row = [float(v) for v in ln.split(",")]
        except ValueError as exc:
            raise PointFileError(f"line {lineno}: {exc}") from exc
        if len(row) != dim:
            raise PointFileError(f"line {lineno}: expected {dim} values, got {len(row)}")
        rows.append(row)
    return _finish(rows, dim)


def loads_json(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
        dim = int(obj["dim"])
        rows = [[float(v) for v in row] for row in obj["points"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise PointFileError(f"bad JSON point file: {exc}") from exc
    if any(len(r) != dim for r in rows):
        raise PointFileError(f"every point must have {dim} coordinates")
    return _finish(rows, dim)


def _finish(rows, dim: int) -> np.ndarray:
    P = np.array(rows, dtype=float).reshape(-1, dim)
    if not np.all(np.isfinite(P)):
        raise PointFileError("coordinates must be finite")
    return P


def _is_json(path: Path, text: str) -> bool:
    return path.suffix.lower() == ".json" or text.lstrip().startswith("{")


def read_points(path) -> np.ndarray:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise PointFileError(f"cannot read {path}: {exc}") from exc
    return loads_json(text) if _is_json(path, text) else loads_csv(text)


def write_points(path, points) -> None:
    path = Path(path)
    path.write_text(dumps_json(points) if path.suffix.lower() == ".json" else dumps_csv(points))
