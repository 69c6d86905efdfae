"""Scaling experiments: constructed curves, fixed-arc baseline, log-log fits."""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass

import numpy as np

from .construction import ConstructionParams, build_gamma
from .distortion import MAX_EXACT_N, SizeLimitError, check_tame, delta3
from .io import format_real


@dataclass(frozen=True)
class ScanRecord:
    m: int
    d: int
    n: int
    delta3: float
    ratio: float
    runtime_ms: int


SCAN_COLUMNS = ("m", "d", "n", "delta3", "ratio", "runtime_ms")


def fit_exponent(pairs) -> tuple[float, float]:
    """Least-squares slope of ``log(value)`` against ``log(n)`` and the residual norm."""
    pairs = [(float(n), float(v)) for n, v in pairs]
    if len(pairs) < 2:
        raise ValueError("need at least two (n, value) pairs")
    if any(not (n > 0 and v > 0) or math.isinf(v) for n, v in pairs):
        raise ValueError("fit needs positive finite n and values")
    x = np.log([p[0] for p in pairs])
    y = np.log([p[1] for p in pairs])
    if np.ptp(x) == 0:
        raise ValueError("need at least two distinct n")
    A = np.stack([x, np.ones_like(x)], axis=1)
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = float(np.linalg.norm(A @ coef - y))
    return float(coef[0]), resid


def scan(d: int, ms, allow_large: bool = False, threads: int | None = None) -> list[ScanRecord]:
    """Exact 3-distortion of ``Gamma(m, d)`` for each ``m``."""
    records = []
    for m in ms:
        params = ConstructionParams(int(m), int(d))
        if params.n > MAX_EXACT_N and not allow_large:
            raise SizeLimitError(f"m = {m}, d = {d} gives n = {params.n} > {MAX_EXACT_N}; use the override flag")
        t0 = time.perf_counter()
        report = delta3(build_gamma(params), threads=threads, allow_large=allow_large)
        ms_elapsed = int(round((time.perf_counter() - t0) * 1000))
        records.append(ScanRecord(params.m, params.d, params.n, report.delta3, report.delta3 / params.m, ms_elapsed))
    return records


def scan_slope(records) -> tuple[float, float]:
    return fit_exponent([(r.n, r.delta3) for r in records])


def records_to_csv(records, columns=SCAN_COLUMNS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in records:
        w.writerow([format_real(v) if isinstance(v, float) else v for v in (getattr(r, c) for c in columns)])
    return buf.getvalue()


@dataclass(frozen=True)
class FixedCurveBaseline:
    n: int
    opening: float
    delta3: float
    consecutive: float


def arc_points(n: int, opening: float = math.pi / 3) -> np.ndarray:
    """``n + 1`` points at unit arclength on a circular arc of angle ``opening`` and length ``n``."""
    R = n / opening
    t = np.arange(n + 1) / R
    return R * np.stack([np.cos(t), np.sin(t)], axis=1)


def baseline(n_list, opening: float = math.pi / 3) -> list[FixedCurveBaseline]:
    """One fixed arc shape sampled ever more finely: the distortion grows linearly."""
    out = []
    for n in n_list:
        if n < 3:
            raise ValueError("baseline needs n >= 3")
        if n > MAX_EXACT_N:
            raise SizeLimitError(f"n = {n} exceeds {MAX_EXACT_N}")
        P = arc_points(int(n), opening)
        R = n / opening
        # consecutive triple: chord 2R sin(1/2R) on both sides, angle pi - 1/R
        chord = 2 * R * math.sin(1 / (2 * R))
        consecutive = 1 / (chord * chord * math.sin(1 / R))
        out.append(FixedCurveBaseline(int(n), opening, delta3(check_tame(P)).delta3, consecutive))
    return out
