"""Exact 3-distortion of tame point sequences.

A tame sequence ``M_0, ..., M_n`` has consecutive distances at most 1 and
stands for a non-expanding embedding of the path ``{0, ..., n}``. Its
3-distortion is the largest ratio ``rho3(i, j, k) / Area(M_i, M_j, M_k)`` over
all index triples, where ``rho3(i, j, k) = (j - i) * (k - j) / 2``.

Evaluation is exhaustive. The vectorised engine handles one anchor ``i`` at a
time (all ``(j, k)`` pairs at once) and may spread anchors over threads; the
reduction order is fixed so the answer never depends on the thread count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .geometry import EPS_AREA, GeometryError, as_points, gram_area, sqnorm

EPS_TAME = 1e-9
MAX_EXACT_N = 1500


class TamenessError(GeometryError):
    """A consecutive gap exceeds 1; ``index`` is the first offending ``i`` (gap ``i -> i+1``)."""

    def __init__(self, index: int, gap: float):
        super().__init__(f"sequence is not tame: |M_{index} M_{index + 1}| = {gap!r} > 1")
        self.index = index
        self.gap = gap


class InsufficientPointsError(GeometryError):
    pass


class SizeLimitError(GeometryError):
    pass


@dataclass(frozen=True, eq=False)
class TameSequence:
    """Validated points ``M_0..M_n`` (rows of ``points``); build with :func:`check_tame`."""

    points: np.ndarray

    @property
    def n(self) -> int:
        return len(self.points) - 1

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def gaps(self) -> np.ndarray:
        return np.sqrt(sqnorm(np.diff(self.points, axis=0)))

    @property
    def max_gap(self) -> float:
        return float(self.gaps.max())

    def __len__(self) -> int:
        return len(self.points)

    def subsequence(self, start: int, stop: int) -> "TameSequence":
        """Contiguous run ``M_start..M_{stop-1}``, re-indexed from 0."""
        return check_tame(self.points[start:stop])


def check_tame(points, eps: float = EPS_TAME) -> TameSequence:
    """Validate ``points`` as a tame sequence (gaps <= 1 + eps, dimension >= 2)."""
    P = as_points(points)
    if len(P) < 2:
        raise InsufficientPointsError("a tame sequence needs at least 2 points")
    if P.shape[1] < 2:
        raise GeometryError("tame sequences live in dimension >= 2")
    gaps = np.sqrt(sqnorm(np.diff(P, axis=0)))
    bad = np.flatnonzero(gaps > 1.0 + eps)
    if bad.size:
        i = int(bad[0])
        raise TamenessError(i, float(gaps[i]))
    P = P.copy()
    P.setflags(write=False)
    return TameSequence(P)


def rho3(i: int, j: int, k: int) -> float:
    """Largest area a non-expanding embedding can give the triple ``i < j < k``."""
    if not i < j < k:
        raise ValueError(f"rho3 needs i < j < k, got ({i}, {j}, {k})")
    return (j - i) * (k - j) / 2


@dataclass(frozen=True)
class TripleDistortion:
    i: int
    j: int
    k: int
    rho3: float
    area: float
    value: float

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


@dataclass(frozen=True)
class DistortionReport:
    delta3: float
    worst: TripleDistortion
    triples_evaluated: int

    @property
    def finite(self) -> bool:
        return math.isfinite(self.delta3)


def _triple_value(rho: float, area: float, s2: float, eps: float = EPS_AREA) -> float:
    return math.inf if area < eps * s2 else rho / area


def triple_distortion(points, i: int, j: int, k: int) -> TripleDistortion:
    """Distortion term of a single triple, same arithmetic as the engine."""
    P = np.asarray(points, dtype=float)
    u = P[j] - P[i]
    v = P[k] - P[i]
    w = P[k] - P[j]
    uu, vv = float(sqnorm(u)), float(sqnorm(v))
    area = float(gram_area(u, v))
    rho = rho3(i, j, k)
    return TripleDistortion(i, j, k, rho, area, _triple_value(rho, area, max(uu, vv, float(sqnorm(w)))))


def _pairwise_sq(P: np.ndarray) -> np.ndarray:
    out = None
    for c in range(P.shape[1]):
        diff = P[None, :, c] - P[:, None, c]
        out = diff * diff if out is None else out + diff * diff
    return out


def _anchor_best(P: np.ndarray, D2: np.ndarray, i: int):
    """Best triple with first index ``i``: (value, j, k, area)."""
    U = P[i + 1 :] - P[i]
    m = len(U)
    uu = D2[i, i + 1 :]
    area = gram_area(U[:, None, :], U[None, :, :])
    s2 = np.maximum(np.maximum(uu[:, None], uu[None, :]), D2[i + 1 :, i + 1 :])
    gap = np.arange(1, m + 1)
    rho = (gap[:, None] * (gap[None, :] - gap[:, None])) / 2
    with np.errstate(divide="ignore", invalid="ignore"):
        val = rho / area
    val[area < EPS_AREA * s2] = np.inf
    val[np.tril_indices(m)] = -1.0
    flat = int(np.argmax(val))
    a, b = divmod(flat, m)
    return float(val[a, b]), i + 1 + a, i + 1 + b, float(area[a, b])


def _worker_count(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("DISTORT3_THREADS")
        threads = int(env) if env else min(os.cpu_count() or 1, 8)
    return max(1, int(threads))


def _as_array(seq) -> np.ndarray:
    return seq.points if isinstance(seq, TameSequence) else check_tame(seq).points


def delta3(seq, threads: int | None = None, allow_large: bool = False) -> DistortionReport:
    """Exhaustive 3-distortion of a tame sequence.

    Degenerate triples (area below ``1e-12 * longest_side**2``) count as
    ``math.inf``. Ties are broken towards the lexicographically smallest
    ``(i, j, k)``.

    Parameters
    ----------
    seq : TameSequence or array-like
        Points ``M_0..M_n``; raw arrays are validated with :func:`check_tame`.
    threads : int, optional
        Worker threads; defaults to ``$DISTORT3_THREADS`` or the CPU count.
    allow_large : bool
        Required when ``n > 1500``; the loop stays exhaustive either way.
    """
    P = _as_array(seq)
    N = len(P)
    if N < 3:
        raise InsufficientPointsError(f"delta3 needs at least 3 points, got {N}")
    if N - 1 > MAX_EXACT_N and not allow_large:
        raise SizeLimitError(f"n = {N - 1} exceeds {MAX_EXACT_N}; pass allow_large=True to run the O(n^3) loop")
    D2 = _pairwise_sq(P)
    anchors = range(N - 2)
    workers = min(_worker_count(threads), N - 2)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda i: _anchor_best(P, D2, i), anchors))
    else:
        results = [_anchor_best(P, D2, i) for i in anchors]
    best = None
    for i, (v, j, k, area) in zip(anchors, results):
        if best is None or v > best[0]:
            best = (v, i, j, k, area)
    v, i, j, k, area = best
    worst = TripleDistortion(i, j, k, rho3(i, j, k), area, v)
    return DistortionReport(v, worst, math.comb(N, 3))


def delta3_naive(seq) -> DistortionReport:
    """Plain triple loop; the independent reference for :func:`delta3`."""
    P = _as_array(seq)
    N = len(P)
    if N < 3:
        raise InsufficientPointsError(f"delta3 needs at least 3 points, got {N}")
    pts = [tuple(float(x) for x in row) for row in P]
    best = None
    count = 0
    for i in range(N):
        for j in range(i + 1, N):
            for k in range(j + 1, N):
                count += 1
                a, b, c = pts[i], pts[j], pts[k]
                u = [b[t] - a[t] for t in range(len(a))]
                v = [c[t] - a[t] for t in range(len(a))]
                w = [c[t] - b[t] for t in range(len(a))]
                uu = u[0] * u[0]
                vv = v[0] * v[0]
                ww = w[0] * w[0]
                for t in range(1, len(a)):
                    uu = uu + u[t] * u[t]
                    vv = vv + v[t] * v[t]
                    ww = ww + w[t] * w[t]
                g = None
                for p in range(len(a) - 1):
                    for q in range(p + 1, len(a)):
                        minor = u[p] * v[q] - u[q] * v[p]
                        g = minor * minor if g is None else g + minor * minor
                area = 0.5 * math.sqrt(g)
                rho = (j - i) * (k - j) / 2
                val = _triple_value(rho, area, max(uu, vv, ww))
                if best is None or val > best.value:
                    best = TripleDistortion(i, j, k, rho, area, val)
    return DistortionReport(best.value, best, count)


_COMBOS: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _combos(N: int):
    if N not in _COMBOS:
        idx = np.array(list(combinations(range(N), 3)), dtype=np.intp).reshape(-1, 3)
        _COMBOS[N] = (idx[:, 0], idx[:, 1], idx[:, 2])
    return _COMBOS[N]


def triple_terms(X) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """All triple terms of one or many equally sized sequences.

    ``X`` has shape ``(..., N, d)``. Returns ``(triples, rho, area, value)``
    where ``triples`` is ``(K, 3)`` in lexicographic order and the other arrays
    have shape ``(..., K)``. Meant for small ``N`` (batched property checks and
    the optimizer objective).
    """
    X = np.asarray(X, dtype=float)
    I, J, K = _combos(X.shape[-2])
    u = X[..., J, :] - X[..., I, :]
    v = X[..., K, :] - X[..., I, :]
    w = X[..., K, :] - X[..., J, :]
    uu, vv = sqnorm(u), sqnorm(v)
    area = gram_area(u, v)
    s2 = np.maximum(np.maximum(uu, vv), sqnorm(w))
    rho = ((J - I) * (K - J)) / 2
    with np.errstate(divide="ignore", invalid="ignore"):
        value = rho / area
    value = np.where(area < EPS_AREA * s2, np.inf, value)
    return np.stack([I, J, K], axis=1), np.broadcast_to(rho, area.shape), area, value


def delta3_batch(X) -> np.ndarray:
    """3-distortion of each sequence in a ``(B, N, d)`` stack (tameness not checked)."""
    return triple_terms(X)[3].max(axis=-1)
