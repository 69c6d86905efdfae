"""Numerical search for tame sequences of small 3-distortion.

Sequences are charted modulo rigid motions: ``M_0`` is the origin, the first
edge points along the first axis, and each later edge direction is obtained
from the previous one by a turn given in hyperspherical angles (a single signed
turn angle in the plane). Edge lengths live in ``(0, 1]``.

The search is multi-start Nelder-Mead on a temperature-smoothed maximum,
followed by exact-maximum stages. Results only ever give upper estimates of
the optimal 3-distortion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np
from scipy.optimize import minimize

from .distortion import TameSequence, check_tame, delta3, delta3_batch, triple_terms
from .geometry import gram_area

MIN_LENGTH = 1e-3
AREA_FLOOR = 1e-300
DEFAULT_SCHEDULE = (0.1, 0.01, 0.0)


@dataclass(frozen=True)
class EmbeddingParams:
    """``edge_lengths`` has n entries; ``turn_angles`` has shape ``(n - 1, d - 1)``."""

    edge_lengths: np.ndarray
    turn_angles: np.ndarray

    def __post_init__(self):
        lengths = np.asarray(self.edge_lengths, dtype=float).ravel()
        turns = np.asarray(self.turn_angles, dtype=float)
        if turns.ndim == 1:
            turns = turns[:, None]
        if lengths.size < 1:
            raise ValueError("need at least one edge")
        if np.any(lengths <= 0) or np.any(lengths > 1):
            raise ValueError("edge lengths must lie in (0, 1]")
        if turns.shape[0] != lengths.size - 1:
            raise ValueError(f"expected {lengths.size - 1} turns, got {turns.shape[0]}")
        if not np.all(np.isfinite(turns)):
            raise ValueError("turn angles must be finite")
        object.__setattr__(self, "edge_lengths", lengths)
        object.__setattr__(self, "turn_angles", turns)

    @property
    def n(self) -> int:
        return self.edge_lengths.size


def spherical(angles: np.ndarray) -> np.ndarray:
    """Unit vector from hyperspherical angles; ``(cos a, sin a)`` for one angle."""
    angles = np.asarray(angles, dtype=float)
    d = angles.shape[-1] + 1
    out = np.empty(angles.shape[:-1] + (d,))
    sin_prod = np.ones(angles.shape[:-1])
    for c in range(d - 1):
        out[..., c] = sin_prod * np.cos(angles[..., c])
        sin_prod = sin_prod * np.sin(angles[..., c])
    out[..., d - 1] = sin_prod
    return out


def _rotation_from_e1(v: np.ndarray) -> np.ndarray:
    """Rotation in the plane of ``e1`` and ``v`` carrying ``e1`` to ``v``."""
    d = v.size
    e1 = np.zeros(d)
    e1[0] = 1.0
    w = v - v[0] * e1
    s = math.sqrt(float(w @ w))
    R = np.eye(d)
    if s < 1e-15:
        if v[0] > 0:
            return R
        w, s = np.eye(d)[1], 0.0
    else:
        w = w / s
    c = float(v[0])
    R += (c - 1.0) * (np.outer(e1, e1) + np.outer(w, w)) + s * (np.outer(w, e1) - np.outer(e1, w))
    return R


def _directions(turns: np.ndarray) -> np.ndarray:
    n1, k = turns.shape
    d = k + 1
    if d == 2:
        theta = np.concatenate([[0.0], np.cumsum(turns[:, 0])])
        return np.stack([np.cos(theta), np.sin(theta)], axis=1)
    frame = np.eye(d)
    dirs = [frame[:, 0].copy()]
    for local in spherical(turns):
        dirs.append(frame @ local)
        frame = frame @ _rotation_from_e1(local)
    return np.array(dirs)


def decode_points(lengths: np.ndarray, turns: np.ndarray) -> np.ndarray:
    dirs = _directions(turns)
    return np.concatenate([np.zeros((1, dirs.shape[1])), np.cumsum(lengths[:, None] * dirs, axis=0)])


def decode(params: EmbeddingParams, d: int | None = None) -> TameSequence:
    """Turn gauge-fixed lengths and turn angles into points."""
    if d is not None and params.turn_angles.shape[1] != d - 1:
        raise ValueError(f"turn angles encode dimension {params.turn_angles.shape[1] + 1}, not {d}")
    return check_tame(decode_points(params.edge_lengths, params.turn_angles))


def smoothed_max(values: np.ndarray, tau: float) -> float:
    """Log-sum-exp soft maximum with temperature relative to the largest value.

    Never below ``max(values)`` and tends to it as ``tau -> 0``.
    """
    top = float(np.max(values))
    if tau <= 0 or not math.isfinite(top):
        return top
    z = (values / top - 1.0) / tau
    return top * (1.0 + tau * math.log(float(np.sum(np.exp(z)))))


def _penalised_values(X: np.ndarray) -> np.ndarray:
    _, rho, area, _ = triple_terms(X)
    return rho / np.maximum(area, AREA_FLOOR)


def objective(params: EmbeddingParams, d: int | None = None, tau: float = 0.0) -> float:
    """Exact 3-distortion of the decoded sequence, or its smoothed version for ``tau > 0``."""
    seq = decode(params, d)
    if tau <= 0:
        return delta3(seq).delta3
    return smoothed_max(_penalised_values(seq.points), tau)


@dataclass
class OptimizationResult:
    best: TameSequence
    value: float
    restarts: int
    converged: bool
    params: EmbeddingParams | None = None
    history: list[tuple[int, float]] = field(default_factory=list)


def _split(z: np.ndarray, n: int, d: int):
    lengths = np.clip(z[:n], MIN_LENGTH, 1.0)
    turns = z[n:].reshape(n - 1, d - 1)
    return lengths, turns


def _initial(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    lengths = rng.uniform(0.7, 1.0, n)
    turns = rng.uniform(-math.pi, math.pi, (n - 1, d - 1))
    if d > 2:
        turns[:, 0] = rng.uniform(0.0, math.pi, n - 1)
    if rng.uniform() < 0.5:
        # near a circular arc: one turning direction, total turn below 2 pi
        base = rng.uniform(0.5, 1.5) * math.pi / n
        turns[:, 0] = base * (1 + 0.2 * rng.normal(size=n - 1))
        if d > 2:
            turns[:, 1:] = rng.uniform(-math.pi, math.pi, d - 2) + rng.normal(scale=0.2, size=(n - 1, d - 2))
    return np.concatenate([lengths, turns.ravel()])


def _search_objective(n: int, d: int, tau: float):
    """Lean closure over the flat search vector; same value as :func:`objective` on tame inputs."""
    from .distortion import _combos

    I, J, K = _combos(n + 1)
    rho = ((J - I) * (K - J)) / 2.0

    def f(z: np.ndarray) -> float:
        lengths = np.clip(z[:n], MIN_LENGTH, 1.0)
        turns = z[n:].reshape(n - 1, d - 1)
        if d == 2:
            theta = np.empty(n)
            theta[0] = 0.0
            np.cumsum(turns[:, 0], out=theta[1:])
            steps = np.empty((n + 1, 2))
            steps[0] = 0.0
            steps[1:, 0] = lengths * np.cos(theta)
            steps[1:, 1] = lengths * np.sin(theta)
            X = np.cumsum(steps, axis=0)
        else:
            X = decode_points(lengths, turns)
        area = gram_area(X[J] - X[I], X[K] - X[I])
        return smoothed_max(rho / np.maximum(area, AREA_FLOOR), tau)

    return f


def _stage(z0: np.ndarray, n: int, d: int, tau: float, maxiter: int):
    f = _search_objective(n, d, tau)
    # smoothed stages only need to land in the right basin
    xatol, fatol = (1e-10, 1e-13) if tau <= 0 else (1e-5, 1e-7)
    return minimize(f, z0, method="Nelder-Mead", options={"maxiter": maxiter, "xatol": xatol, "fatol": fatol, "adaptive": True})


def local_search(
    n: int,
    d: int = 2,
    restarts: int | None = None,
    seed: int = 42,
    schedule: tuple[float, ...] = DEFAULT_SCHEDULE,
    maxiter: int | None = None,
    max_retries: int = 5,
) -> OptimizationResult:
    """Multi-start derivative-free minimisation of the 3-distortion of ``Pi_n`` in R^d.

    Each restart runs Nelder-Mead through the temperature ``schedule`` (the
    final 0 is the exact maximum), then polishes once more at temperature 0.
    The winner is the smallest ``(value, restart)`` pair, so results depend
    only on ``seed``.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    if restarts is None:
        restarts = 100 if n <= 6 else 20
    dim = n + (n - 1) * (d - 1)
    maxiter = maxiter or 400 * dim
    best = None
    history: list[tuple[int, float]] = []
    evaluations = 0
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        for _attempt in range(max_retries + 1):
            z = _initial(rng, n, d)
            converged = True
            for tau in list(schedule) + [0.0]:
                res = _stage(z, n, d, tau, maxiter)
                z, converged = res.x, bool(res.success)
                evaluations += res.nfev
            X = decode_points(*_split(z, n, d))
            value = float(delta3_batch(X[None])[0])
            if math.isfinite(value):
                break
        if not math.isfinite(value):
            continue
        if best is None or value < best[0]:
            best = (value, r, z, converged)
            history.append((evaluations, value))
    if best is None:
        lengths = np.ones(n)
        turns = np.zeros((n - 1, d - 1))
        seq = decode(EmbeddingParams(lengths, turns))
        return OptimizationResult(seq, math.inf, restarts, False, EmbeddingParams(lengths, turns), history)
    value, _, z, converged = best
    lengths, turns = _split(z, n, d)
    params = EmbeddingParams(lengths, turns)
    seq = decode(params)
    return OptimizationResult(seq, delta3(seq).delta3, restarts, converged, params, history)


@dataclass(frozen=True)
class OracleResult:
    value: float
    turns: tuple[float, ...]
    lengths: tuple[float, ...]


LENGTH_GRID = (0.25, 0.5, 0.75, 1.0)


def _grid_values(n: int, turn_axes: list[np.ndarray], lengths: tuple[float, ...]):
    """Minimal value over the product grid; returns (value, turns, lengths)."""
    best = (math.inf, None, None)
    length_combos = np.array(list(product(lengths, repeat=n)))
    first, rest = turn_axes[0], turn_axes[1:]
    rest_grid = np.array(list(product(*rest))) if rest else np.zeros((1, 0))
    for t0 in first:
        turns = np.concatenate([np.full((len(rest_grid), 1), t0), rest_grid], axis=1)
        theta = np.concatenate([np.zeros((len(turns), 1)), np.cumsum(turns, axis=1)], axis=1)
        dirs = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        steps = length_combos[:, None, :, None] * dirs[None, :, :, :]
        X = np.concatenate([np.zeros(steps.shape[:2] + (1, 2)), np.cumsum(steps, axis=2)], axis=2)
        vals = delta3_batch(X)
        a, b = np.unravel_index(int(np.argmin(vals)), vals.shape)
        if vals[a, b] < best[0]:
            best = (float(vals[a, b]), tuple(float(t) for t in turns[b]), tuple(float(x) for x in length_combos[a]))
    return best


def brute_force_oracle(
    n: int,
    d: int = 2,
    grid_step: float = 0.01,
    lengths: tuple[float, ...] = LENGTH_GRID,
    turns: np.ndarray | None = None,
) -> OracleResult:
    """Exhaustive grid minimum of the planar 3-distortion for ``n`` in {2, 3}.

    The first turn ranges over ``(0, pi)`` (a reflection fixes its sign); the
    second over ``(-pi, pi)`` so zig-zags are covered too. A second pass at
    ``grid_step / 10`` refines the angles around the best cell. ``turns``
    replaces the angle grid for every turn when given.
    """
    if n not in (2, 3):
        raise ValueError("brute-force oracle is limited to n in {2, 3}")
    if d != 2:
        raise ValueError("brute-force oracle is planar only")
    if turns is not None:
        axes = [np.asarray(turns, dtype=float)] * (n - 1)
        v, t, L = _grid_values(n, axes, lengths)
        return OracleResult(v, t or (), L or ())
    pos = np.arange(1, int(math.ceil(math.pi / grid_step))) * grid_step
    pos = pos[pos < math.pi]
    axes = [pos] + [np.concatenate([-pos[::-1], pos])] * (n - 2)
    v, t, L = _grid_values(n, axes, lengths)
    if t is None:
        return OracleResult(v, (), ())
    fine = grid_step / 10
    local = np.arange(-10, 11) * fine
    axes = [t0 + local for t0 in t]
    v2, t2, L2 = _grid_values(n, axes, lengths)
    if v2 < v:
        v, t, L = v2, t2, L2
    return OracleResult(v, t, L)
