"""Recursive arc-spline curves with small 3-distortion.

``Gamma(m, 2)`` starts from a sixth of a circle of radius ``r`` carrying
``m + 1`` equally spaced points. Each arc between neighbours is replaced by a
flatter arc of radius ``2r`` through the same two points (it sits between the
original arc and the chord), and the figure is scaled so that the marked
points fall at integer arclengths ``0..m``.

``Gamma(m, d)`` is obtained from ``Gamma(m, d-1)`` by drawing, over every unit
piece of the base curve, a copy of ``Gamma(m, 2)`` in the flat strip
``(s, h)`` that unrolls the cylinder ``base x R+``; the new height ``h``
becomes the last coordinate. After rescaling the ``m**(d-1) + 1`` marked
points again sit at integer arclengths.

All curves are arclength parametrised and sampled on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distortion import TameSequence, check_tame
from .geometry import GeometryError, sqnorm

MAX_MARKS = 10**6


@dataclass(frozen=True)
class ConstructionParams:
    m: int
    d: int = 2
    r: float = 1.0

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m!r}")
        if int(self.d) != self.d or self.d < 2:
            raise ValueError(f"d must be an integer >= 2, got {self.d!r}")
        if not self.r > 0 or not math.isfinite(self.r):
            raise ValueError(f"r must be positive, got {self.r!r}")

    @property
    def n(self) -> int:
        return self.m ** (self.d - 1)


class MarkedCurve:
    """Arclength-parametrised curve with marked points at arclengths ``marks``."""

    dim: int
    total_length: float
    marks: np.ndarray

    def sample(self, s) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, s) -> np.ndarray:
        return self.sample(s)

    def marked_points(self) -> np.ndarray:
        return self.sample(self.marks)

    @property
    def n_marks(self) -> int:
        return len(self.marks)


def _half_angle(m: int) -> float:
    """Half-opening of the radius-2r arc whose chord subtends pi/(3m) on the radius-r circle."""
    return math.asin(math.sin(math.pi / (6 * m)) / 2)


def gamma2_chord(m: int) -> float:
    """End-to-end chord of ``Gamma(m, 2)`` at unit mark spacing (``-> 3m/pi``)."""
    return 1.0 / (4.0 * _half_angle(m))


def sagittas(m: int, r: float = 1.0) -> tuple[float, float, float]:
    """Sagittas over one piece: chord (0), radius-2r arc, original radius-r arc."""
    x = math.pi / (6 * m)
    alpha = _half_angle(m)
    return 0.0, 2 * r * (1 - math.cos(alpha)), r * (1 - math.cos(x))


@dataclass(frozen=True, eq=False)
class ArcCurve(MarkedCurve):
    """Planar chain of circular arcs of common radius, one per unit of arclength."""

    centers: np.ndarray
    start_angles: np.ndarray
    radius: float
    mark_points: np.ndarray
    orientation: float = -1.0
    dim: int = field(default=2, init=False)

    @property
    def m(self) -> int:
        return len(self.centers)

    @property
    def total_length(self) -> float:
        return float(len(self.centers))

    @property
    def marks(self) -> np.ndarray:
        return np.arange(len(self.centers) + 1, dtype=float)

    def sample(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        piece = np.clip(np.floor(s), 0, len(self.centers) - 1).astype(np.intp)
        ang = self.start_angles[piece] + self.orientation * (s - piece) / self.radius
        c = self.centers[piece]
        out = np.stack([c[..., 0] + self.radius * np.cos(ang), c[..., 1] + self.radius * np.sin(ang)], axis=-1)
        # marks are returned exactly, so junctions and endpoints carry no roundoff
        at_mark = (s == np.round(s)) & (s >= 0) & (s <= len(self.centers))
        if np.any(at_mark):
            out[at_mark] = self.mark_points[np.round(s[at_mark]).astype(np.intp)]
        return out


def build_gamma2(m: int, r: float = 1.0) -> ArcCurve:
    """``Gamma(m, 2)`` in its chord frame.

    ``P_0`` is the origin, ``P_m`` lies on the positive x-axis and the curve
    bulges towards ``y > 0``. Marks sit at arclengths ``0..m``.
    """
    params = ConstructionParams(m, 2, r)
    m, r = params.m, params.r
    x = math.pi / (6 * m)
    alpha = _half_angle(m)
    center = np.array([r / 2, -r * math.cos(math.pi / 6)])
    phi = 2 * math.pi / 3 - 2 * x * np.arange(m + 1)
    P = center + r * np.stack([np.cos(phi), np.sin(phi)], axis=1)
    P[0] = (0.0, 0.0)
    P[-1] = (r, 0.0)
    mid = (P[:-1] + P[1:]) / 2
    inward = center - mid
    inward /= np.sqrt(sqnorm(inward))[:, None]
    # centre of the radius-2r arc lies on the bisector beyond the original centre,
    # so the new arc bulges the same way as the old one, only less
    arc_centers = mid + inward * (2 * r * math.cos(alpha))
    rel = P[:-1] - arc_centers
    start = np.arctan2(rel[:, 1], rel[:, 0])
    scale = 1.0 / (4 * r * alpha)
    marks = P * scale
    marks[-1] = (gamma2_chord(m), 0.0)
    marks.setflags(write=False)
    return ArcCurve(arc_centers * scale, start, 2 * r * scale, marks)


@dataclass(frozen=True, eq=False)
class LiftedCurve(MarkedCurve):
    """A base curve with a copy of ``profile`` raised over each unit piece.

    ``profile`` is ``Gamma(m, 2)`` in its chord frame; its chord is stretched
    over one unit of base arclength, then everything is scaled by the profile
    chord so marks land on integers again.
    """

    base: MarkedCurve
    profile: ArcCurve

    @property
    def m(self) -> int:
        return len(self.profile.centers)

    @property
    def scale(self) -> float:
        return gamma2_chord(self.m)

    @property
    def dim(self) -> int:
        return self.base.dim + 1

    @property
    def pieces(self) -> int:
        return int(round(self.base.total_length))

    @property
    def total_length(self) -> float:
        return float(self.m * self.pieces)

    @property
    def marks(self) -> np.ndarray:
        return np.arange(self.m * self.pieces + 1, dtype=float)

    def sample(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        m, c = self.m, self.scale
        piece = np.clip(np.floor(s / m), 0, self.pieces - 1)
        local = s - piece * m
        xy = self.profile.sample(local)
        base_s = piece + np.clip(xy[..., 0] / c, 0.0, 1.0)
        under = self.base.sample(base_s)
        return np.concatenate([c * under, xy[..., 1:2]], axis=-1)


def lift_curve(base: MarkedCurve, m: int) -> LiftedCurve:
    """Raise a copy of ``Gamma(m, 2)`` over every unit piece of ``base``."""
    marks = np.asarray(base.marks)
    if not np.array_equal(marks, np.arange(len(marks), dtype=float)) or base.total_length != len(marks) - 1:
        raise GeometryError("base curve marks must sit at consecutive integer arclengths 0..N")
    if isinstance(base, (ArcCurve, LiftedCurve)) and base.m != m:
        raise GeometryError(f"base was built with m = {base.m}, not {m}")
    return LiftedCurve(base, build_gamma2(m))


def build_curve(params: ConstructionParams) -> MarkedCurve:
    if params.n > MAX_MARKS:
        raise GeometryError(f"m**(d-1) = {params.n} exceeds the {MAX_MARKS} mark limit")
    curve: MarkedCurve = build_gamma2(params.m, params.r)
    for _ in range(params.d - 2):
        curve = lift_curve(curve, params.m)
    return curve


def build_gamma(params: ConstructionParams) -> TameSequence:
    """Marked points ``P_{m,d,0..m**(d-1)}`` of ``Gamma(m, d)`` as a tame sequence."""
    return check_tame(build_curve(params).marked_points())


def sample_polyline(curve: MarkedCurve, per_unit: int) -> np.ndarray:
    """Points at arclength steps ``1/per_unit``, both endpoints included."""
    if per_unit < 1:
        raise ValueError("per_unit must be >= 1")
    L = curve.total_length
    count = int(math.ceil(L * per_unit - 1e-9))
    s = np.minimum(np.arange(count + 1) / per_unit, L)
    return curve.sample(s)


def metric_contraction_ratio(curve: MarkedCurve, per_unit: int) -> float:
    """Smallest Euclidean / arclength ratio over all pairs of samples."""
    if per_unit < 2:
        raise ValueError("per_unit must be >= 2")
    L = curve.total_length
    count = int(math.ceil(L * per_unit - 1e-9))
    s = np.minimum(np.arange(count + 1) / per_unit, L)
    X = curve.sample(s)
    best = math.inf
    for a in range(len(s) - 1):
        dist = np.sqrt(sqnorm(X[a + 1 :] - X[a]))
        best = min(best, float(np.min(dist / (s[a + 1 :] - s[a]))))
    return best


def polyline_length(curve: MarkedCurve, a: float, b: float, per_unit: int = 1024) -> float:
    """Arclength of ``curve`` on ``[a, b]`` by inscribed polylines with a Richardson step."""
    def chord_sum(k: int) -> float:
        s = np.linspace(a, b, max(2, int(math.ceil((b - a) * k)) + 1))
        return float(np.sum(np.sqrt(sqnorm(np.diff(curve.sample(s), axis=0)))))

    coarse, fine = chord_sum(per_unit), chord_sum(2 * per_unit)
    # inscribed polyline error is O(h^2) on smooth pieces
    return fine + (fine - coarse) / 3


def stated_constants(d: int) -> dict[str, float]:
    """Literal constants of the inductive bounds, kept only as metadata.

    ``contraction`` is ``(2/sqrt 3)**(2-d) * pi/3`` and ``c_d`` is
    ``(2/sqrt 3)**(2-d) * 6/pi``. A contraction factor above 1 is impossible,
    so ``pi/3`` must stand for ``3/pi``; neither value is asserted anywhere.
    """
    f = (2 / math.sqrt(3)) ** (2 - d)
    return {"contraction": f * math.pi / 3, "contraction_3_over_pi": f * 3 / math.pi, "c_d": f * 6 / math.pi}
