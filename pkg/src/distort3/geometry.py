"""Euclidean primitives in arbitrary dimension.

Points are plain 1-D float arrays (anything ``np.asarray`` accepts). Areas use
the Gram determinant, so the same code serves the plane and higher dimensions.
"""

from __future__ import annotations

import math

import numpy as np

EPS_AREA = 1e-12


class GeometryError(ValueError):
    """Raised on malformed or degenerate geometric input."""


def as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size < 1:
        raise GeometryError(f"a point must be a non-empty 1-D coordinate vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise GeometryError("point coordinates must be finite")
    return arr


def as_points(points, dim: int | None = None) -> np.ndarray:
    """Validate a sequence of points into an ``(N, d)`` float array."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim != 2 or arr.shape[1] < 1:
        raise GeometryError(f"expected an (N, d) array of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise GeometryError("point coordinates must be finite")
    if dim is not None and arr.shape[1] != dim:
        raise GeometryError(f"expected dimension {dim}, got {arr.shape[1]}")
    return arr


def _same_dim(*pts: np.ndarray) -> int:
    d = pts[0].size
    if any(p.size != d for p in pts[1:]):
        raise GeometryError("dimension mismatch: " + ", ".join(str(p.size) for p in pts))
    return d


def sqnorm(u: np.ndarray) -> np.ndarray:
    """Squared norm along the last axis, summed in fixed coordinate order.

    The explicit left-to-right loop makes the result bit-reproducible across
    every code path that needs it (vectorised engine and naive oracles).
    """
    out = u[..., 0] * u[..., 0]
    for c in range(1, u.shape[-1]):
        out = out + u[..., c] * u[..., c]
    return out


def dot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Dot product along the last axis, in the same fixed order as :func:`sqnorm`."""
    out = u[..., 0] * v[..., 0]
    for c in range(1, u.shape[-1]):
        out = out + u[..., c] * v[..., c]
    return out


def gram_area(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Triangle area ``0.5 * sqrt(|u|^2 |v|^2 - (u.v)^2)`` along the last axis.

    The Gram determinant is summed as squared 2x2 minors (Lagrange's identity)
    in a fixed order. The expanded form cancels catastrophically on thin
    triangles, losing about ``eps * value**2`` relative accuracy in
    ``rho / area``; the minor sum loses about ``eps * value``.
    """
    d = u.shape[-1]
    g = None
    for a in range(d - 1):
        for b in range(a + 1, d):
            m = u[..., a] * v[..., b] - u[..., b] * v[..., a]
            g = m * m if g is None else g + m * m
    return 0.5 * np.sqrt(g)


def triangle_area(a, b, c) -> float:
    """Area of the triangle ``abc`` in any dimension ``d >= 2``.

    >>> triangle_area((0, 0), (1, 0), (0, 1))
    0.5
    """
    a, b, c = as_point(a), as_point(b), as_point(c)
    d = _same_dim(a, b, c)
    if d < 2:
        raise GeometryError("triangle area needs dimension >= 2")
    u, v = b - a, c - a
    return float(gram_area(u, v))


def is_degenerate(a, b, c, eps: float = EPS_AREA) -> bool:
    """True when the area is below ``eps * s**2``, s the longest side."""
    a, b, c = as_point(a), as_point(b), as_point(c)
    s2 = max(sqnorm(b - a), sqnorm(c - a), sqnorm(c - b))
    return triangle_area(a, b, c) < eps * s2


def angle_at_vertex(a, b, c) -> float:
    """Undirected angle ``abc`` at vertex ``b``, in ``[0, pi]``."""
    a, b, c = as_point(a), as_point(b), as_point(c)
    _same_dim(a, b, c)
    u, v = a - b, c - b
    nu, nv = math.sqrt(sqnorm(u)), math.sqrt(sqnorm(v))
    scale = max(nu, nv, 1.0)
    if nu <= 1e-12 * scale or nv <= 1e-12 * scale:
        raise GeometryError("degenerate angle: vertex coincides with an endpoint")
    cos = float(dot(u, v)) / (nu * nv)
    return math.acos(min(1.0, max(-1.0, cos)))


def point_line_distance(p, a, b) -> float:
    """Distance from ``p`` to the infinite line through ``a`` and ``b``."""
    p, a, b = as_point(p), as_point(a), as_point(b)
    _same_dim(p, a, b)
    base = math.sqrt(sqnorm(b - a))
    if base <= 1e-12 * max(1.0, math.sqrt(sqnorm(a)), math.sqrt(sqnorm(b))):
        raise GeometryError("undefined line: the two points coincide")
    if p.size == 1:
        return 0.0
    return 2.0 * triangle_area(a, b, p) / base


def cross2(o, a, b):
    """Signed planar cross product ``(a - o) x (b - o)``; broadcasts over rows."""
    o, a, b = np.asarray(o, float), np.asarray(a, float), np.asarray(b, float)
    return (a[..., 0] - o[..., 0]) * (b[..., 1] - o[..., 1]) - (a[..., 1] - o[..., 1]) * (b[..., 0] - o[..., 0])


def is_convex_sequence(points, eps: float = EPS_AREA) -> bool:
    """True iff the closed polygon through ``points`` bounds their convex hull in order.

    Every cyclic turn must be strictly non-zero (collinear vertices are not hull
    vertices) with one common sign, and the total turning must be one full
    revolution so that star-shaped self-winding orders are rejected.
    """
    P = as_points(points)
    if P.shape[1] != 2:
        raise GeometryError("convexity test is planar only (d = 2)")
    m = len(P)
    if m < 3:
        raise GeometryError("convexity test needs at least 3 points")
    prev = np.roll(P, 1, axis=0)
    nxt = np.roll(P, -1, axis=0)
    turns = cross2(prev, P, nxt)
    s2 = np.maximum.reduce([sqnorm(P - prev), sqnorm(nxt - P), sqnorm(nxt - prev)])
    if np.any(np.abs(turns) < eps * s2) or np.any(s2 == 0.0):
        return False
    if not (np.all(turns > 0) or np.all(turns < 0)):
        return False
    e_in = P - prev
    e_out = nxt - P
    ang = np.arctan2(cross2(np.zeros(2), e_in, e_out), dot(e_in, e_out))
    return bool(abs(abs(ang.sum()) - 2 * math.pi) < 1e-6)


def interior_angles(points) -> np.ndarray:
    """Cyclic vertex angles ``P[i-1] P[i] P[i+1]`` of a closed polygon."""
    P = as_points(points)
    m = len(P)
    return np.array([angle_at_vertex(P[i - 1], P[i], P[(i + 1) % m]) for i in range(m)])


def rigid_motion(dim: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Random orthogonal matrix and translation (for invariance tests and demos)."""
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    q = q * np.sign(np.diag(r))
    return q, rng.standard_normal(dim)
