import math

import numpy as np
import pytest
from scipy.spatial import ConvexHull

SQRT3 = math.sqrt(3.0)


def random_walk(rng, n, d, min_step=0.05):
    """``n + 1`` points whose consecutive gaps lie in ``[min_step, 1]``."""
    steps = rng.normal(size=(n, d))
    steps /= np.linalg.norm(steps, axis=1, keepdims=True)
    steps *= rng.uniform(min_step, 1.0, size=(n, 1))
    return np.vstack([np.zeros(d), np.cumsum(steps, axis=0)])


def arc_sequence(n, fraction, rng=None, noise=0.0):
    """``n + 1`` points at unit spacing on a circle arc covering ``fraction`` of the circle."""
    theta = 2 * math.pi * fraction / n
    R = 0.5 / math.sin(theta / 2)
    t = theta * np.arange(n + 1)
    P = R * np.stack([np.cos(t), np.sin(t)], axis=1)
    if noise:
        P = P + noise * rng.normal(size=P.shape)
        gaps = np.linalg.norm(np.diff(P, axis=0), axis=1).max()
        if gaps > 1:
            P = P / gaps
    return P


def random_polygon(rng):
    m = int(rng.integers(3, 13))
    kind = rng.integers(3)
    if kind == 0:
        # convex position, visited in angular order
        t = np.sort(rng.uniform(0, 2 * math.pi, m))
        r = 1.0 + 0.02 * rng.uniform(size=m)
        P = np.stack([r * np.cos(t), r * np.sin(t)], axis=1)
    elif kind == 1:
        # convex position, shuffled order
        t = rng.uniform(0, 2 * math.pi, m)
        P = np.stack([np.cos(t), np.sin(t)], axis=1)
    else:
        P = rng.uniform(-1, 1, size=(m, 2))
    if rng.uniform() < 0.5:
        P = P[::-1]
    return P


def hull_says_convex(P):
    m = len(P)
    try:
        verts = list(ConvexHull(P).vertices)
    except Exception:
        return False
    if len(verts) != m:
        return False
    start = verts.index(0)
    cyc = verts[start:] + verts[:start]
    return cyc == list(range(m)) or cyc == [0] + list(range(m - 1, 0, -1))


@pytest.fixture
def right_angle():
    return np.array([[0.0, 1.0], [0.0, 0.0], [1.0, 0.0]])


@pytest.fixture
def square_path():
    return np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]])


@pytest.fixture
def u_shape():
    """Unit edges with 2pi/3 interior angles."""
    return np.array([[0.0, 0.0], [1.0, 0.0], [1.5, SQRT3 / 2], [1.0, SQRT3]])


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)
