import math

import numpy as np
import pytest
from conftest import hull_says_convex, random_polygon
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from distort3.geometry import (
    GeometryError,
    angle_at_vertex,
    interior_angles,
    is_convex_sequence,
    is_degenerate,
    point_line_distance,
    rigid_motion,
    triangle_area,
)

coords = st.floats(-100, 100, allow_nan=False, allow_infinity=False)


def points(d):
    return arrays(float, (d,), elements=coords)


def cross_area(a, b, c):
    # independent: planar shoelace
    return 0.5 * abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def test_area_equilateral():
    a = triangle_area([0, 0], [1, 0], [0.5, math.sqrt(3) / 2])
    assert a == pytest.approx(math.sqrt(3) / 4, abs=1e-15)


def test_area_right_triangle_in_3d():
    assert triangle_area([0, 0, 0], [1, 0, 0], [0, 1, 0]) == pytest.approx(0.5, abs=1e-15)


def test_area_collinear_is_degenerate():
    a = triangle_area([0, 0], [1, 1], [2, 2])
    assert a == pytest.approx(0.0, abs=1e-15)
    assert is_degenerate([0, 0], [1, 1], [2, 2])


def test_area_rejects_low_dimension_and_mismatch():
    with pytest.raises(GeometryError):
        triangle_area([0], [1], [2])
    with pytest.raises(GeometryError):
        triangle_area([0, 0], [1, 0, 0], [0, 1])


@settings(max_examples=200)
@given(points(2), points(2), points(2))
def test_area_matches_shoelace(a, b, c):
    s2 = max(np.sum((b - a) ** 2), np.sum((c - a) ** 2), np.sum((c - b) ** 2), 1.0)
    assert triangle_area(a, b, c) == pytest.approx(cross_area(a, b, c), abs=1e-6 * math.sqrt(s2))


@settings(max_examples=200)
@given(points(4), points(4), points(4))
def test_area_symmetric_in_vertices(a, b, c):
    ref = triangle_area(a, b, c)
    s2 = max(np.sum((b - a) ** 2), np.sum((c - a) ** 2), 1.0)
    for perm in [(b, c, a), (c, a, b), (b, a, c), (a, c, b), (c, b, a)]:
        assert triangle_area(*perm) == pytest.approx(ref, abs=1e-6 * s2)


@settings(max_examples=100)
@given(points(3), points(3), points(3), st.integers(0, 2**32 - 1))
def test_area_rigid_motion(a, b, c, seed):
    Q, t = rigid_motion(3, np.random.default_rng(seed))
    s2 = max(np.sum((b - a) ** 2), np.sum((c - a) ** 2), 1.0)
    moved = triangle_area(Q @ a + t, Q @ b + t, Q @ c + t)
    assert moved == pytest.approx(triangle_area(a, b, c), abs=1e-6 * s2)


def test_angle_examples():
    assert angle_at_vertex([1, 0], [0, 0], [0, 1]) == pytest.approx(math.pi / 2, abs=1e-15)
    assert angle_at_vertex([-1, 0], [0, 0], [1, 0]) == pytest.approx(math.pi, abs=1e-12)
    assert angle_at_vertex([1, 0], [0, 0], [2, 0]) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(GeometryError):
        angle_at_vertex([0, 0], [0, 0], [1, 0])


def test_point_line_distance_examples():
    assert point_line_distance([1, 1, 1], [0, 0, 0], [2, 0, 0]) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert point_line_distance([5, 0], [0, 0], [1, 0]) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(GeometryError):
        point_line_distance([1, 1], [0, 0], [0, 0])


def test_convex_examples():
    hexagon = [(math.cos(t), math.sin(t)) for t in np.arange(6) * math.pi / 3]
    assert is_convex_sequence(hexagon)
    assert is_convex_sequence(hexagon[::-1])
    assert not is_convex_sequence([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])
    assert not is_convex_sequence([(0, 0), (1, 0), (2, 0), (1, 1)])
    # a pentagram turns the same way at every vertex but winds twice
    star = [(math.cos(t), math.sin(t)) for t in np.arange(5) * 4 * math.pi / 5]
    assert not is_convex_sequence(star)


def test_square_angles_sum():
    ang = interior_angles([(0, 0), (1, 0), (1, 1), (0, 1)])
    np.testing.assert_allclose(ang, np.full(4, math.pi / 2), atol=1e-15)


def test_convexity_agrees_with_hull(rng):
    agree = 0
    for _ in range(1000):
        P = random_polygon(rng)
        agree += is_convex_sequence(P) == hull_says_convex(P)
    assert agree == 1000


def test_interior_angle_sum_random_convex(rng):
    for _ in range(300):
        m = int(rng.integers(3, 40))
        t = np.sort(rng.uniform(0, 2 * math.pi, m))
        P = np.stack([np.cos(t), np.sin(t)], axis=1) * rng.uniform(0.1, 50)
        if not is_convex_sequence(P):
            continue
        assert interior_angles(P).sum() == pytest.approx((m - 2) * math.pi, abs=1e-6)


def test_rigid_motion_is_orthogonal(rng):
    for d in (2, 3, 5):
        Q, t = rigid_motion(d, rng)
        np.testing.assert_allclose(Q.T @ Q, np.eye(d), atol=1e-12)
        assert t.shape == (d,)
