import math

import numpy as np
import pytest

from distort3.distortion import check_tame, delta3
from distort3.geometry import rigid_motion
from distort3.lower_bound import prop1_verify
from distort3.optimizer import (
    EmbeddingParams,
    brute_force_oracle,
    decode,
    local_search,
    objective,
    smoothed_max,
    spherical,
)


def test_params_validation():
    with pytest.raises(ValueError):
        EmbeddingParams([1.0, 1.5], [0.3])
    with pytest.raises(ValueError):
        EmbeddingParams([1.0, 0.0], [0.3])
    with pytest.raises(ValueError):
        EmbeddingParams([1.0, 1.0], [0.3, 0.2])
    p = EmbeddingParams([1.0, 0.5], [0.3])
    assert p.turn_angles.shape == (1, 1) and p.n == 2


def test_spherical_unit_vectors():
    rng = np.random.default_rng(0)
    for k in (1, 2, 3):
        v = spherical(rng.uniform(-3, 3, size=(50, k)))
        np.testing.assert_allclose(np.linalg.norm(v, axis=1), 1.0, atol=1e-14)


def test_decode_planar():
    P = decode(EmbeddingParams([1.0, 1.0], [math.pi / 2])).points
    np.testing.assert_allclose(P, [[0, 0], [1, 0], [1, 1]], atol=1e-15)


def test_decode_u_shape(u_shape):
    P = decode(EmbeddingParams([1.0, 1.0, 1.0], [math.pi / 3, math.pi / 3])).points
    np.testing.assert_allclose(P, u_shape, atol=1e-15)
    assert objective(EmbeddingParams([1.0, 1.0, 1.0], [math.pi / 3, math.pi / 3])) == pytest.approx(2 / math.sqrt(3), abs=1e-12)


def test_decode_spatial():
    P = decode(EmbeddingParams([1.0, 1.0], [[math.pi / 2, 0.0]]), d=3).points
    np.testing.assert_allclose(P, [[0, 0, 0], [1, 0, 0], [1, 1, 0]], atol=1e-15)
    with pytest.raises(ValueError):
        decode(EmbeddingParams([1.0, 1.0], [[math.pi / 2, 0.0]]), d=2)


def test_decode_preserves_lengths_3d():
    rng = np.random.default_rng(1)
    L = rng.uniform(0.1, 1, 6)
    P = decode(EmbeddingParams(L, rng.uniform(-3, 3, (5, 2)))).points
    np.testing.assert_allclose(np.linalg.norm(np.diff(P, axis=0), axis=1), L, atol=1e-14)


def test_decode_turns_are_relative_3d():
    # the angle between consecutive edges equals the polar turn angle
    rng = np.random.default_rng(2)
    turns = rng.uniform(0.1, 3.0, (4, 2))
    P = decode(EmbeddingParams(np.ones(5), turns)).points
    E = np.diff(P, axis=0)
    cos = np.sum(E[1:] * E[:-1], axis=1)
    np.testing.assert_allclose(np.arccos(np.clip(cos, -1, 1)), turns[:, 0], atol=1e-12)


def test_objective_examples():
    assert objective(EmbeddingParams([1.0, 1.0], [math.pi / 2])) == pytest.approx(1.0, abs=1e-12)
    assert math.isinf(objective(EmbeddingParams([1.0, 1.0], [0.0])))


def test_smoothed_max_properties():
    v = np.array([1.0, 2.0, 3.0])
    assert smoothed_max(v, 0.0) == 3.0
    assert smoothed_max(v, 0.1) >= 3.0
    assert smoothed_max(v, 1e-4) == pytest.approx(3.0, rel=1e-6)
    assert smoothed_max(np.array([1.0, math.inf]), 0.1) == math.inf


def test_smoothing_close_to_exact():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        d = int(rng.integers(2, 4))
        p = EmbeddingParams(rng.uniform(0.05, 1, n), rng.uniform(0.2, 3, (n - 1, d - 1)))
        exact = objective(p)
        for tau in (0.1, 0.01):
            assert objective(p, tau=tau) >= exact
        assert objective(p, tau=0.01) <= 1.01 * exact


def test_gauge_invariance():
    rng = np.random.default_rng(6)
    for d in (2, 3):
        p = EmbeddingParams(rng.uniform(0.3, 1, 5), rng.uniform(0.3, 2.5, (4, d - 1)))
        Q, t = rigid_motion(d, rng)
        moved = decode(p).points @ Q.T + t
        assert delta3(moved).delta3 == pytest.approx(objective(p), rel=1e-9)


def test_local_search_n2():
    res = local_search(2, restarts=20)
    assert res.value <= 1 + 1e-6
    assert res.best.n == 2


def test_local_search_deterministic():
    a = local_search(3, restarts=2, seed=9)
    b = local_search(3, restarts=2, seed=9)
    assert a.value == b.value
    np.testing.assert_array_equal(a.best.points, b.best.points)


def test_local_search_outputs_certify():
    res = local_search(4, restarts=3)
    seq = check_tame(res.best.points)
    rep = prop1_verify(seq, res.value)
    assert res.value >= 1.0 and rep.delta >= rep.implied_bound


def test_local_search_spatial_runs():
    res = local_search(3, d=3, restarts=3)
    assert res.best.dim == 3
    assert 1.0 <= res.value < 2.0


def test_oracle_n2():
    orc = brute_force_oracle(2)
    assert orc.value == pytest.approx(1.0, abs=1e-6)
    assert abs(orc.turns[0] - math.pi / 2) < 1e-3


@pytest.mark.slow
def test_oracle_n3_u_shape():
    orc = brute_force_oracle(3)
    assert orc.value == pytest.approx(2 / math.sqrt(3), abs=1e-3)
    assert all(abs(abs(t) - math.pi / 3) < 0.05 for t in orc.turns)
    assert orc.lengths == (1.0, 1.0, 1.0)


def test_oracle_collinear_grid_is_infinite():
    orc = brute_force_oracle(2, turns=[0.0])
    assert math.isinf(orc.value) and orc.turns == ()


def test_oracle_limits():
    with pytest.raises(ValueError):
        brute_force_oracle(4)
    with pytest.raises(ValueError):
        brute_force_oracle(2, d=3)
