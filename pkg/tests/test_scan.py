import math

import numpy as np
import pytest

from distort3.distortion import SizeLimitError
from distort3.scan import (
    SCAN_COLUMNS,
    arc_points,
    baseline,
    fit_exponent,
    records_to_csv,
    scan,
    scan_slope,
)


def test_fit_exponent_exact_power():
    slope, resid = fit_exponent([(n, 3 * n**0.5) for n in (4, 16, 64)])
    assert slope == pytest.approx(0.5, abs=1e-12) and resid == pytest.approx(0.0, abs=1e-12)


def test_fit_exponent_errors():
    for bad in [[(2, 1.0)], [(2, 1.0), (2, 3.0)], [(2, 1.0), (4, math.inf)], [(0, 1.0), (2, 1.0)]]:
        with pytest.raises(ValueError):
            fit_exponent(bad)


def test_arc_points_unit_spacing():
    P = arc_points(20)
    R = 20 / (math.pi / 3)
    chord = 2 * R * math.sin(1 / (2 * R))
    np.testing.assert_allclose(np.linalg.norm(np.diff(P, axis=0), axis=1), chord, rtol=1e-12)
    assert np.all(np.linalg.norm(np.diff(P, axis=0), axis=1) <= 1)


def test_baseline_consecutive_closed_form():
    for row in baseline([8, 16]):
        assert row.consecutive <= row.delta3 * (1 + 1e-9)


def test_baseline_linear():
    rows = baseline([8, 16, 32])
    slope, _ = fit_exponent([(r.n, r.delta3) for r in rows])
    assert abs(slope - 1.0) < 0.1


def test_scan_records_and_csv():
    recs = scan(2, [4, 8])
    assert [r.n for r in recs] == [4, 8]
    assert recs[0].ratio == pytest.approx(recs[0].delta3 / 4)
    lines = records_to_csv(recs).splitlines()
    assert lines[0] == ",".join(SCAN_COLUMNS) and len(lines) == 3
    assert scan_slope(recs)[0] > 0.5


def test_scan_size_limit():
    with pytest.raises(SizeLimitError):
        scan(3, [40])
