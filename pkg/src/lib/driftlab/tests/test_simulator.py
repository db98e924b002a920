# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Unit tests for simulator.py"""

import math

import numpy as np
import pytest

from driftlab.models import ValidationError, WienerParams
from driftlab.rng import GaussianStream
from driftlab.simulator import (
    SeriesConfig,
    build_path,
    build_paths,
    grid,
    path_value_at,
    sample_marginal,
    sample_paired,
    sample_series,
    truncated_variance,
)

PUBLISHED = WienerParams(3, -1, 2)
STANDARD = WienerParams(0, 0, 1)


def test_sample_marginal_degenerate():
    """sigma = 0 gives the line exactly."""
    s = sample_marginal(WienerParams(3, -1, 0), 0.5, 4, GaussianStream(1, 0))
    assert s.values.tolist() == [2.5] * 4


def test_sample_marginal_moments():
    """Sample moments within 4 standard errors of the law."""
    n = 10 ** 5
    s = sample_marginal(PUBLISHED, 0.5, n, GaussianStream(0, 0))
    assert abs(s.values.mean() - 2.5) <= 4 * math.sqrt(2) / math.sqrt(n)
    assert abs(s.values.var() - 2.0) <= 4 * 2 * math.sqrt(2) / math.sqrt(n)


def test_sample_marginal_injected():
    """A single injected draw of 1 gives x0 + mu*t + sigma*sqrt(t)."""
    s = sample_marginal(PUBLISHED, 0.5, 1, GaussianStream(), normals=[1.0])
    assert s.values[0] == pytest.approx(3 - 0.5 + 2 * math.sqrt(0.5))

    with pytest.raises(ValidationError):
        sample_marginal(PUBLISHED, 0.5, 2, GaussianStream(), normals=[1.0])


def test_sample_marginal_deterministic():
    """Same stream, same sample."""
    a = sample_marginal(PUBLISHED, 0.5, 50, GaussianStream(3, 2))
    b = sample_marginal(PUBLISHED, 0.5, 50, GaussianStream(3, 2))
    assert a == b


def test_sample_marginal_invalid():
    """Bad time or size."""
    with pytest.raises(ValidationError):
        sample_marginal(PUBLISHED, 0, 5, GaussianStream())
    with pytest.raises(ValidationError):
        sample_marginal(PUBLISHED, 0.5, 0, GaussianStream())


def test_grid():
    """Uniform grids over [0, 1]."""
    assert grid(0.5).tolist() == [0.0, 0.5, 1.0]
    g = grid(1e-4)
    assert len(g) == 10001
    assert g[0] == 0.0 and g[-1] == 1.0

    for dt in (0, -0.1, 1.5, 0.3, math.nan):
        with pytest.raises(ValidationError):
            grid(dt)


def test_build_path_starts_at_x0():
    """Every series term vanishes at t = 0."""
    for seed in range(5):
        path = build_path(PUBLISHED, SeriesConfig(50), 0.01,
                          GaussianStream(seed))
        assert path.values[0] == 3.0
        assert len(path) == 101


def test_build_path_degenerate():
    """sigma = 0 paths are the line x0 + mu*t at every grid point."""
    p = WienerParams(3, -1, 0)
    path = build_path(p, SeriesConfig(), 1e-3, GaussianStream(4))
    assert np.array_equal(path.values, 3 + -1 * path.times)


def test_build_path_deterministic():
    """Same stream and config, same path."""
    a = build_path(PUBLISHED, SeriesConfig(100), 0.01, GaussianStream(1, 7))
    b = build_path(PUBLISHED, SeriesConfig(100), 0.01, GaussianStream(1, 7))
    assert a == b
    c = build_path(PUBLISHED, SeriesConfig(100), 0.01, GaussianStream(1, 8))
    assert a != c


def test_path_value_matches_grid():
    """A point evaluation equals the grid value on the same stream."""
    cfg = SeriesConfig()
    for index in range(5):
        stream = GaussianStream(12, index)
        path = build_path(PUBLISHED, cfg, 0.5, stream)
        assert path_value_at(PUBLISHED, cfg, 0.5, stream) == path.values[1]
        assert path_value_at(PUBLISHED, cfg, 1.0, stream) == path.values[2]


def test_path_value_degenerate():
    """sigma = 0 gives x0 + mu*t."""
    p = WienerParams(3, -1, 0)
    assert path_value_at(p, SeriesConfig(), 0.5, GaussianStream()) == 2.5


def test_path_value_outside_domain():
    """Series paths only live on (0, 1]."""
    for t in (1.5, 0, -1):
        with pytest.raises(ValidationError):
            path_value_at(PUBLISHED, SeriesConfig(), t, GaussianStream())


def test_truncated_variance():
    """v_N(0.5) is close to sigma^2 t and grows with N."""
    v = truncated_variance(0.5, 1000)
    assert abs(v - 0.5) < 1e-3
    assert truncated_variance(0.5, 1000, sigma=2) == pytest.approx(4 * v)

    for t in (0.1, 0.37, 0.5, 0.9):
        prev = 0.0
        for n in (1, 2, 5, 10, 100, 1000):
            v = truncated_variance(t, n)
            assert v >= prev
            assert v <= t + 1e-12
            prev = v


def test_series_variance_monte_carlo():
    """Variance of 10^4 series values at t=0.5 matches v_N(0.5)."""
    n = 10 ** 4
    s = sample_series(STANDARD, 0.5, n, SeriesConfig(1000), seed=3)
    v = truncated_variance(0.5, 1000)
    assert abs(s.values.var() - v) <= 4 * v * math.sqrt(2) / math.sqrt(n)


def test_table41_regime():
    """100 series values at t=0.5 look like the published table."""
    s = sample_series(PUBLISHED, 0.5, 100, SeriesConfig(), seed=0)
    assert len(s) == 100
    assert np.all(np.isfinite(s.values))
    assert abs(s.values.mean() - 2.5) <= 4 * math.sqrt(2) / 10


def test_sample_series_threads():
    """Threaded and sequential series sampling agree exactly."""
    a = sample_series(PUBLISHED, 0.5, 40, SeriesConfig(200), seed=5, workers=1)
    b = sample_series(PUBLISHED, 0.5, 40, SeriesConfig(200), seed=5, workers=4)
    assert a == b


def test_sample_series_substreams():
    """Trajectory k uses substream start + k."""
    cfg = SeriesConfig(100)
    s = sample_series(PUBLISHED, 0.25, 3, cfg, seed=8, start=10)
    for k in range(3):
        want = path_value_at(PUBLISHED, cfg, 0.25, GaussianStream(8, 10 + k))
        assert s.values[k] == want


def test_sample_paired_exact():
    """Exact pairs draw each time from its own substream."""
    s = sample_paired(PUBLISHED, 0.5, 1, 20, seed=2)
    assert len(s) == 20
    z1 = sample_marginal(PUBLISHED, 0.5, 20, GaussianStream(2, 0)).values
    z2 = sample_marginal(PUBLISHED, 1, 20, GaussianStream(2, 1)).values
    assert np.array_equal(s.z1, z1)
    assert np.array_equal(s.z2, z2)


def test_sample_paired_series():
    """Series pairs come from trajectories 2k and 2k + 1."""
    cfg = SeriesConfig(50)
    s = sample_paired(PUBLISHED, 0.5, 1, 3, seed=2, series=True, config=cfg)
    for k in range(3):
        assert s.z1[k] == path_value_at(PUBLISHED, cfg, 0.5,
                                        GaussianStream(2, 2 * k))
        assert s.z2[k] == path_value_at(PUBLISHED, cfg, 1,
                                        GaussianStream(2, 2 * k + 1))


def test_sample_paired_same_times():
    """t1 == t2 is rejected."""
    with pytest.raises(ValidationError, match='t1 and t2 must differ'):
        sample_paired(PUBLISHED, 0.5, 0.5, 10)


def test_build_paths():
    """Several paths on one grid, one substream each."""
    cfg = SeriesConfig(20)
    paths = build_paths(PUBLISHED, cfg, 0.1, seed=1, count=4)
    assert len(paths) == 4
    for k, path in enumerate(paths):
        assert path == build_path(PUBLISHED, cfg, 0.1, GaussianStream(1, k))


def test_series_config():
    """terms must be a positive integer."""
    assert SeriesConfig().terms == 1000
    assert SeriesConfig(5).draws == 6
    for terms in (0, -3, 2.5):
        with pytest.raises(ValidationError):
            SeriesConfig(terms)


if __name__ == '__main__':  # pragma: no cover
    pytest.main([__file__])
