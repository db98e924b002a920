# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Unit tests for rng.py"""

import math

import numpy as np
import pytest
from scipy import stats

from driftlab.models import ValidationError
from driftlab.rng import GaussianStream, draw_standard_normals, spawn_streams


def test_deterministic():
    """Same stream, same draws."""
    s = GaussianStream(42, 0)
    a = draw_standard_normals(s, 5)
    b = draw_standard_normals(GaussianStream(42, 0), 5)
    assert a.tolist() == b.tolist()
    assert a.tobytes() == draw_standard_normals(s, 5).tobytes()


def test_substreams_differ():
    """Different indices or seeds give different draws."""
    a = draw_standard_normals(GaussianStream(42, 0), 5)
    b = draw_standard_normals(GaussianStream(42, 1), 5)
    c = draw_standard_normals(GaussianStream(43, 0), 5)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_prefix_stable():
    """Shorter draws are a prefix of longer ones."""
    s = GaussianStream(9, 3)
    short = draw_standard_normals(s, 10)
    long = draw_standard_normals(s, 1000)
    assert np.array_equal(short, long[:10])


def test_moments():
    """Sample mean and variance within 4 standard errors of N(0, 1)."""
    n = 10 ** 5
    x = draw_standard_normals(GaussianStream(7, 0), n)
    assert abs(x.mean()) <= 4 / math.sqrt(n)
    assert abs(x.var() - 1) <= 4 * math.sqrt(2) / math.sqrt(n)


def test_ks():
    """KS statistic of 10^4 draws below the 0.1% critical value."""
    n = 10 ** 4
    x = draw_standard_normals(GaussianStream(11, 0), n)
    res = stats.kstest(x, 'norm')
    assert res.statistic < 1.95 / math.sqrt(n)


def test_invalid_count():
    """count must be >= 1."""
    for count in (0, -1, 1.5):
        with pytest.raises(ValidationError):
            draw_standard_normals(GaussianStream(0, 0), count)


def test_invalid_stream():
    """Seeds are unsigned 64-bit, indices non-negative."""
    for seed, index in ((-1, 0), (2 ** 64, 0), (0, -1), (0, 0.5)):
        with pytest.raises(ValidationError):
            GaussianStream(seed, index)

    GaussianStream(2 ** 64 - 1, 0)


def test_default_seed():
    """Seed defaults to 0."""
    s = GaussianStream()
    assert (s.seed, s.stream_index) == (0, 0)


def test_spawn_streams():
    """Consecutive indices from a start."""
    streams = spawn_streams(5, 3, start=2)
    assert [s.stream_index for s in streams] == [2, 3, 4]
    assert all(s.seed == 5 for s in streams)


if __name__ == '__main__':  # pragma: no cover
    pytest.main([__file__])
