# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Unit tests for models.py"""

import math

import pytest

from driftlab.models import (
    MarginalSample,
    PairedSample,
    TimePoint,
    ValidationError,
    WienerParams,
    marginal_law,
)


def test_marginal_law():
    """Mean and variance of X_t."""
    data = [
        ((3, -1, 2), 0.5, 2.5, 2.0),
        ((0, 0, 1), 1, 0.0, 1.0),
        ((5, 2, 0), 3, 11.0, 0.0),
    ]
    for (x0, mu, sigma), t, mean, var in data:
        law = marginal_law(WienerParams(x0, mu, sigma), TimePoint(t))
        assert law.mean == mean
        assert law.variance == var


def test_marginal_law_affine_in_t():
    """Mean is affine in t, variance linear in t."""
    p = WienerParams(1.5, -0.75, 1.25)
    a, b = marginal_law(p, 0.4), marginal_law(p, 1.6)
    assert (b.mean - a.mean) / 1.2 == pytest.approx(p.mu)
    assert a.mean - 0.4 * p.mu == pytest.approx(p.x0)
    assert (b.variance - a.variance) / 1.2 == pytest.approx(p.sigma2)
    assert a.variance / 0.4 == pytest.approx(p.sigma2)


def test_variance_zero_iff_sigma_zero():
    """Degenerate law only for sigma == 0."""
    assert marginal_law(WienerParams(1, 1, 0), 2).variance == 0
    assert marginal_law(WienerParams(1, 1, 1e-3), 2).variance > 0


def test_invalid_params():
    """Reject negative sigma and non-finite values."""
    bad = [
        (0, 0, -1),
        (math.nan, 0, 1),
        (0, math.inf, 1),
        (0, 0, -math.inf),
        ('x', 0, 1),
    ]
    for x0, mu, sigma in bad:
        with pytest.raises(ValidationError):
            WienerParams(x0, mu, sigma)


def test_invalid_time():
    """Times must be finite and > 0."""
    for t in (0, -0.5, math.nan, math.inf):
        with pytest.raises(ValidationError):
            TimePoint(t)

    with pytest.raises(ValidationError):
        marginal_law(WienerParams(0, 0, 1), 0)


def test_params_are_immutable():
    """Models are frozen values."""
    p = WienerParams(3, -1, 2)
    with pytest.raises(AttributeError):
        p.sigma = 3

    s = MarginalSample(0.5, [1.0, 2.0])
    with pytest.raises(ValueError):
        s.values[0] = 5.0


def test_marginal_sample():
    """Samples must be non-empty and finite."""
    s = MarginalSample(0.5, [1, 2, 3])
    assert len(s) == 3
    assert s.t == TimePoint(0.5)
    assert s.head(2) == MarginalSample(0.5, [1, 2])

    for values in ([], [1.0, math.nan], [math.inf]):
        with pytest.raises(ValidationError):
            MarginalSample(0.5, values)

    with pytest.raises(ValidationError):
        s.head(4)


def test_paired_sample():
    """Paired samples need distinct times and equal-length columns."""
    s = PairedSample.from_pairs(0.5, 1, [(2.5, 2.0), (3.0, 1.0)])
    assert len(s) == 2
    assert s.pairs == [(2.5, 2.0), (3.0, 1.0)]
    assert s.head(1).pairs == [(2.5, 2.0)]

    with pytest.raises(ValidationError, match='t1 and t2 must differ'):
        PairedSample.from_pairs(0.5, 0.5, [(1, 2)])

    with pytest.raises(ValidationError):
        PairedSample(0.5, 1, [1, 2], [1])

    with pytest.raises(ValidationError):
        PairedSample.from_pairs(0.5, 1, [])


if __name__ == '__main__':  # pragma: no cover
    pytest.main([__file__])
