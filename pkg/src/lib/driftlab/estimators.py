# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Consistent estimators of the parameters of the Wiener process with drift.

Each estimator assumes the other parameters are known and passed in
explicitly:

  - ``sigma2``: ``sum((z_k - x0 - t*mu)**2) / (n*t)``, given x0 and mu.
  - ``mu``: ``sum(z_k - x0) / (n*t)``, given x0.
  - ``x0``: ``sum(z_k - t*mu) / n``, given mu.
  - joint: ``(x0, mu)`` from pairs observed at ``t1 != t2``.

The estimator of x0 is sometimes printed as ``sum((z_k - t*mu)**2) / n``.
That is an erratum: the square makes it non-negative and it can't
converge to x0. The terms ``z_k - t*mu`` have mean x0, so their plain
average is used.

Batch estimators and running (prefix) estimators share one
accumulation routine, `prefix_sums`, so ``running(...)[j]`` is always
exactly the batch estimate of the first ``j + 1`` observations.

The limit inferior/superior of a running estimate can't be computed
from finite data. `window_bounds` approximates them by the minimum and
maximum of the estimate after a burn-in.
"""

from collections import namedtuple
import logging

import numpy as np

from .models import MarginalSample, PairedSample, ValidationError, check_finite

# Estimator kinds for single-time samples
SIGMA2 = 'sigma2'
MU = 'mu'
X0 = 'x0'
KINDS = (SIGMA2, MU, X0)

# Prefix sums past this many terms use compensated summation
COMPENSATED_FROM = 10 ** 6

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class RunningEstimate(object):
    """Estimates ``T_1, T_2, ..., T_n`` after each prefix of a sample.

    Attributes:
        values (numpy.ndarray): Read-only estimates. ``values[j]`` uses
            the first ``j + 1`` observations.

    """

    def __init__(self, values):
        arr = np.array(values, dtype=float).reshape(-1)
        if arr.size == 0:
            raise ValidationError('running estimate must not be empty')

        arr.flags.writeable = False
        self._values = arr

    @property
    def values(self):
        """Read-only array of estimates."""
        return self._values

    def __repr__(self):
        return 'RunningEstimate(n=%d, final=%r)' % (len(self), self.final)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return float(self.values[i])

    def __eq__(self, other):
        if not isinstance(other, RunningEstimate):
            return NotImplemented

        return np.array_equal(self.values, other.values)

    @property
    def final(self):
        """Estimate from the whole sample."""
        return float(self.values[-1])

    def at(self, n):
        """Estimate from the first ``n`` observations."""
        if not 1 <= n <= len(self):
            raise ValidationError('n must be in [1, %d], got %r' %
                                  (len(self), n))

        return float(self.values[n - 1])


class WindowBounds(namedtuple('WindowBounds', 'burn_in lower upper')):
    """Minimum and maximum of a running estimate after a burn-in.

    Attributes:
        burn_in (int): Leading estimates discarded.
        lower (float): Smallest remaining estimate.
        upper (float): Largest remaining estimate.

    """

    __slots__ = ()

    @property
    def width(self):
        """``upper - lower``"""
        return self.upper - self.lower

    def contains(self, value):
        """Return ``True`` if ``lower <= value <= upper``."""
        return self.lower <= value <= self.upper


# Joint estimate of initial position and drift
JointEstimate = namedtuple('JointEstimate', 'x0_hat mu_hat')


def prefix_sums(x):
    """Sequential partial sums ``x[0], x[0] + x[1], ...``.

    The first `COMPENSATED_FROM` sums are plain left-to-right sums
    (`numpy.cumsum`). Later ones continue with Kahan compensation. A
    partial sum only depends on the terms before it, so the sum of a
    prefix is the same whether or not more terms follow.

    Args:
        x (numpy.ndarray): Terms to add.

    Returns:
        numpy.ndarray: Partial sums, same length as ``x``.

    """
    x = np.asarray(x, dtype=float)
    head = np.cumsum(x[:COMPENSATED_FROM])
    if len(x) <= COMPENSATED_FROM:
        return head

    tail = np.empty(len(x) - COMPENSATED_FROM)
    total, comp = float(head[-1]), 0.0
    for i, v in enumerate(x[COMPENSATED_FROM:].tolist()):
        y = v - comp
        s = total + y
        comp = (s - total) - y
        total = s
        tail[i] = total

    return np.concatenate([head, tail])


def _check_sample(sample):
    if not isinstance(sample, MarginalSample):
        raise ValidationError('expected a MarginalSample, got %r' %
                              type(sample).__name__)

    return sample


def _known(name, value, kind):
    if value is None:
        raise ValidationError('%s estimator needs a known %s' % (kind, name))

    return check_finite(name, value)


def _counts(n):
    return np.arange(1, n + 1)


def _running_sigma2(sample, x0, mu):
    t = sample.t.t
    dev = sample.values - x0 - t * mu
    return prefix_sums(dev * dev) / (_counts(len(sample)) * t)


def _running_mu(sample, x0):
    t = sample.t.t
    return prefix_sums(sample.values - x0) / (_counts(len(sample)) * t)


def _running_x0(sample, mu):
    t = sample.t.t
    return prefix_sums(sample.values) / _counts(len(sample)) - t * mu


def running(kind, sample, x0=None, mu=None):
    """Running estimate over every prefix of ``sample``.

    Args:
        kind (str): One of `KINDS`.
        sample (MarginalSample): Observations at one time.
        x0 (float, optional): Known initial position (``sigma2``, ``mu``).
        mu (float, optional): Known drift (``sigma2``, ``x0``).

    Returns:
        RunningEstimate: One estimate per prefix.

    Raises:
        ValidationError: Raised if ``kind`` is unknown or a needed
            parameter is missing.

    """
    sample = _check_sample(sample)
    if kind == SIGMA2:
        values = _running_sigma2(sample, _known('x0', x0, kind),
                                 _known('mu', mu, kind))
    elif kind == MU:
        values = _running_mu(sample, _known('x0', x0, kind))
    elif kind == X0:
        values = _running_x0(sample, _known('mu', mu, kind))
    else:
        raise ValidationError('unknown estimator %r, expected one of %s' %
                              (kind, ', '.join(KINDS)))

    log.debug('[estimators] running %s over %d values', kind, len(values))
    return RunningEstimate(values)


def estimate(kind, sample, x0=None, mu=None):
    """Batch estimate of kind ``kind`` from the whole sample.

    Arguments as for `running`.

    Returns:
        float: The estimate.

    """
    return running(kind, sample, x0=x0, mu=mu).final


def estimate_sigma2(sample, x0, mu):
    """Estimate ``sigma**2`` given the initial position and drift.

    Args:
        sample (MarginalSample): Observations at time ``t``.
        x0 (float): Known initial position.
        mu (float): Known drift.

    Returns:
        float: ``sum((z_k - x0 - t*mu)**2) / (n*t)``, >= 0.

    """
    return estimate(SIGMA2, sample, x0=x0, mu=mu)


def estimate_mu(sample, x0):
    """Estimate the drift given the initial position.

    Args:
        sample (MarginalSample): Observations at time ``t``.
        x0 (float): Known initial position.

    Returns:
        float: ``sum(z_k - x0) / (n*t)``

    """
    return estimate(MU, sample, x0=x0)


def estimate_x0(sample, mu):
    """Estimate the initial position given the drift.

    Args:
        sample (MarginalSample): Observations at time ``t``.
        mu (float): Known drift.

    Returns:
        float: ``mean(z) - t*mu``

    """
    return estimate(X0, sample, mu=mu)


def _check_paired(sample):
    if not isinstance(sample, PairedSample):
        raise ValidationError('expected a PairedSample, got %r' %
                              type(sample).__name__)

    return sample


def running_joint(sample):
    """Running joint estimates of ``(x0, mu)`` from a paired sample.

    With ``h = n*(t2 - t1)``::

        x0_hat = sum(t2*z1_k - t1*z2_k) / h
        mu_hat = sum(z2_k - z1_k) / h

    Args:
        sample (PairedSample): Pairs observed at ``t1`` and ``t2``.

    Returns:
        tuple: ``(RunningEstimate, RunningEstimate)`` for x0 and mu.

    """
    sample = _check_paired(sample)
    t1, t2 = sample.t1.t, sample.t2.t
    h = _counts(len(sample)) * (t2 - t1)
    x0_hat = prefix_sums(t2 * sample.z1 - t1 * sample.z2) / h
    mu_hat = prefix_sums(sample.z2 - sample.z1) / h
    return RunningEstimate(x0_hat), RunningEstimate(mu_hat)


def estimate_joint(sample):
    """Joint estimate of ``(x0, mu)`` when ``sigma`` is fixed.

    Args:
        sample (PairedSample): Pairs observed at ``t1 != t2``.

    Returns:
        JointEstimate: Estimated initial position and drift.

    """
    x0_run, mu_run = running_joint(sample)
    return JointEstimate(x0_run.final, mu_run.final)


def window_bounds(run, burn_in):
    """Tail minimum and maximum of a running estimate.

    Args:
        run (RunningEstimate): Running estimate.
        burn_in (int): Number of leading estimates to drop,
            ``0 <= burn_in < len(run)``.

    Returns:
        WindowBounds: ``min`` and ``max`` of ``run.values[burn_in:]``.

    Raises:
        ValidationError: Raised if ``burn_in`` is out of range.

    """
    if isinstance(burn_in, bool) or int(burn_in) != burn_in or \
            not 0 <= burn_in < len(run):
        raise ValidationError('burn_in must be in [0, %d), got %r' %
                              (len(run), burn_in))

    tail = run.values[int(burn_in):]
    return WindowBounds(int(burn_in), float(tail.min()), float(tail.max()))


def joint_window_bounds(sample, burn_in):
    """Componentwise `window_bounds` of the running joint estimate.

    Returns:
        tuple: ``(WindowBounds, WindowBounds)`` for x0 and mu.

    """
    x0_run, mu_run = running_joint(sample)
    return window_bounds(x0_run, burn_in), window_bounds(mu_run, burn_in)
