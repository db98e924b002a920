# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""driftlab data models.

All models are immutable values. They validate their fields on
construction and raise `ValidationError` for anything a Wiener process
with drift can't be built from (negative ``sigma``, NaN, non-positive
times, empty samples).

The process itself is ``X_t = x0 + mu*t + sigma*W_t``, so at a fixed
time ``t`` an observation is normally distributed with mean
``x0 + mu*t`` and variance ``sigma**2 * t``.
"""

from dataclasses import dataclass
import logging
import math

import numpy as np


log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class ValidationError(ValueError):
    """Raised if a parameter, time or sample is invalid."""


def check_finite(name, value):
    """Return ``value`` as a `float` or raise `ValidationError`.

    Args:
        name (str): Name of the value (used in the error message).
        value (float): Value to check.

    Returns:
        float: ``value`` as a float.

    Raises:
        ValidationError: Raised if ``value`` isn't a finite real.

    """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError('%s must be a real number, got %r' %
                              (name, value))

    if not math.isfinite(value):
        raise ValidationError('%s must be finite, got %r' % (name, value))

    return value


def _frozen_array(name, values):
    """Copy ``values`` into a read-only 1-D float array."""
    try:
        arr = np.array(values, dtype=float).reshape(-1)
    except (TypeError, ValueError):
        raise ValidationError('%s must be a sequence of reals' % name)

    if arr.size == 0:
        raise ValidationError('%s must not be empty' % name)

    if not np.all(np.isfinite(arr)):
        raise ValidationError('%s must all be finite' % name)

    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class WienerParams:
    """Parameters of ``dX_t = mu dt + sigma dW_t`` with ``X_0 = x0``.

    Attributes:
        x0 (float): Initial position.
        mu (float): Drift per unit time.
        sigma (float): Bombardment-force parameter (per square-root of
            time). ``0`` is allowed and gives the line ``x0 + mu*t``.

    """

    x0: float
    mu: float
    sigma: float

    def __post_init__(self):
        for name in ('x0', 'mu', 'sigma'):
            object.__setattr__(self, name,
                               check_finite(name, getattr(self, name)))

        if self.sigma < 0:
            raise ValidationError('sigma must be >= 0, got %r' % self.sigma)

    @property
    def sigma2(self):
        """Variance rate ``sigma**2``."""
        return self.sigma * self.sigma


@dataclass(frozen=True)
class TimePoint:
    """A strictly positive observation time.

    Attributes:
        t (float): Time of observation.

    """

    t: float

    def __post_init__(self):
        t = check_finite('t', self.t)
        if t <= 0:
            raise ValidationError('t must be > 0, got %r' % t)

        object.__setattr__(self, 't', t)

    def __float__(self):
        return self.t

    @classmethod
    def of(cls, value):
        """Return ``value`` unchanged if it's a `TimePoint`, else wrap it."""
        if isinstance(value, cls):
            return value

        return cls(value)


@dataclass(frozen=True, eq=False)
class MarginalSample:
    """Observations of independent trajectories at one time.

    Attributes:
        t (TimePoint): Observation time.
        values (numpy.ndarray): Read-only array ``z_1..z_n``, n >= 1.

    """

    t: TimePoint
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 't', TimePoint.of(self.t))
        object.__setattr__(self, 'values',
                           _frozen_array('sample values', self.values))

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, MarginalSample):
            return NotImplemented

        return (self.t == other.t and
                np.array_equal(self.values, other.values))

    def head(self, n):
        """Return a new sample of the first ``n`` observations."""
        if not 1 <= n <= len(self):
            raise ValidationError('n must be in [1, %d], got %r' %
                                  (len(self), n))

        return MarginalSample(self.t, self.values[:n])


@dataclass(frozen=True, eq=False)
class PairedSample:
    """Pairs of observations at two distinct times ``t1`` and ``t2``.

    The k-th pair is ``(z1_k, z2_k)``, where ``z1_k`` is observed at
    ``t1`` and ``z2_k`` at ``t2``, normally on two different
    trajectories.

    Attributes:
        t1 (TimePoint): Time of first observation of each pair.
        t2 (TimePoint): Time of second observation of each pair.
        z1 (numpy.ndarray): Read-only observations at ``t1``.
        z2 (numpy.ndarray): Read-only observations at ``t2``.

    """

    t1: TimePoint
    t2: TimePoint
    z1: np.ndarray
    z2: np.ndarray

    def __post_init__(self):
        t1, t2 = TimePoint.of(self.t1), TimePoint.of(self.t2)
        if t1 == t2:
            raise ValidationError('t1 and t2 must differ')

        z1 = _frozen_array('z1 values', self.z1)
        z2 = _frozen_array('z2 values', self.z2)
        if len(z1) != len(z2):
            raise ValidationError('z1 and z2 must have the same length '
                                  '(%d != %d)' % (len(z1), len(z2)))

        object.__setattr__(self, 't1', t1)
        object.__setattr__(self, 't2', t2)
        object.__setattr__(self, 'z1', z1)
        object.__setattr__(self, 'z2', z2)

    @classmethod
    def from_pairs(cls, t1, t2, pairs):
        """Build a `PairedSample` from a sequence of ``(z1, z2)`` tuples."""
        pairs = list(pairs)
        if not pairs:
            raise ValidationError('pairs must not be empty')

        z1, z2 = zip(*pairs)
        return cls(t1, t2, z1, z2)

    def __len__(self):
        return len(self.z1)

    def __eq__(self, other):
        if not isinstance(other, PairedSample):
            return NotImplemented

        return (self.t1 == other.t1 and self.t2 == other.t2 and
                np.array_equal(self.z1, other.z1) and
                np.array_equal(self.z2, other.z2))

    @property
    def pairs(self):
        """List of ``(z1_k, z2_k)`` tuples."""
        return list(zip(self.z1.tolist(), self.z2.tolist()))

    def head(self, n):
        """Return a new sample of the first ``n`` pairs."""
        if not 1 <= n <= len(self):
            raise ValidationError('n must be in [1, %d], got %r' %
                                  (len(self), n))

        return PairedSample(self.t1, self.t2, self.z1[:n], self.z2[:n])


@dataclass(frozen=True)
class MarginalLaw:
    """Normal law of ``X_t``.

    Attributes:
        mean (float): ``x0 + mu*t``
        variance (float): ``sigma**2 * t``

    """

    mean: float
    variance: float

    def __post_init__(self):
        check_finite('mean', self.mean)
        if check_finite('variance', self.variance) < 0:
            raise ValidationError('variance must be >= 0, got %r' %
                                  self.variance)

    @property
    def std(self):
        """Standard deviation of the law."""
        return math.sqrt(self.variance)


def marginal_law(params, t):
    """Law of the process at time ``t``.

    Args:
        params (WienerParams): Process parameters.
        t (TimePoint or float): Observation time.

    Returns:
        MarginalLaw: ``Normal(x0 + mu*t, sigma**2 * t)``.

    Raises:
        ValidationError: Raised if ``t`` isn't valid.

    """
    t = TimePoint.of(t).t
    return MarginalLaw(params.x0 + params.mu * t, params.sigma2 * t)
