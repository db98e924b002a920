# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Simulate the Wiener process with drift.

Two ways of generating observations are provided:

  - Exact marginal sampling, ``z = x0 + mu*t + sigma*sqrt(t)*xi``
    (`sample_marginal`, `sample_paired`).
  - The truncated sine series on ``[0, 1]``

        x(t) = x0 + mu*t + sigma*(d_0*t
               + sqrt(2) * sum_{n=1}^{N} d_n*sin(pi*n*t)/(pi*n))

    with independent standard normal ``d_0..d_N`` per trajectory
    (`build_path`, `path_value_at`, `sample_series`).

Each trajectory draws its coefficients from its own `GaussianStream`,
so trajectory ``k`` is the same whichever order (or thread) it is
generated in.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import math

import numpy as np

from .models import (
    MarginalSample,
    PairedSample,
    TimePoint,
    ValidationError,
    check_finite,
)
from .rng import GaussianStream, draw_standard_normals, spawn_streams
from .util import timed

# Truncation depth of the sine series
DEFAULT_TERMS = 1000
# Step of the time grid of `build_path`
DEFAULT_DT = 1e-4
# Number of trajectories of `build_paths`
DEFAULT_PATHS = 4

# Rows (time points) evaluated per block in `_series_noise`
BLOCK_ROWS = 256

# Accumulator for series sums
ACCUMULATOR = np.longdouble

# Relative slack allowed when checking that dt divides 1
DT_TOLERANCE = 1e-9

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation of the sine series.

    Attributes:
        terms (int): Number of sine terms N, >= 1.

    """

    terms: int = DEFAULT_TERMS

    def __post_init__(self):
        terms = self.terms
        if isinstance(terms, bool) or int(terms) != terms or terms < 1:
            raise ValidationError('terms must be a positive integer, got %r' %
                                  terms)

        object.__setattr__(self, 'terms', int(terms))

    @property
    def draws(self):
        """Normal draws consumed per trajectory (``d_0..d_N``)."""
        return self.terms + 1


@dataclass(frozen=True, eq=False)
class PathGrid:
    """One trajectory evaluated on a uniform grid over ``[0, 1]``.

    Attributes:
        times (numpy.ndarray): Grid ``0 = t_0 < t_1 < ... < t_m = 1``.
        values (numpy.ndarray): Trajectory value at each grid point.

    """

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise ValidationError('times and values must have the same '
                                  'length')

        for name in ('times', 'values'):
            arr = np.array(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def __len__(self):
        return len(self.times)

    def __eq__(self, other):
        if not isinstance(other, PathGrid):
            return NotImplemented

        return (np.array_equal(self.times, other.times) and
                np.array_equal(self.values, other.values))

    @property
    def dt(self):
        """Grid step."""
        return 1.0 / (len(self.times) - 1)


def _check_count(name, n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValidationError('%s must be a positive integer, got %r' %
                              (name, n))

    return int(n)


def _series_time(t):
    """Validate a time inside the domain of the sine series."""
    t = TimePoint.of(t).t
    if t > 1:
        raise ValidationError('t must be <= 1 for series paths, got %r' % t)

    return t


def grid(dt):
    """Uniform time grid over ``[0, 1]`` with step ``dt``.

    Args:
        dt (float): Grid step in ``(0, 1]``. Must divide 1.

    Returns:
        numpy.ndarray: ``[0, 1/m, 2/m, ..., 1]`` where ``m = 1/dt``.

    Raises:
        ValidationError: Raised if ``dt`` is out of range or doesn't
            divide 1.

    """
    dt = check_finite('dt', dt)
    if not 0 < dt <= 1:
        raise ValidationError('dt must be in (0, 1], got %r' % dt)

    m = int(round(1.0 / dt))
    if abs(m * dt - 1.0) > DT_TOLERANCE:
        raise ValidationError('dt must divide 1, got %r' % dt)

    return np.arange(m + 1) / m


def _series_noise(d, times):
    """Truncated series ``d_0*t + sqrt(2)*sum d_n*sin(pi*n*t)/(pi*n)``.

    Terms are accumulated in ascending ``n`` in `ACCUMULATOR`
    precision. Each time point is computed independently of the
    others, so a point gives the same value whether evaluated alone or
    as part of a grid.

    Args:
        d (numpy.ndarray): Coefficients ``d_0..d_N``.
        times (numpy.ndarray): Times in ``[0, 1]``.

    Returns:
        numpy.ndarray: Noise term at each time.

    """
    n = np.arange(1, len(d))
    pin = np.pi * n
    coeffs = math.sqrt(2) * d[1:] / pin
    out = np.empty(len(times), dtype=float)

    for start in range(0, len(times), BLOCK_ROWS):
        t = times[start:start + BLOCK_ROWS]
        terms = np.empty((len(t), len(d)), dtype=ACCUMULATOR)
        terms[:, 0] = d[0] * t
        terms[:, 1:] = coeffs * np.sin(np.outer(t, pin))
        out[start:start + BLOCK_ROWS] = np.cumsum(terms, axis=1)[:, -1]

    return out


def _line_plus_noise(params, times, noise):
    return params.x0 + params.mu * times + params.sigma * noise


def truncated_variance(t, terms=DEFAULT_TERMS, sigma=1.0):
    """Variance at ``t`` of a series path truncated after ``terms`` terms.

    ``sigma**2 * (t**2 + 2 * sum_{n=1}^{N} sin(pi*n*t)**2 / (pi*n)**2)``,
    which increases with N towards ``sigma**2 * t``.

    Args:
        t (float): Time in ``(0, 1]``.
        terms (int, optional): Truncation depth N.
        sigma (float, optional): Bombardment-force parameter.

    Returns:
        float: Variance of the truncated series at ``t``.

    """
    t = _series_time(t)
    terms = SeriesConfig(terms).terms
    sigma = check_finite('sigma', sigma)
    pin = np.pi * np.arange(1, terms + 1)
    tail = np.sum(np.sin(pin * t) ** 2 / pin ** 2)
    return sigma * sigma * (t * t + 2.0 * float(tail))


def sample_marginal(params, t, n, stream, normals=None):
    """Sample the exact law of the process at time ``t``.

    Args:
        params (WienerParams): Process parameters.
        t (TimePoint or float): Observation time.
        n (int): Number of independent trajectories, >= 1.
        stream (GaussianStream): Source of the ``n`` normal draws.
        normals (array-like, optional): Use these standard normal
            values instead of drawing from ``stream``.

    Returns:
        MarginalSample: ``z_k = x0 + mu*t + sigma*sqrt(t)*xi_k``.

    Raises:
        ValidationError: Raised if ``t`` or ``n`` is invalid.

    """
    t = TimePoint.of(t)
    n = _check_count('n', n)
    if normals is None:
        xi = draw_standard_normals(stream, n)
    else:
        xi = np.asarray(normals, dtype=float)
        if xi.shape != (n,):
            raise ValidationError('expected %d normals, got %d' %
                                  (n, xi.size))

    mean = params.x0 + params.mu * t.t
    scale = params.sigma * math.sqrt(t.t)
    return MarginalSample(t, mean + scale * xi)


def build_path(params, config, dt, stream):
    """Evaluate one series trajectory on a uniform grid over ``[0, 1]``.

    Args:
        params (WienerParams): Process parameters.
        config (SeriesConfig): Truncation of the series.
        dt (float): Grid step in ``(0, 1]``, must divide 1.
        stream (GaussianStream): Source of ``d_0..d_N``.

    Returns:
        PathGrid: The trajectory. ``values[0] == x0`` exactly.

    Raises:
        ValidationError: Raised if ``dt`` is invalid.

    """
    times = grid(dt)
    d = draw_standard_normals(stream, config.draws)
    values = _line_plus_noise(params, times, _series_noise(d, times))
    log.debug('[simulator] path %d: %d points, %d terms',
              stream.stream_index, len(times), config.terms)
    return PathGrid(times, values)


def path_value_at(params, config, t, stream):
    """Value at ``t`` of the series trajectory drawn from ``stream``.

    Equal to the `build_path` grid value at ``t`` (same stream,
    same config) when ``t`` lies on the grid.

    Args:
        params (WienerParams): Process parameters.
        config (SeriesConfig): Truncation of the series.
        t (TimePoint or float): Time in ``(0, 1]``.
        stream (GaussianStream): Source of ``d_0..d_N``.

    Returns:
        float: Trajectory value.

    Raises:
        ValidationError: Raised if ``t`` is outside ``(0, 1]``.

    """
    times = np.array([_series_time(t)])
    d = draw_standard_normals(stream, config.draws)
    return float(_line_plus_noise(params, times, _series_noise(d, times))[0])


def _map(func, items, workers):
    """Apply ``func`` to ``items`` in order, optionally on threads."""
    if workers <= 1:
        return [func(x) for x in items]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def sample_series(params, t, n, config=None, seed=0, start=0, workers=1):
    """Observe ``n`` series trajectories at time ``t``.

    Trajectory ``k`` (0-based) uses substream ``start + k`` of ``seed``.

    Args:
        params (WienerParams): Process parameters.
        t (TimePoint or float): Time in ``(0, 1]``.
        n (int): Number of trajectories.
        config (SeriesConfig, optional): Truncation of the series.
        seed (int, optional): Master seed.
        start (int, optional): Substream of the first trajectory.
        workers (int, optional): Threads to use.

    Returns:
        MarginalSample: One value per trajectory.

    """
    config = config or SeriesConfig()
    t = _series_time(t)
    n = _check_count('n', n)
    streams = spawn_streams(seed, n, start)

    with timed('%d series values at t=%g' % (n, t)):
        values = _map(lambda s: path_value_at(params, config, t, s),
                      streams, workers)

    return MarginalSample(t, values)


def sample_paired(params, t1, t2, n, seed=0, series=False, config=None,
                  workers=1):
    """Observe ``n`` pairs at times ``t1`` and ``t2``.

    Each pair comes from two independent trajectories. In series mode,
    ``z1_k`` is read from trajectory ``2k`` and ``z2_k`` from
    trajectory ``2k + 1``. In exact mode, ``z1`` is drawn from substream
    0 and ``z2`` from substream 1.

    Args:
        params (WienerParams): Process parameters.
        t1 (TimePoint or float): First observation time.
        t2 (TimePoint or float): Second observation time, != ``t1``.
        n (int): Number of pairs.
        seed (int, optional): Master seed.
        series (bool, optional): Use series trajectories.
        config (SeriesConfig, optional): Truncation of the series.
        workers (int, optional): Threads to use in series mode.

    Returns:
        PairedSample: The ``n`` pairs.

    Raises:
        ValidationError: Raised if ``t1 == t2`` or ``n`` < 1.

    """
    t1, t2 = TimePoint.of(t1), TimePoint.of(t2)
    if t1 == t2:
        raise ValidationError('t1 and t2 must differ')

    n = _check_count('n', n)
    if not series:
        z1 = sample_marginal(params, t1, n, GaussianStream(seed, 0)).values
        z2 = sample_marginal(params, t2, n, GaussianStream(seed, 1)).values
        return PairedSample(t1, t2, z1, z2)

    config = config or SeriesConfig()
    a, b = _series_time(t1), _series_time(t2)

    def pair(k):
        return (path_value_at(params, config, a, GaussianStream(seed, 2 * k)),
                path_value_at(params, config, b,
                              GaussianStream(seed, 2 * k + 1)))

    with timed('%d series pairs at t1=%g, t2=%g' % (n, a, b)):
        pairs = _map(pair, range(n), workers)

    return PairedSample.from_pairs(t1, t2, pairs)


def build_paths(params, config=None, dt=DEFAULT_DT, seed=0,
                count=DEFAULT_PATHS, workers=1):
    """Build ``count`` series trajectories on the same grid.

    Trajectory ``k`` (0-based) uses substream ``k`` of ``seed``.

    Returns:
        list: `PathGrid` objects.

    """
    config = config or SeriesConfig()
    count = _check_count('count', count)
    grid(dt)  # fail early on a bad step

    with timed('%d paths, dt=%g, %d terms' % (count, dt, config.terms)):
        return _map(lambda s: build_path(params, config, dt, s),
                    spawn_streams(seed, count), workers)
