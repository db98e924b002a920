# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Numerical experiments.

  - `generate_table41`: 100 series trajectories observed at ``t = 0.5``.
  - `run_sweep`: estimates from growing prefixes of a sample.
  - `check_fixture`: golden check of the published estimates.
  - `plugin_pipeline`: joint ``(x0, mu)`` estimate, then ``sigma**2``.
  - `consistency_curve`: Monte Carlo RMSE of an estimator against n.
  - `marginal_ks`: Kolmogorov-Smirnov check of series-path values.
"""

from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
import logging
import math

import numpy as np
from scipy import stats

from . import fixtures
from .estimators import (
    KINDS,
    MU,
    SIGMA2,
    X0,
    estimate_joint,
    estimate_sigma2,
    running,
    running_joint,
)
from .models import (
    MarginalSample,
    PairedSample,
    TimePoint,
    ValidationError,
    marginal_law,
)
from .rng import GaussianStream
from .simulator import (
    SeriesConfig,
    sample_marginal,
    sample_series,
    truncated_variance,
)
from .util import log_spaced, timed

# Largest |computed - expected| accepted by `check_fixture`
FIXTURE_TOLERANCE = 2e-3

# Kind of `consistency_curve` for the joint (x0, mu) estimator
JOINT = 'joint'
CURVE_KINDS = KINDS + (JOINT,)

# Smallest sample size of a consistency curve
CURVE_N_MIN = 10

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


SweepRow = namedtuple('SweepRow', 'n estimate true_value')
FixtureRow = namedtuple('FixtureRow', 'kind n computed expected delta passed')
CurveRow = namedtuple('CurveRow', 'n rmse')
PipelineEstimate = namedtuple('PipelineEstimate', 'x0_hat mu_hat sigma2_hat')
KSResult = namedtuple('KSResult', 'statistic pvalue')


class SweepResult(namedtuple('SweepResult', 'kind rows')):
    """Estimates from prefixes of increasing size.

    Attributes:
        kind (str): Estimator kind.
        rows (tuple): `SweepRow` tuples, ``n`` strictly increasing.

    """

    __slots__ = ()

    @property
    def estimates(self):
        """Estimates in row order."""
        return [r.estimate for r in self.rows]


class FixtureReport(namedtuple('FixtureReport', 'rows tolerance')):
    """Result of `check_fixture`.

    Attributes:
        rows (tuple): `FixtureRow` tuples, sigma2 rows then mu rows.
        tolerance (float): Largest accepted deviation.

    """

    __slots__ = ()

    @property
    def failures(self):
        """Rows that deviate by more than `tolerance`."""
        return [r for r in self.rows if not r.passed]

    @property
    def passed(self):
        """``True`` if every row is within `tolerance`."""
        return not self.failures


class RMSECurve(namedtuple('RMSECurve', 'kind replications rows')):
    """Root mean squared error of an estimator by sample size.

    Attributes:
        kind (str): Estimator kind.
        replications (int): Number of Monte Carlo replications.
        rows (tuple): `CurveRow` tuples, ``n`` strictly increasing.

    """

    __slots__ = ()

    def rmse(self, n):
        """RMSE at sample size ``n``."""
        for row in self.rows:
            if row.n == n:
                return row.rmse

        raise KeyError(n)

    def decade_ratios(self):
        """``rmse(n) / rmse(10*n)`` for each n where both are present."""
        by_n = dict(self.rows)
        return [by_n[n] / by_n[n * 10] for n in sorted(by_n)
                if n * 10 in by_n]


def truth(kind, params):
    """True value of the parameter estimated by ``kind``."""
    if kind == SIGMA2:
        return params.sigma2
    if kind == MU:
        return params.mu
    if kind == X0:
        return params.x0

    raise ValidationError('unknown estimator %r' % kind)


def generate_table41(params=fixtures.PARAMS, t=fixtures.T, count=100,
                     config=None, seed=0, workers=1):
    """Observe ``count`` series trajectories at time ``t``.

    Defaults reproduce the published setting: ``x0 = 3, mu = -1,
    sigma = 2, t = 0.5``, 100 trajectories, 1000 series terms.
    Trajectory ``k`` uses substream ``k`` of ``seed``.

    Returns:
        MarginalSample: ``count`` values.

    """
    return sample_series(params, t, count, config=config or SeriesConfig(),
                         seed=seed, workers=workers)


def _check_ns(n_list, size):
    ns = [int(n) for n in n_list]
    if not ns:
        raise ValidationError('n_list must not be empty')

    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValidationError('n_list must be strictly increasing')

    if ns[0] < 1:
        raise ValidationError('n_list values must be >= 1')

    if ns[-1] > size:
        raise ValidationError('n=%d exceeds sample size %d' % (ns[-1], size))

    return ns


def run_sweep(kind, sample, params, n_list=fixtures.SWEEP_NS):
    """Estimates from the first ``n`` values of ``sample``, for each n.

    Args:
        kind (str): Estimator kind (see `estimators.KINDS`).
        sample (MarginalSample): Observations.
        params (WienerParams): Known parameters. Also supplies the
            true value of the estimated parameter.
        n_list (sequence, optional): Strictly increasing prefix sizes.

    Returns:
        SweepResult: One row per prefix size.

    Raises:
        ValidationError: Raised if an ``n`` exceeds the sample size.

    """
    ns = _check_ns(n_list, len(sample))
    run = running(kind, sample, x0=params.x0, mu=params.mu)
    true_value = truth(kind, params)
    rows = tuple(SweepRow(n, run.at(n), true_value) for n in ns)
    return SweepResult(kind, rows)


def check_fixture(tolerance=FIXTURE_TOLERANCE, table=None):
    """Recompute the published estimates and compare.

    Args:
        tolerance (float, optional): Largest accepted deviation.
        table (sequence, optional): Use these 100 values instead of
            the embedded ones.

    Returns:
        FixtureReport: 40 rows, 20 for ``sigma2``, 20 for ``mu``.

    """
    table = fixtures.TABLE41 if table is None else table
    sample = MarginalSample(fixtures.T, table)
    rows = []
    for kind, expected in ((SIGMA2, fixtures.EXPECTED_SIGMA2),
                           (MU, fixtures.EXPECTED_MU)):
        sweep = run_sweep(kind, sample, fixtures.PARAMS, fixtures.SWEEP_NS)
        for row, want in zip(sweep.rows, expected):
            delta = abs(row.estimate - want)
            rows.append(FixtureRow(kind, row.n, row.estimate, want, delta,
                                   delta <= tolerance))

    report = FixtureReport(tuple(rows), tolerance)
    log.info('[experiments] fixture: %d/%d rows within %g',
             len(rows) - len(report.failures), len(rows), tolerance)
    return report


def plugin_pipeline(paired, extra):
    """Estimate ``x0``, ``mu`` and then ``sigma**2``.

    ``(x0, mu)`` are estimated from ``paired``, then plugged into the
    ``sigma**2`` estimator applied to ``extra``.

    Args:
        paired (PairedSample): Pairs at ``t1 != t2``.
        extra (MarginalSample): Further observations at any ``t > 0``.

    Returns:
        PipelineEstimate: ``(x0_hat, mu_hat, sigma2_hat)``

    """
    joint = estimate_joint(paired)
    sigma2 = estimate_sigma2(extra, joint.x0_hat, joint.mu_hat)
    return PipelineEstimate(joint.x0_hat, joint.mu_hat, sigma2)


def _draw(params, t, n, seed, substream, series, config):
    """``n`` observations at ``t`` for one block of a replication.

    Exact draws use ``substream`` itself. Series trajectories use the
    ``n`` substreams from ``substream * n`` onwards.
    """
    if series:
        return sample_series(params, t, n, config, seed, start=substream * n)

    return sample_marginal(params, t, n, GaussianStream(seed, substream))


def _squared_errors(kind, params, t, t2, ns, seed, r, n_max, series=False,
                    config=None):
    """Squared errors at each n in ``ns`` for replication ``r``."""
    idx = np.asarray(ns) - 1
    if kind == JOINT:
        z1 = _draw(params, t, n_max, seed, 2 * r, series, config)
        z2 = _draw(params, t2, n_max, seed, 2 * r + 1, series, config)
        x0_run, mu_run = running_joint(
            PairedSample(t, t2, z1.values, z2.values))
        ex = x0_run.values[idx] - params.x0
        em = mu_run.values[idx] - params.mu
        return ex * ex + em * em

    sample = _draw(params, t, n_max, seed, r, series, config)
    run = running(kind, sample, x0=params.x0, mu=params.mu)
    err = run.values[idx] - truth(kind, params)
    return err * err


def consistency_curve(kind, params, t, n_max, replications, seed=0, t2=None,
                      per_decade=1, workers=1, series=False, config=None):
    """Monte Carlo RMSE of an estimator at log-spaced sample sizes.

    Replication ``r`` draws its sample from substream ``r`` of ``seed``
    (substreams ``2r`` and ``2r + 1`` for ``joint``), so the result does
    not depend on ``workers``. With ``series``, observations are read
    from series trajectories instead, and block ``b`` takes substreams
    ``b*n_max`` to ``(b + 1)*n_max - 1``.

    Args:
        kind (str): One of `CURVE_KINDS`.
        params (WienerParams): True parameters.
        t (TimePoint or float): Observation time (``t1`` for ``joint``).
        n_max (int): Largest sample size, >= 10.
        replications (int): Number of replications, >= 1.
        seed (int, optional): Master seed.
        t2 (TimePoint or float, optional): Second time for ``joint``.
        per_decade (int, optional): Sample sizes per factor of 10.
        workers (int, optional): Threads to run replications on.
        series (bool, optional): Observe series trajectories instead of
            the exact law. Times must be <= 1.
        config (SeriesConfig, optional): Truncation of the series.

    Returns:
        RMSECurve: RMSE by sample size. For ``joint`` the error is the
        Euclidean distance of ``(x0_hat, mu_hat)`` from ``(x0, mu)``.

    """
    if kind not in CURVE_KINDS:
        raise ValidationError('unknown estimator %r, expected one of %s' %
                              (kind, ', '.join(CURVE_KINDS)))

    if int(n_max) != n_max or n_max < CURVE_N_MIN:
        raise ValidationError('n_max must be an integer >= %d, got %r' %
                              (CURVE_N_MIN, n_max))

    if int(replications) != replications or replications < 1:
        raise ValidationError('replications must be an integer >= 1, got %r'
                              % replications)

    if int(per_decade) != per_decade or per_decade < 1:
        raise ValidationError('per_decade must be an integer >= 1, got %r'
                              % per_decade)

    t = TimePoint.of(t)
    if kind == JOINT:
        if t2 is None:
            raise ValidationError('joint estimator needs t2')

        t2 = TimePoint.of(t2)
        if t2 == t:
            raise ValidationError('t1 and t2 must differ')

    if series:
        for u in (t, t2) if kind == JOINT else (t,):
            if u.t > 1:
                raise ValidationError('t must be <= 1 for series paths, '
                                      'got %r' % u.t)

    n_max, replications = int(n_max), int(replications)
    ns = log_spaced(CURVE_N_MIN, n_max, int(per_decade))

    def replicate(r):
        return _squared_errors(kind, params, t, t2, ns, seed, r, n_max,
                               series, config)

    with timed('%s curve: %d replications, n_max=%d' %
               (kind, replications, n_max)):
        if workers <= 1:
            errors = [replicate(r) for r in range(replications)]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                errors = list(pool.map(replicate, range(replications)))

    rmse = np.sqrt(np.mean(np.vstack(errors), axis=0))
    rows = tuple(CurveRow(n, float(v)) for n, v in zip(ns, rmse))
    return RMSECurve(kind, replications, rows)


def marginal_ks(params, t, n, config=None, seed=0, workers=1):
    """Kolmogorov-Smirnov test of series-path values at time ``t``.

    Compares ``n`` trajectory values with the law they should follow,
    ``Normal(x0 + mu*t, v_N(t))``, where ``v_N`` is the variance of the
    truncated series.

    Returns:
        KSResult: ``(statistic, pvalue)``

    Raises:
        ValidationError: Raised if ``sigma`` is 0 (degenerate law).

    """
    if params.sigma == 0:
        raise ValidationError('sigma must be > 0 for a KS test')

    config = config or SeriesConfig()
    sample = sample_series(params, t, n, config=config, seed=seed,
                           workers=workers)
    mean = marginal_law(params, sample.t).mean
    sd = math.sqrt(truncated_variance(sample.t, config.terms, params.sigma))
    res = stats.kstest(sample.values, 'norm', args=(mean, sd))
    log.debug('[experiments] KS D=%g, p=%g', res.statistic, res.pvalue)
    return KSResult(float(res.statistic), float(res.pvalue))
