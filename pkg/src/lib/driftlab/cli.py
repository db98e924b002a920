# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""driftlab - simulate and estimate the Wiener process with drift.

Usage:
    dl.py simulate marginal [options]
    dl.py simulate paired [options]
    dl.py simulate paths [options]
    dl.py estimate (sigma2|mu|x0) --in=<path> [options]
    dl.py estimate joint --in=<path> [options]
    dl.py estimate pipeline --in=<path> --extra=<path> [options]
    dl.py experiment table41 [options]
    dl.py experiment sweep (sigma2|mu|x0) [options]
    dl.py experiment fixture [options]
    dl.py experiment rmse (sigma2|mu|x0|joint) [options]
    dl.py -h | --help
    dl.py --version

Commands:
    simulate marginal    Write n observations at time t as "k,z".
    simulate paired      Write n pairs at times t1, t2 as "k,z1,z2".
    simulate paths       Write series paths on [0, 1] as "t,path_1,...".
    estimate sigma2      Estimate sigma^2 from a "k,z" file (x0, mu known).
    estimate mu          Estimate mu from a "k,z" file (x0 known).
    estimate x0          Estimate x0 from a "k,z" file (mu known).
    estimate joint       Estimate (x0, mu) from a "k,z1,z2" file.
    estimate pipeline    Estimate (x0, mu) from --in, then sigma^2
                         from --extra (observed at --t).
    experiment table41   Write n series paths observed at t as "k,z".
    experiment sweep     Estimates from the first 5, 10, ... values of
                         the input file (default: the published
                         sample).
    experiment fixture   Check the published sigma^2 and mu estimates.
    experiment rmse      Monte Carlo RMSE of an estimator by sample size.

Options:
    --x0=<x>            Initial position [default: 3].
    --mu=<m>            Drift [default: -1].
    --sigma=<s>         Bombardment-force parameter [default: 2].
    --t=<t>             Observation time [default: 0.5].
    --t1=<t>            First time of paired observations [default: 0.5].
    --t2=<t>            Second time of paired observations [default: 1].
    --n=<n>             Number of observations [default: 100].
    --seed=<u64>        Master seed (default: 0).
    --terms=<N>         Sine-series truncation depth (default: 1000).
    --series            Observe series paths instead of the exact law.
    --paths=<m>         Number of paths [default: 4].
    --dt=<dt>           Grid step of paths (default: 0.0001).
    --per-path-files    Also write one "t,x" file per path.
    --in=<path>         Input CSV file.
    --extra=<path>      Extra "k,z" file for the sigma^2 step.
    --running=<path>    Write the running estimate to this CSV file.
    --burn-in=<m>       Estimates dropped before the tail min/max
                        (default: n/2).
    --step=<k>          Prefix-size step of sweeps [default: 5].
    --tol=<real>        Fixture tolerance (default: 0.002).
    --reps=<R>          Monte Carlo replications [default: 200].
    --n-max=<n>         Largest sample size of RMSE curves [default: 10000].
    --per-decade=<k>    Sample sizes per decade of RMSE curves [default: 1].
    --workers=<w>       Threads for batch simulation (default: 1).
    -o, --out=<path>    Output file, "-" for STDOUT (default: STDOUT).
    -c, --config=<path>  Read seed, terms, tol, workers and dt from
                        the [driftlab] section of this INI file.
    -l, --log=<path>    Also write log messages to this file.
    -v, --verbose       Show progress messages.
    -d, --debug         Show debugging messages.
    -h, --help          Show this message and exit.
    --version           Show version number and exit.

Exit status is 0 on success, 1 if the fixture check fails, 2 on
invalid arguments or input data and 3 if a file can't be read or
written.
"""

from contextlib import contextmanager
import logging
import os
import sys

from docopt import DocoptExit, docopt

from . import __version__, config, csvio, estimators, experiments, fixtures
from .models import MarginalSample, ValidationError
from .rng import GaussianStream
from .simulator import (
    build_paths,
    sample_marginal,
    sample_paired,
    sample_series,
)
from .util import fmtnum, setup_logging, shortpath, timed

# Value of --out meaning "write to STDOUT"
STDOUT = '-'

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_IO = 3

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@contextmanager
def output(path):
    """Context manager yielding a text file for ``path`` or STDOUT."""
    if not path or path == STDOUT:
        yield sys.stdout
        sys.stdout.flush()
        return

    with open(path, 'w', newline='', encoding='utf-8') as fp:
        yield fp

    log.info('[cli] wrote %r', shortpath(path))


def _print(fp, *pairs):
    """Print ``name value`` lines, numbers to 9 significant digits."""
    for name, value in pairs:
        if isinstance(value, float):
            value = fmtnum(value)

        print('%-12s %s' % (name, value), file=fp)


def _burn_in(cfg, n):
    burn_in = n // 2 if cfg.burn_in is None else cfg.burn_in
    if burn_in >= n:
        raise ValidationError('burn-in must be < %d, got %d' % (n, burn_in))

    return burn_in


def _read_sample(path, t):
    with open(path, newline='', encoding='utf-8') as fp:
        return csvio.read_sample(fp, t)


def _read_paired(path, t1, t2):
    with open(path, newline='', encoding='utf-8') as fp:
        return csvio.read_paired(fp, t1, t2)


def do_simulate(cfg):
    """Write simulated observations or paths."""
    p = cfg.params
    if cfg.action == 'marginal':
        if cfg.use_series:
            sample = sample_series(p, cfg.t, cfg.n, cfg.series, cfg.seed,
                                   workers=cfg.workers)
        else:
            sample = sample_marginal(p, cfg.t, cfg.n,
                                     GaussianStream(cfg.seed, 0))
        with output(cfg.outfile) as fp:
            csvio.write_sample(fp, sample)

    elif cfg.action == 'paired':
        sample = sample_paired(p, cfg.t1, cfg.t2, cfg.n, cfg.seed,
                               series=cfg.use_series, config=cfg.series,
                               workers=cfg.workers)
        with output(cfg.outfile) as fp:
            csvio.write_paired(fp, sample)

    else:
        paths = build_paths(p, cfg.series, cfg.dt, cfg.seed, cfg.paths,
                            workers=cfg.workers)
        with output(cfg.outfile) as fp:
            csvio.write_paths(fp, paths)

        if cfg.per_path_files:
            stem, ext = os.path.splitext(cfg.outfile)
            for k, path in enumerate(paths, 1):
                with output('%s_%d%s' % (stem, k, ext or '.csv')) as fp:
                    csvio.write_path(fp, path)

    return EXIT_OK


def do_estimate(cfg):
    """Print estimates computed from input files."""
    p = cfg.params
    if cfg.action == 'single':
        sample = _read_sample(cfg.infile, cfg.t)
        run = estimators.running(cfg.kind, sample, x0=p.x0, mu=p.mu)
        bounds = estimators.window_bounds(run, _burn_in(cfg, len(run)))
        with output(cfg.outfile) as fp:
            _print(fp, (cfg.kind + '_hat', run.final), ('n', len(run)),
                   ('burn_in', bounds.burn_in), ('lower', bounds.lower),
                   ('upper', bounds.upper))

        if cfg.running_out:
            with output(cfg.running_out) as fp:
                csvio.write_running(fp, run)

    elif cfg.action == 'joint':
        sample = _read_paired(cfg.infile, cfg.t1, cfg.t2)
        x0_run, mu_run = estimators.running_joint(sample)
        burn_in = _burn_in(cfg, len(sample))
        x0_b = estimators.window_bounds(x0_run, burn_in)
        mu_b = estimators.window_bounds(mu_run, burn_in)
        with output(cfg.outfile) as fp:
            _print(fp, ('x0_hat', x0_run.final), ('mu_hat', mu_run.final),
                   ('n', len(sample)), ('burn_in', burn_in),
                   ('x0_lower', x0_b.lower), ('x0_upper', x0_b.upper),
                   ('mu_lower', mu_b.lower), ('mu_upper', mu_b.upper))

    else:
        paired = _read_paired(cfg.infile, cfg.t1, cfg.t2)
        extra = _read_sample(cfg.extra, cfg.t)
        res = experiments.plugin_pipeline(paired, extra)
        # window of the plug-in sigma^2 over prefixes of the extra sample
        run = estimators.running('sigma2', extra, x0=res.x0_hat,
                                 mu=res.mu_hat)
        bounds = estimators.window_bounds(run, _burn_in(cfg, len(run)))
        with output(cfg.outfile) as fp:
            _print(fp, ('x0_hat', res.x0_hat), ('mu_hat', res.mu_hat),
                   ('sigma2_hat', res.sigma2_hat), ('n', len(run)),
                   ('burn_in', bounds.burn_in), ('lower', bounds.lower),
                   ('upper', bounds.upper))

        if cfg.running_out:
            with output(cfg.running_out) as fp:
                csvio.write_running(fp, run)

    return EXIT_OK


def do_experiment(cfg):
    """Run an experiment."""
    p = cfg.params
    if cfg.action == 'table41':
        sample = experiments.generate_table41(p, cfg.t, cfg.n, cfg.series,
                                              cfg.seed, workers=cfg.workers)
        with output(cfg.outfile) as fp:
            csvio.write_sample(fp, sample)

    elif cfg.action == 'sweep':
        if cfg.infile:
            sample = _read_sample(cfg.infile, cfg.t)
        else:
            sample = MarginalSample(cfg.t, fixtures.TABLE41)

        n_list = list(range(cfg.step, len(sample) + 1, cfg.step))
        if not n_list:
            n_list = [len(sample)]

        sweep = experiments.run_sweep(cfg.kind, sample, p, n_list)
        with output(cfg.outfile) as fp:
            csvio.write_sweep(fp, sweep)

    elif cfg.action == 'fixture':
        report = experiments.check_fixture(cfg.tol)
        with output(cfg.outfile) as fp:
            csvio.write_report(fp, report, fmt=fmtnum)

        if not report.passed:
            log.error('[cli] fixture check failed: %d/%d rows beyond %g',
                      len(report.failures), len(report.rows), cfg.tol)
            return EXIT_FAILED

    else:
        curve = experiments.consistency_curve(
            cfg.kind, p, cfg.t1 if cfg.kind == 'joint' else cfg.t,
            cfg.n_max, cfg.reps, seed=cfg.seed, t2=cfg.t2,
            per_decade=cfg.per_decade, workers=cfg.workers,
            series=cfg.use_series, config=cfg.series)
        with output(cfg.outfile) as fp:
            csvio.write_curve(fp, curve)

    return EXIT_OK


HANDLERS = {
    'simulate': do_simulate,
    'estimate': do_estimate,
    'experiment': do_experiment,
}


def _fail(msg):
    print('driftlab: %s' % msg, file=sys.stderr)


def run(argv=None):
    """Run the command-line program.

    Args:
        argv (list, optional): Command-line arguments, without the
            program name. Defaults to ``sys.argv[1:]``.

    Returns:
        int: Exit status.

    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit:
        _fail('invalid arguments, see --help')
        return EXIT_INVALID
    except SystemExit as err:  # --help and --version
        return err.code or EXIT_OK

    setup_logging(2 if args['--debug'] else int(args['--verbose']),
                  args['--log'])
    log.debug('[cli] args=%r', args)

    try:
        settings = {}
        if args['--config']:
            settings = config.read(os.path.expanduser(args['--config']))

        cfg = config.RunConfig.from_args(args, settings)
        with timed('%s %s' % (cfg.command, cfg.action)):
            return HANDLERS[cfg.command](cfg)

    except ValidationError as err:
        _fail(err)
        return EXIT_INVALID
    except OSError as err:
        _fail(err)
        return EXIT_IO


def main():
    """Entry point of the ``dl.py`` script."""
    sys.exit(run())
