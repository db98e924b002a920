# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Run configuration.

Settings come from three places. In order of precedence:

  1. Command-line flags.
  2. The ``[driftlab]`` section of an INI file passed with ``--config``.
  3. `DEFAULTS`.

Only `FILE_KEYS` may be set in the INI file. Process parameters, times
and paths are always given on the command line.
"""

from configparser import ConfigParser, Error as ConfigParserError
from dataclasses import dataclass
import logging
import os

from .models import TimePoint, ValidationError, WienerParams, check_finite
from .rng import check_seed
from .simulator import SeriesConfig, grid
from .util import shortpath

# Section of the INI file read by `read`
SECTION = 'driftlab'

DEFAULTS = {
    'seed': 0,
    'terms': 1000,
    'tol': 2e-3,
    'workers': 1,
    'dt': 1e-4,
}

# Settings that may be read from an INI file
FILE_KEYS = tuple(sorted(DEFAULTS))

# Sub-commands of each command
ACTIONS = {
    'simulate': ('marginal', 'paired', 'paths'),
    'estimate': ('joint', 'pipeline'),
    'experiment': ('table41', 'sweep', 'fixture', 'rmse'),
}

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


def positive_int(name, value):
    """Parse ``value`` as an integer >= 1 or raise `ValidationError`."""
    try:
        n = int(str(value).strip())
    except ValueError:
        raise ValidationError('%s must be a positive integer, got %r' %
                              (name, value))

    if n < 1:
        raise ValidationError('%s must be a positive integer, got %r' %
                              (name, value))

    return n


def nonneg_int(name, value):
    """Parse ``value`` as an integer >= 0 or raise `ValidationError`."""
    try:
        n = int(str(value).strip())
    except ValueError:
        raise ValidationError('%s must be an integer >= 0, got %r' %
                              (name, value))

    if n < 0:
        raise ValidationError('%s must be an integer >= 0, got %r' %
                              (name, value))

    return n


def real(name, value):
    """Parse ``value`` as a finite real or raise `ValidationError`."""
    if isinstance(value, str):
        value = value.strip()

    return check_finite(name, value)


# Parsers for values of `FILE_KEYS`
PARSERS = {
    'seed': lambda v: check_seed(str(v).strip()),
    'terms': lambda v: positive_int('terms', v),
    'tol': lambda v: real('tol', v),
    'workers': lambda v: positive_int('workers', v),
    'dt': lambda v: real('dt', v),
}


def read(path):
    """Load settings from the ``[driftlab]`` section of an INI file.

    Args:
        path (str): Path to INI file.

    Returns:
        dict: Parsed settings. Only keys present in the file.

    Raises:
        OSError: Raised if the file can't be read.
        ValidationError: Raised if the file is malformed or contains
            unknown or invalid settings.

    """
    conf = ConfigParser()
    try:
        with open(path, encoding='utf-8') as fp:
            conf.read_file(fp)
    except (ConfigParserError, UnicodeDecodeError) as err:
        raise ValidationError('invalid config file %s: %s' %
                              (shortpath(path), str(err).splitlines()[0]))

    if not conf.has_section(SECTION):
        log.warning('[config] no [%s] section in %r', SECTION, shortpath(path))
        return {}

    settings = {}
    for key, value in conf.items(SECTION):
        if key not in PARSERS:
            raise ValidationError('unknown setting %r in %s, expected one of '
                                  '%s' % (key, shortpath(path),
                                          ', '.join(FILE_KEYS)))

        settings[key] = PARSERS[key](value)
        log.debug('[config] %s=%r', key, settings[key])

    return settings


@dataclass(frozen=True)
class RunConfig:
    """Validated command-line settings.

    Attributes:
        command (str): ``simulate``, ``estimate`` or ``experiment``.
        action (str): Sub-command, e.g. ``marginal`` or ``fixture``.
        kind (str): Estimator kind, or ``None``.
        params (WienerParams): Process parameters.
        t (TimePoint): Observation time.
        t1 (TimePoint): First time of paired observations.
        t2 (TimePoint): Second time of paired observations.
        n (int): Number of observations.
        seed (int): Master seed.
        series (SeriesConfig): Series truncation.
        use_series (bool): Sample series paths instead of the exact law.
        paths (int): Number of paths to build.
        dt (float): Grid step of paths.
        per_path_files (bool): Write one CSV per path.
        burn_in (int): Burn-in of window bounds, ``None`` for n/2.
        tol (float): Tolerance of the fixture check.
        reps (int): Replications of the RMSE curve.
        n_max (int): Largest sample size of the RMSE curve.
        per_decade (int): Sample sizes per decade of the RMSE curve.
        step (int): Prefix-size step of sweeps.
        workers (int): Threads to use.
        infile (str): Input CSV.
        extra (str): Extra input CSV of the pipeline.
        outfile (str): Output CSV, ``None`` for STDOUT.
        running_out (str): Output CSV of the running estimate.

    """

    command: str
    action: str
    kind: str
    params: WienerParams
    t: TimePoint
    t1: TimePoint
    t2: TimePoint
    n: int
    seed: int
    series: SeriesConfig
    use_series: bool
    paths: int
    dt: float
    per_path_files: bool
    burn_in: int
    tol: float
    reps: int
    n_max: int
    per_decade: int
    step: int
    workers: int
    infile: str
    extra: str
    outfile: str
    running_out: str

    @property
    def paired(self):
        """``True`` if the command works on paired observations."""
        return (self.action in ('paired', 'joint', 'pipeline') or
                (self.action == 'rmse' and self.kind == 'joint'))

    @classmethod
    def from_args(cls, args, settings=None):
        """Build a `RunConfig` from parsed docopt arguments.

        Args:
            args (dict): Result of `docopt.docopt`.
            settings (dict, optional): Settings read from a config
                file with `read`.

        Returns:
            RunConfig: Validated settings.

        Raises:
            ValidationError: Raised if a value or a combination of
                flags is invalid.

        """
        settings = settings or {}

        def setting(key, flag):
            if args.get(flag) is not None:
                return PARSERS[key](args[flag])

            return settings.get(key, DEFAULTS[key])

        command = next(c for c in ACTIONS if args.get(c))
        # `estimate sigma2` etc. have no action word of their own
        action = next((a for a in ACTIONS[command] if args.get(a)), 'single')
        kind = None
        if action in ('single', 'sweep', 'rmse'):
            kind = next(k for k in ('sigma2', 'mu', 'x0', 'joint')
                        if args.get(k))

        params = WienerParams(real('x0', args['--x0']),
                              real('mu', args['--mu']),
                              real('sigma', args['--sigma']))

        dt = setting('dt', '--dt')
        if action == 'paths':
            grid(dt)

        burn_in = None
        if args.get('--burn-in') is not None:
            burn_in = nonneg_int('burn-in', args['--burn-in'])

        cfg = cls(
            command=command,
            action=action,
            kind=kind,
            params=params,
            t=TimePoint(real('t', args['--t'])),
            t1=TimePoint(real('t1', args['--t1'])),
            t2=TimePoint(real('t2', args['--t2'])),
            n=positive_int('n', args['--n']),
            seed=setting('seed', '--seed'),
            series=SeriesConfig(setting('terms', '--terms')),
            use_series=bool(args.get('--series')),
            paths=positive_int('paths', args['--paths']),
            dt=dt,
            per_path_files=bool(args.get('--per-path-files')),
            burn_in=burn_in,
            tol=setting('tol', '--tol'),
            reps=positive_int('reps', args['--reps']),
            n_max=positive_int('n-max', args['--n-max']),
            per_decade=positive_int('per-decade', args['--per-decade']),
            step=positive_int('step', args['--step']),
            workers=setting('workers', '--workers'),
            infile=_path(args.get('--in')),
            extra=_path(args.get('--extra')),
            outfile=_path(args.get('--out')),
            running_out=_path(args.get('--running')),
        )
        cfg.validate()
        log.debug('[config] %r', cfg)
        return cfg

    def validate(self):
        """Check combinations of settings.

        Raises:
            ValidationError: Raised if settings conflict.

        """
        if self.paired and self.t1 == self.t2:
            raise ValidationError('t1 and t2 must differ')

        if self.tol < 0:
            raise ValidationError('tol must be >= 0, got %r' % self.tol)

        if self.per_path_files and self.outfile in (None, '-'):
            raise ValidationError('--per-path-files needs --out')

        if self.use_series:
            times = (self.t1, self.t2) if self.paired else (self.t,)
            for t in times:
                if t.t > 1:
                    raise ValidationError('t must be <= 1 for series paths, '
                                          'got %r' % t.t)

        if self.action == 'rmse' and self.n_max < 10:
            raise ValidationError('n-max must be >= 10, got %r' % self.n_max)


def _path(value):
    if value is None:
        return None

    return os.path.expanduser(value)
