# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Common helper functions."""

from contextlib import contextmanager
import logging
import logging.handlers
import math
import os
import time

log = logging.getLogger(__name__)

# Format of log messages. Same for console and log file.
LOG_FORMAT = '%(asctime)s %(filename)s:%(lineno)s %(levelname)-8s %(message)s'
LOG_DATE_FORMAT = '%H:%M:%S'

# Significant digits of numbers printed to the console
SIG_DIGITS = 9


def setup_logging(verbosity=0, logfile=None):
    """Configure the root logger for the command-line program.

    Logs go to STDERR, so they never mix with data written to STDOUT.

    Args:
        verbosity (int, optional): 0 for WARNING, 1 for INFO,
            2 or more for DEBUG.
        logfile (str, optional): Also log to this file (rotated
            at 1 MB).

    Returns:
        logging.Logger: The configured root logger.

    """
    logger = logging.getLogger('')

    # Only add one set of handlers
    # Exclude from coverage, as pytest will have configured the
    # root logger already
    if not len(logger.handlers):  # pragma: no cover
        fmt = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

        console = logging.StreamHandler()
        console.setFormatter(fmt)
        logger.addHandler(console)

        if logfile:
            handler = logging.handlers.RotatingFileHandler(
                logfile,
                maxBytes=1024 * 1024,
                backupCount=1)
            handler.setFormatter(fmt)
            logger.addHandler(handler)

    if verbosity >= 2:
        logger.setLevel(logging.DEBUG)
    elif verbosity == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.WARNING)

    return logger


@contextmanager
def timed(name=None):
    """Context manager that logs execution time."""
    name = name or ''
    start_time = time.time()
    yield
    log.info('[%0.2fs] %s', time.time() - start_time, name)


def fmtnum(x, digits=SIG_DIGITS):
    """Format a number with ``digits`` significant digits.

    Args:
        x (float): Number to format.
        digits (int, optional): Significant digits.

    Returns:
        str: Formatted number, e.g. ``3.66311206``.

    """
    return '{:.{}g}'.format(float(x), digits)


def fmtexact(x):
    """Shortest string that reads back as exactly ``x``.

    Used for CSV output, so files round-trip without loss.
    """
    return repr(float(x))


def log_spaced(n_min, n_max, per_decade=1):
    """Integers spread evenly on a log scale between two bounds.

    Powers of 10 between the bounds are always included (for
    ``per_decade >= 1``), as are ``n_min`` and ``n_max``.

    Args:
        n_min (int): Smallest value.
        n_max (int): Largest value.
        per_decade (int, optional): Points per factor of 10.

    Returns:
        list: Strictly increasing integers.

    """
    lo, hi = math.log10(n_min), math.log10(n_max)
    first = math.ceil(lo * per_decade - 1e-9)
    last = math.floor(hi * per_decade + 1e-9)
    points = {n_min, n_max}
    for i in range(first, last + 1):
        n = int(round(10 ** (i / per_decade)))
        if n_min <= n <= n_max:
            points.add(n)

    return sorted(points)


def shortpath(p):
    """Replace ``$HOME`` in path with ~."""
    if not p:
        return p

    h = os.path.expanduser(u'~')
    return p.replace(h, '~')
