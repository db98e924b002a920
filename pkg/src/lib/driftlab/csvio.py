# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Read and write samples, paths and results as CSV.

All files have a mandatory header row, comma separators and LF line
endings. Floats are written with `repr`, so a sample read back from a
file is bit-for-bit the sample that was written.

Formats:

  - sample: ``k,z``
  - paired sample: ``k,z1,z2``
  - paths (wide): ``t,path_1,...,path_m``
  - single path: ``t,x``
  - running estimate: ``n,estimate``
  - sweep: ``n,estimate,true_value``
  - RMSE curve: ``n,rmse``
  - fixture report: ``kind,n,computed,expected,delta,status``
"""

import csv
import logging

from .models import MarginalSample, PairedSample, ValidationError
from .util import fmtexact

SAMPLE_HEADER = ['k', 'z']
PAIRED_HEADER = ['k', 'z1', 'z2']
PATH_HEADER = ['t', 'x']
RUNNING_HEADER = ['n', 'estimate']
SWEEP_HEADER = ['n', 'estimate', 'true_value']
CURVE_HEADER = ['n', 'rmse']
REPORT_HEADER = ['kind', 'n', 'computed', 'expected', 'delta', 'status']

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class CSVFormatError(ValidationError):
    """Raised if an input CSV file is malformed."""


def writer(fp):
    """`csv.writer` with LF line endings."""
    return csv.writer(fp, lineterminator='\n')


def _read_columns(fp, header):
    """Read numeric columns of a CSV file with ``header``.

    The first column must hold the row numbers ``1..n``.

    Returns:
        list: One list of floats per column after the first.

    """
    name = getattr(fp, 'name', '<stream>')
    try:
        return _parse_columns(csv.reader(fp), name, header)
    except (csv.Error, UnicodeDecodeError) as err:
        raise CSVFormatError('%s: unreadable: %s' % (name, err))


def _parse_columns(reader, name, header):
    """Columns of ``reader``. Decoding errors propagate."""
    try:
        got = next(reader)
    except StopIteration:
        raise CSVFormatError('%s is empty' % name)

    if [h.strip() for h in got] != header:
        raise CSVFormatError('%s: expected header %r, got %r' %
                             (name, ','.join(header), ','.join(got)))

    columns = [[] for _ in header[1:]]
    i = 0
    for row in reader:
        if not row:
            continue

        i += 1
        if len(row) != len(header):
            raise CSVFormatError('%s, line %d: expected %d fields, got %d'
                                 % (name, reader.line_num, len(header),
                                    len(row)))

        try:
            k = int(row[0])
            values = [float(v) for v in row[1:]]
        except ValueError:
            raise CSVFormatError('%s, line %d: not a number: %r' %
                                 (name, reader.line_num, ','.join(row)))

        if k != i:
            raise CSVFormatError('%s, line %d: expected %s=%d, got %d' %
                                 (name, reader.line_num, header[0], i, k))

        for col, v in zip(columns, values):
            col.append(v)

    if not columns[0]:
        raise CSVFormatError('%s has no data rows' % name)

    log.debug('[csvio] read %d rows from %r', len(columns[0]), name)
    return columns


def read_sample(fp, t):
    """Read a ``k,z`` sample observed at time ``t``.

    Args:
        fp (file): Open text file.
        t (TimePoint or float): Observation time.

    Returns:
        MarginalSample: The sample.

    Raises:
        CSVFormatError: Raised if the file is malformed.

    """
    (z,) = _read_columns(fp, SAMPLE_HEADER)
    return MarginalSample(t, z)


def read_paired(fp, t1, t2):
    """Read a ``k,z1,z2`` paired sample observed at ``t1`` and ``t2``."""
    z1, z2 = _read_columns(fp, PAIRED_HEADER)
    return PairedSample(t1, t2, z1, z2)


def write_sample(fp, sample):
    """Write a `MarginalSample` as ``k,z``."""
    w = writer(fp)
    w.writerow(SAMPLE_HEADER)
    for k, z in enumerate(sample.values.tolist(), 1):
        w.writerow([k, fmtexact(z)])


def write_paired(fp, sample):
    """Write a `PairedSample` as ``k,z1,z2``."""
    w = writer(fp)
    w.writerow(PAIRED_HEADER)
    for k, (z1, z2) in enumerate(sample.pairs, 1):
        w.writerow([k, fmtexact(z1), fmtexact(z2)])


def write_paths(fp, paths):
    """Write `PathGrid` objects sharing one grid in wide format."""
    w = writer(fp)
    w.writerow(['t'] + ['path_%d' % k for k in range(1, len(paths) + 1)])
    columns = [p.values.tolist() for p in paths]
    for i, t in enumerate(paths[0].times.tolist()):
        w.writerow([fmtexact(t)] + [fmtexact(c[i]) for c in columns])


def write_path(fp, path):
    """Write one `PathGrid` as ``t,x``."""
    w = writer(fp)
    w.writerow(PATH_HEADER)
    for t, x in zip(path.times.tolist(), path.values.tolist()):
        w.writerow([fmtexact(t), fmtexact(x)])


def write_running(fp, run):
    """Write a `RunningEstimate` as ``n,estimate``."""
    w = writer(fp)
    w.writerow(RUNNING_HEADER)
    for n, v in enumerate(run.values.tolist(), 1):
        w.writerow([n, fmtexact(v)])


def write_sweep(fp, sweep):
    """Write a `SweepResult` as ``n,estimate,true_value``."""
    w = writer(fp)
    w.writerow(SWEEP_HEADER)
    for row in sweep.rows:
        w.writerow([row.n, fmtexact(row.estimate), fmtexact(row.true_value)])


def write_curve(fp, curve):
    """Write an `RMSECurve` as ``n,rmse``."""
    w = writer(fp)
    w.writerow(CURVE_HEADER)
    for row in curve.rows:
        w.writerow([row.n, fmtexact(row.rmse)])


def write_report(fp, report, fmt=fmtexact):
    """Write a `FixtureReport`, one row per checked estimate."""
    w = writer(fp)
    w.writerow(REPORT_HEADER)
    for row in report.rows:
        w.writerow([row.kind, row.n, fmt(row.computed), fmt(row.expected),
                    fmt(row.delta), 'pass' if row.passed else 'FAIL'])
