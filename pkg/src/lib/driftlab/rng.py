# encoding: utf-8
#
# Copyright (c) 2026 driftlab contributors
#
# MIT Licence. See http://opensource.org/licenses/MIT
#
# Created on 2026-10-17
#

"""Seedable, reproducible sources of standard Gaussian draws.

A `GaussianStream` is addressed by a ``(seed, stream_index)`` pair.
The pair is hashed by `numpy.random.SeedSequence` into the state of an
independent `PCG64` generator, so substreams can be generated in any
order (or concurrently) and always yield the same numbers.

Every call to `draw_standard_normals` starts from the beginning of the
substream, so the first ``n`` draws of a stream are always the same,
whatever ``count`` is asked for.
"""

from dataclasses import dataclass
import logging

from numpy.random import PCG64, Generator, SeedSequence

from .models import ValidationError

# Seed used when none is given. Never the wall clock.
DEFAULT_SEED = 0

# Seeds are unsigned 64-bit integers
MAX_SEED = 2 ** 64 - 1

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


def check_seed(seed):
    """Return ``seed`` as `int` or raise `ValidationError`."""
    if isinstance(seed, bool):
        raise ValidationError('seed must be an integer, got %r' % seed)

    try:
        value = int(seed)
    except (TypeError, ValueError):
        raise ValidationError('seed must be an integer, got %r' % seed)

    if value != seed and not isinstance(seed, str):
        raise ValidationError('seed must be an integer, got %r' % seed)

    if not 0 <= value <= MAX_SEED:
        raise ValidationError('seed must be in [0, 2**64), got %r' % value)

    return value


@dataclass(frozen=True)
class GaussianStream:
    """Independent substream of standard normal draws.

    Attributes:
        seed (int): 64-bit unsigned master seed.
        stream_index (int): Substream (trajectory) index, >= 0.

    """

    seed: int = DEFAULT_SEED
    stream_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'seed', check_seed(self.seed))
        index = self.stream_index
        if isinstance(index, bool) or int(index) != index or index < 0:
            raise ValidationError('stream_index must be an integer >= 0, '
                                  'got %r' % index)

        object.__setattr__(self, 'stream_index', int(index))

    def generator(self):
        """Fresh `numpy.random.Generator` at the start of this substream.

        Returns:
            numpy.random.Generator: PCG64 generator seeded from
            ``SeedSequence([seed, stream_index])``.

        """
        ss = SeedSequence([self.seed, self.stream_index])
        return Generator(PCG64(ss))


def spawn_streams(seed, count, start=0):
    """Return ``count`` consecutive streams of ``seed``.

    Args:
        seed (int): Master seed.
        count (int): Number of streams.
        start (int, optional): Index of the first stream.

    Returns:
        list: `GaussianStream` objects with indices
        ``start .. start + count - 1``.

    """
    return [GaussianStream(seed, i) for i in range(start, start + count)]


def draw_standard_normals(stream, count):
    """Draw ``count`` independent N(0, 1) values from ``stream``.

    Args:
        stream (GaussianStream): Substream to draw from.
        count (int): Number of draws, >= 1.

    Returns:
        numpy.ndarray: ``count`` standard normal draws. Identical for
        identical ``(seed, stream_index, count)``.

    Raises:
        ValidationError: Raised if ``count`` < 1.

    """
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise ValidationError('count must be a positive integer, got %r' %
                              count)

    return stream.generator().standard_normal(int(count))
