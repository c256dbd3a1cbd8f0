# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Points of the probability simplex and the experiment settings shared by
every other module.

A ``ProbVector`` keeps the box labels in the order it was given. Sorting into
the canonical descending order is always an explicit call to
``canonicalize``.
"""

import logging
import math

import numpy as np

from occupancy_schur import constants, util
from occupancy_schur.errors import InvalidArgument, InvalidProbabilityVector

LOG = logging.getLogger(__name__)


@util.exception_wrapper({TypeError: InvalidProbabilityVector, ValueError: InvalidProbabilityVector})
def _float_entries(raw):
    return np.array([float(x) for x in raw], dtype=float)


def _as_entries(raw):
    entries = _float_entries(raw)
    if entries.size == 0:
        raise InvalidProbabilityVector("a probability vector needs at least one entry")
    if not np.all(np.isfinite(entries)):
        raise InvalidProbabilityVector("entries must be finite, got %r" % list(raw))
    negative = np.flatnonzero(entries < 0)
    if negative.size:
        raise InvalidProbabilityVector(
            "entry %d is negative (%r)" % (negative[0], entries[negative[0]])
        )
    return entries


class ProbVector(object):
    """An immutable point of the probability simplex.

    ``ProbVector(entries)`` is the strict constructor: the entries must
    already sum to one within ``constants.NOT_EVEN_CLOSE`` and are then
    renormalized so the sum is one within ``constants.SUM_TOLERANCE``. Use
    ``ProbVector.from_weights`` (or ``validate``) to scale arbitrary
    nonnegative weights.

    Entries equal to zero are allowed; every quantity computed in this
    package extends continuously to the boundary of the simplex.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries, normalize=False):
        entries = _as_entries(entries)
        try:
            total = math.fsum(entries)
        except OverflowError:
            if not normalize:
                raise InvalidProbabilityVector("entries sum past the float range, not to 1")
            # weights near the float ceiling: rescale by the largest first
            entries = entries / entries.max()
            total = math.fsum(entries)
        if total <= 0:
            raise InvalidProbabilityVector("all entries are zero")
        if not normalize and abs(total - 1.0) > constants.NOT_EVEN_CLOSE:
            raise InvalidProbabilityVector(
                "entries sum to %r, not 1; use ProbVector.from_weights to "
                "normalize arbitrary weights" % total
            )
        entries = entries / total
        entries.flags.writeable = False
        self._entries = entries

    @classmethod
    def from_weights(cls, raw):
        """Scale nonnegative weights onto the simplex, keeping their order."""
        return cls(raw, normalize=True)

    @property
    def entries(self):
        return self._entries

    @property
    def n(self):
        return self._entries.size

    def __len__(self):
        return self._entries.size

    def __iter__(self):
        return iter(self._entries.tolist())

    def __getitem__(self, index):
        return float(self._entries[index])

    def __eq__(self, other):
        if not isinstance(other, ProbVector):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self):
        return "ProbVector(%s)" % ", ".join(repr(x) for x in self)

    def tolist(self):
        return self._entries.tolist()

    def allclose(self, other, atol=1e-12):
        other = other.entries if isinstance(other, ProbVector) else np.asarray(other)
        return self._entries.shape == other.shape and np.allclose(
            self._entries, other, rtol=0.0, atol=atol
        )

    def is_interior(self, margin=0.0):
        return bool(np.all(self._entries > margin))

    def is_canonical(self):
        return bool(np.all(self._entries[:-1] >= self._entries[1:]))

    def canonical(self):
        return canonicalize(self)


def validate(raw):
    """Turn nonnegative weights into a ``ProbVector`` preserving order.

    Empty input, a negative entry and an all-zero input are rejected with
    distinct messages.
    """
    return ProbVector.from_weights(raw)


def canonicalize(p):
    """Return ``p`` with its entries sorted in descending order."""
    if p.is_canonical():
        return p
    ordered = np.sort(p.entries)[::-1]
    result = ProbVector.__new__(ProbVector)
    ordered.flags.writeable = False
    result._entries = ordered
    return result


def check_boxes(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidArgument("the number of boxes must be a positive integer, got %r" % (n,))
    return int(n)


def sample_simplex(n, rng):
    """Draw a point uniformly from the simplex with ``n`` boxes.

    ``n`` independent standard exponentials are normalized by their sum.
    """
    n = check_boxes(n)
    if n == 1:
        return ProbVector([1.0])
    draws = rng.standard_exponential(n)
    while not draws.any():
        draws = rng.standard_exponential(n)
    return ProbVector.from_weights(draws)


def sample_interior(n, rng, margin=constants.INTERIOR_MARGIN):
    """Uniform simplex point whose entries all reach ``margin``.

    Rejection sampling; for ``n == 1`` the single point is returned.
    """
    n = check_boxes(n)
    if margin * n >= 1:
        raise InvalidArgument(
            "no interior point of a %d-box simplex has all entries >= %r" % (n, margin)
        )
    while True:
        p = sample_simplex(n, rng)
        if p.entries.min() >= margin:
            return p


def sample_interior_points(n, count, rng, margin=constants.INTERIOR_MARGIN):
    """``count`` uniform simplex points with all entries >= ``margin``, one
    per row in draw order.

    Exponential draws are made a block of rows at a time and rows below the
    margin are rejected.
    """
    n = check_boxes(n)
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise InvalidArgument("count must be a positive integer, got %r" % (count,))
    if margin * n >= 1:
        raise InvalidArgument(
            "no interior point of a %d-box simplex has all entries >= %r" % (n, margin)
        )
    count = int(count)
    if n == 1:
        return np.ones((count, 1))
    blocks = []
    found = 0
    while found < count:
        draws = rng.standard_exponential((count - found, n))
        with np.errstate(invalid="ignore"):
            points = draws / draws.sum(axis=1, keepdims=True)
            points = points[points.min(axis=1) >= margin]
        blocks.append(points)
        found += len(points)
    return np.concatenate(blocks)[:count]


class ExperimentConfig(object):
    """Settings of one occupancy experiment.

    ``trials`` is only consulted by Monte Carlo; ``shard_size`` fixes how the
    trials are split into seeded substreams and ``workers`` how many threads
    work through them.
    """

    def __init__(
        self,
        balls,
        seed=constants.DEFAULT_SEED,
        trials=constants.DEFAULT_TRIALS,
        tolerance=constants.DEFAULT_TOLERANCE,
        shard_size=constants.DEFAULT_SHARD_SIZE,
        workers=constants.DEFAULT_WORKERS,
    ):
        self.balls = check_balls(balls)
        if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < 1 << 64:
            raise InvalidArgument("seed must be an unsigned 64-bit integer, got %r" % (seed,))
        if isinstance(trials, bool) or int(trials) != trials or trials < 1:
            raise InvalidArgument("trials must be a positive integer, got %r" % (trials,))
        if not tolerance > 0:
            raise InvalidArgument("tolerance must be positive, got %r" % (tolerance,))
        if int(shard_size) != shard_size or shard_size < 1:
            raise InvalidArgument("shard_size must be a positive integer")
        if int(workers) != workers or workers < 1:
            raise InvalidArgument("workers must be a positive integer")
        self.seed = int(seed)
        self.trials = int(trials)
        self.tolerance = float(tolerance)
        self.shard_size = int(shard_size)
        self.workers = int(workers)

    def __repr__(self):
        return (
            "ExperimentConfig(balls=%d, seed=%d, trials=%d, tolerance=%r, "
            "shard_size=%d, workers=%d)"
            % (
                self.balls,
                self.seed,
                self.trials,
                self.tolerance,
                self.shard_size,
                self.workers,
            )
        )


def check_balls(balls):
    if isinstance(balls, bool) or int(balls) != balls or balls < 0:
        raise InvalidArgument("the number of balls must be a nonnegative integer, got %r" % (balls,))
    return int(balls)
