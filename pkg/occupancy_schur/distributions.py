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

"""Distributions of X, the number of occupied boxes."""

import logging

import numpy as np

from occupancy_schur import constants
from occupancy_schur.errors import InvalidArgument

LOG = logging.getLogger(__name__)


def count_distinct(rows):
    """Number of distinct box labels in each row of a 2-D integer array."""
    rows = np.asarray(rows)
    if rows.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    ordered = np.sort(rows, axis=1)
    return 1 + np.count_nonzero(np.diff(ordered, axis=1), axis=1)


class OccupancyDistribution(object):
    """Exact pmf of X for ``n`` boxes and ``balls`` balls.

    ``pmf[k]`` is P(X = k) for k = 0 .. n. Round-off may leave entries a hair
    below zero; they are kept as computed and clamped only by
    ``reported_pmf``.
    """

    def __init__(self, n, balls, pmf, method=None):
        pmf = np.array(pmf, dtype=float)
        if pmf.shape != (n + 1,):
            raise InvalidArgument(
                "a pmf over %d boxes needs %d entries, got %d" % (n, n + 1, pmf.size)
            )
        pmf.flags.writeable = False
        self.n = n
        self.balls = balls
        self.pmf = pmf
        self.method = method

    def __repr__(self):
        return "OccupancyDistribution(n=%d, balls=%d, method=%r)" % (
            self.n,
            self.balls,
            self.method,
        )

    def _check_k(self, k):
        if isinstance(k, bool) or int(k) != k or not 0 <= k <= self.n:
            raise InvalidArgument("k must lie in 0..%d, got %r" % (self.n, k))
        return int(k)

    def cdf_leq(self, k):
        """P(X <= k)."""
        k = self._check_k(k)
        return float(np.sum(self.pmf[: k + 1]))

    def tail_geq(self, k):
        """P(X >= k)."""
        k = self._check_k(k)
        if k == 0:
            return 1.0
        return 1.0 - self.cdf_leq(k - 1)

    def cdf(self):
        return np.cumsum(self.pmf)

    def tail_sum_expectation(self):
        """E[X] as the sum of P(X >= k) over k = 1 .. n."""
        return float(sum(self.tail_geq(k) for k in range(1, self.n + 1)))

    def mean(self):
        return float(np.dot(np.arange(self.n + 1), self.pmf))

    def variance(self):
        k = np.arange(self.n + 1)
        mean = self.mean()
        return float(np.dot((k - mean) ** 2, self.pmf))

    def empty_box_pmf(self):
        """pmf of the empty-box count n - X, indexed by the number of empty
        boxes."""
        return self.pmf[::-1].copy()

    def reported_pmf(self):
        return np.clip(self.pmf, 0.0, None)

    def total(self):
        return float(np.sum(self.pmf))

    def to_dict(self):
        return {
            "n": self.n,
            "balls": self.balls,
            "method": self.method,
            "pmf": self.reported_pmf().tolist(),
            "mean": self.mean(),
        }

    def csv_rows(self):
        return [(k, prob) for k, prob in enumerate(self.reported_pmf().tolist())]


class EmpiricalDistribution(object):
    """Monte Carlo estimate of the pmf of X.

    ``counts[k]`` is how many trials ended with k occupied boxes. The result
    is a function of ``(seed, trials, shard_size)`` only.
    """

    method = "mc"

    def __init__(self, n, balls, trials, seed, counts, shard_size=constants.DEFAULT_SHARD_SIZE):
        counts = np.array(counts, dtype=np.int64)
        if counts.shape != (n + 1,):
            raise InvalidArgument("counts over %d boxes need %d entries" % (n, n + 1))
        if int(counts.sum()) != trials:
            raise InvalidArgument(
                "counts add up to %d but %d trials were run" % (counts.sum(), trials)
            )
        counts.flags.writeable = False
        self.n = n
        self.balls = balls
        self.trials = trials
        self.seed = seed
        self.shard_size = shard_size
        self.counts = counts

    @property
    def pmf_hat(self):
        return self.counts / float(self.trials)

    def mean(self):
        return float(np.dot(np.arange(self.n + 1), self.pmf_hat))

    def standard_errors(self):
        pmf = self.pmf_hat
        return np.sqrt(pmf * (1.0 - pmf) / self.trials)

    def __repr__(self):
        return "EmpiricalDistribution(n=%d, balls=%d, trials=%d, seed=%d)" % (
            self.n,
            self.balls,
            self.trials,
            self.seed,
        )

    def to_dict(self):
        return {
            "n": self.n,
            "balls": self.balls,
            "method": self.method,
            "trials": self.trials,
            "seed": self.seed,
            "shard_size": self.shard_size,
            "counts": self.counts.tolist(),
            "pmf": self.pmf_hat.tolist(),
            "mean": self.mean(),
        }

    def csv_rows(self):
        return [(k, prob) for k, prob in enumerate(self.pmf_hat.tolist())]
