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

"""Monte Carlo estimate of the pmf of X.

Trials are cut into shards of ``shard_size`` consecutive trials. Shard ``s``
draws from its own generator seeded with ``mix64(seed, s)``, and worker
threads take shards round-robin. Counts are merged in shard order, so the
result depends on ``(seed, trials, shard_size)`` and never on the number of
workers or on scheduling.
"""

import logging
import threading

import numpy as np

from occupancy_schur import constants, util
from occupancy_schur.distributions import EmpiricalDistribution, count_distinct
from occupancy_schur.locking_dict import LockingDict

LOG = logging.getLogger(__name__)


def shard_layout(trials, shard_size):
    """Trial count of every shard."""
    full, rest = divmod(trials, shard_size)
    return [shard_size] * full + ([rest] if rest else [])


def run_shard(cumulative, balls, trials, seed, shard):
    """Occupied-box counts for one shard, as a histogram over 0 .. n."""
    n = cumulative.size
    rng = util.substream(seed, shard)
    histogram = np.zeros(n + 1, dtype=np.int64)
    if balls == 0:
        histogram[0] = trials
        return histogram
    rows = max(1, constants.DRAW_BLOCK // balls)
    for start in range(0, trials, rows):
        draws = rng.random((min(rows, trials - start), balls))
        # inverse CDF; the clamp covers a last cumulative entry just below 1
        boxes = np.minimum(np.searchsorted(cumulative, draws, side="right"), n - 1)
        histogram += np.bincount(count_distinct(boxes), minlength=n + 1)
    return histogram


class ShardWorker(threading.Thread):
    """Thread that works through a fixed list of shards.
    """

    def __init__(self, cumulative, balls, seed, shards, results):
        super(ShardWorker, self).__init__()
        self.cumulative = cumulative
        self.balls = balls
        self.seed = seed
        # (shard index, trials) pairs
        self.shards = shards
        self.results = results
        self.error = None
        self.daemon = True

    def run(self):
        try:
            for shard, trials in self.shards:
                self.results.put(
                    shard,
                    run_shard(self.cumulative, self.balls, trials, self.seed, shard),
                )
        except Exception as exc:
            LOG.exception("ShardWorker: shard failed")
            self.error = exc


class MonteCarloSimulator(object):
    """Simulates the occupancy experiment for an ``ExperimentConfig``."""

    name = "mc"

    def __init__(self, config):
        self.config = config

    def simulate(self, p):
        cfg = self.config
        cumulative = np.cumsum(p.entries)
        layout = list(enumerate(shard_layout(cfg.trials, cfg.shard_size)))
        results = LockingDict()
        workers = [
            ShardWorker(cumulative, cfg.balls, cfg.seed, layout[i :: cfg.workers], results)
            for i in range(min(cfg.workers, len(layout)))
        ]
        LOG.debug(
            "MonteCarloSimulator: %d trials in %d shards on %d workers",
            cfg.trials,
            len(layout),
            len(workers),
        )
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()
        for worker in workers:
            if worker.error is not None:
                raise worker.error

        counts = np.zeros(p.n + 1, dtype=np.int64)
        for histogram in results.ordered_values():
            counts += histogram
        return EmpiricalDistribution(
            p.n, cfg.balls, cfg.trials, cfg.seed, counts, shard_size=cfg.shard_size
        )
