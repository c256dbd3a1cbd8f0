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

"""Ground-truth pmf of X by enumerating every ball sequence.

Sequence number s (0 <= s < n**N) is read as N base-n digits, digit b being
the box of ball b. Its probability is the product of the matching entries.
"""

import logging

import numpy as np

from occupancy_schur import constants
from occupancy_schur.backends.backend_base import OccupancyBackend
from occupancy_schur.distributions import count_distinct

LOG = logging.getLogger(__name__)


def iter_sequences(n, balls, chunk=constants.ENUMERATION_CHUNK):
    """Yield blocks of ball sequences as (rows, balls) integer arrays."""
    total = n ** balls
    powers = n ** np.arange(balls, dtype=np.int64)
    for start in range(0, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (ids[:, None] // powers[None, :]) % n


class BruteForceBackend(OccupancyBackend):

    name = "brute"

    def __init__(self, max_sequences=constants.DEFAULT_BRUTE_MAX_SEQUENCES):
        self.max_sequences = max_sequences

    def check_budget(self, p, balls):
        if p.n ** balls > self.max_sequences:
            self._over_budget("n**balls", self.max_sequences, p, balls)

    def compute(self, p, balls):
        n = p.n
        pmf = np.zeros(n + 1)
        if balls == 0:
            pmf[0] = 1.0
            return pmf
        for rows in iter_sequences(n, balls):
            weights = np.prod(p.entries[rows], axis=1)
            np.add.at(pmf, count_distinct(rows), weights)
        return pmf
