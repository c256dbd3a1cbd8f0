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

"""Exact pmf of X by sequential-binomial dynamic programming.

Boxes are processed in label order. Given that ``t`` balls landed in the
boxes before box ``i``, the count in box ``i`` is
Binomial(N - t, p_i / r_i) where ``r_i`` is the probability left for boxes
``i .. n``. The state is (balls placed, boxes occupied).
"""

import logging

import numpy as np

from occupancy_schur import constants
from occupancy_schur.backends.backend_base import OccupancyBackend

LOG = logging.getLogger(__name__)


def binomial_pmf(trials, prob):
    """pmf of Binomial(trials, prob) by multiplicative recurrence.

    The recurrence starts from whichever end carries more mass, so the seed
    term is at least 0.5 ** trials and stays representable within the DP
    budget. Far-tail terms may underflow to zero.
    """
    out = np.zeros(trials + 1)
    if prob <= 0.0 or trials == 0:
        out[0] = 1.0
        return out
    if prob >= 1.0:
        out[trials] = 1.0
        return out
    k = np.arange(trials)
    if prob <= 0.5:
        ratios = (trials - k) / (k + 1.0) * (prob / (1.0 - prob))
        out[0] = (1.0 - prob) ** trials
        out[1:] = out[0] * np.cumprod(ratios)
    else:
        # walk down from k = trials
        ratios = (trials - k) / (k + 1.0) * ((1.0 - prob) / prob)
        out[trials] = prob ** trials
        out[trials - 1 :: -1] = out[trials] * np.cumprod(ratios)
    return out


def conditional_probabilities(entries):
    """``p_i / r_i`` for every box, with the last reachable box forced to 1."""
    suffix = np.cumsum(entries[::-1])[::-1]
    cond = np.zeros_like(entries)
    reachable = suffix > constants.RESIDUAL_EPSILON
    cond[reachable] = entries[reachable] / suffix[reachable]
    positive = np.flatnonzero(entries > 0)
    if positive.size:
        cond[positive[-1]] = 1.0
    return np.clip(cond, 0.0, 1.0)


class SequentialBinomialBackend(OccupancyBackend):

    name = "dp"

    def __init__(
        self,
        max_boxes=constants.DEFAULT_DP_MAX_BOXES,
        max_balls=constants.DEFAULT_DP_MAX_BALLS,
    ):
        self.max_boxes = max_boxes
        self.max_balls = max_balls

    def check_budget(self, p, balls):
        if p.n > self.max_boxes:
            self._over_budget("n", self.max_boxes, p, balls)
        if balls > self.max_balls:
            self._over_budget("balls", self.max_balls, p, balls)

    def compute(self, p, balls):
        n = p.n
        # state[t, c]: t balls placed so far, c boxes occupied so far
        state = np.zeros((balls + 1, n + 1))
        state[0, 0] = 1.0
        for prob in conditional_probabilities(p.entries):
            nxt = np.zeros_like(state)
            for placed in range(balls + 1):
                row = state[placed]
                if not row.any():
                    continue
                split = binomial_pmf(balls - placed, prob)
                # no ball for this box
                nxt[placed] += row * split[0]
                if split.size > 1:
                    # at least one ball: one more box occupied
                    nxt[placed + 1 :, 1:] += np.outer(split[1:], row[:-1])
            state = nxt
        return state[balls].copy()
