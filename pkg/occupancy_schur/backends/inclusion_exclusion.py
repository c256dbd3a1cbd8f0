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

"""Exact pmf of X through the empty-box count by inclusion-exclusion.

With ``B_j`` the sum over all j-subsets T of (1 - p(T))**N,

    P(exactly m boxes empty) = sum_{j=m}^{n} (-1)**(j-m) C(j, m) B_j

and P(X = k) is P(n - k boxes empty). The alternating sum cancels badly as n
grows, which is why the backend stops at 25 boxes.
"""

import logging

import numpy as np
from scipy.special import comb

from occupancy_schur import constants
from occupancy_schur.backends.backend_base import OccupancyBackend

LOG = logging.getLogger(__name__)


def subset_sums(entries):
    """Sum and size of every subset of ``entries``, in bitmask order."""
    sums = np.zeros(1)
    sizes = np.zeros(1, dtype=np.int64)
    for value in entries:
        sums = np.concatenate((sums, sums + value))
        sizes = np.concatenate((sizes, sizes + 1))
    return sums, sizes


def empty_set_moments(entries, balls):
    """``B_j`` for j = 0 .. n."""
    n = entries.size
    sums, sizes = subset_sums(entries)
    miss = np.clip(1.0 - sums, 0.0, None) ** balls
    return np.bincount(sizes, weights=miss, minlength=n + 1)


def empty_box_pmf(entries, balls):
    """pmf of the empty-box count, m = 0 .. n.

    At most min(n, N) boxes can be occupied, so fewer than n - min(n, N)
    empty boxes is impossible; those entries are exactly zero instead of
    cancellation residue.
    """
    n = entries.size
    moments = empty_set_moments(entries, balls)
    empty = np.zeros(n + 1)
    if balls == 0:
        empty[n] = 1.0
        return empty
    for m in range(n - min(n, balls), n):
        j = np.arange(m, n + 1)
        signs = np.where((j - m) % 2 == 0, 1.0, -1.0)
        empty[m] = np.sum(signs * comb(j, m, exact=False) * moments[m:])
    return empty


class InclusionExclusionBackend(OccupancyBackend):

    name = "ie"

    def __init__(self, max_boxes=constants.DEFAULT_IE_MAX_BOXES):
        self.max_boxes = max_boxes

    def check_budget(self, p, balls):
        if p.n > self.max_boxes:
            self._over_budget("n", self.max_boxes, p, balls)

    def compute(self, p, balls):
        if p.n > constants.IE_CROSSCHECK_MAX_BOXES:
            LOG.warning(
                "inclusion-exclusion with n=%d boxes is prone to cancellation; "
                "compare against the dp method",
                p.n,
            )
        return empty_box_pmf(p.entries, balls)[::-1].copy()
