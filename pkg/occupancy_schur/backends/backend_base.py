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

import logging
import time

from occupancy_schur.distributions import OccupancyDistribution
from occupancy_schur.errors import BudgetExceeded
from occupancy_schur.prob import check_balls


LOG = logging.getLogger(__name__)


class OccupancyBackend(object):
    """Base class for the exact pmf backends.

    Subclasses set ``name``, implement ``check_budget`` and ``compute``;
    ``distribution`` checks the budget, runs ``compute`` and wraps the raw
    pmf.
    """

    name = None

    def check_budget(self, p, balls):
        """Raise BudgetExceeded if ``(p, balls)`` is too large for this
        backend."""
        raise NotImplementedError

    def compute(self, p, balls):
        """Return the pmf of X as a numpy array indexed 0 .. n."""
        raise NotImplementedError

    def fits(self, p, balls):
        try:
            self.check_budget(p, balls)
        except BudgetExceeded:
            return False
        return True

    def distribution(self, p, balls):
        balls = check_balls(balls)
        self.check_budget(p, balls)
        started = time.perf_counter()
        pmf = self.compute(p, balls)
        LOG.debug(
            "%s backend: n=%d balls=%d in %.3fs",
            self.name,
            p.n,
            balls,
            time.perf_counter() - started,
        )
        return OccupancyDistribution(p.n, balls, pmf, method=self.name)

    def _over_budget(self, what, limit, p, balls):
        raise BudgetExceeded(
            "%s backend is limited to %s <= %s; n=%d, balls=%d is too large. "
            "Use the Monte Carlo method (mc) instead."
            % (self.name, what, limit, p.n, balls)
        )
