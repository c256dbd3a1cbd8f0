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

"""Exact and simulated distributions of the number of occupied boxes.

Throw ``N`` balls independently into ``n`` boxes, ball landing in box ``i``
with probability ``p_i``, and let X count the boxes holding at least one
ball. Then

    E_p = n - sum_i (1 - p_i)**N

and the exact pmf of X is available from three independent backends.
"""

import collections
import logging

import numpy as np

from occupancy_schur.backends.brute_force import BruteForceBackend
from occupancy_schur.backends.dp import SequentialBinomialBackend
from occupancy_schur.backends.inclusion_exclusion import InclusionExclusionBackend
from occupancy_schur.backends.monte_carlo import MonteCarloSimulator
from occupancy_schur.errors import InvalidArgument
from occupancy_schur.prob import check_balls

LOG = logging.getLogger(__name__)

EXACT_METHODS = ("dp", "ie", "brute")

Gradient = collections.namedtuple("Gradient", ["values", "degenerate"])


def _miss(p):
    # probability that a single ball misses each box
    return np.clip(1.0 - p.entries, 0.0, None)


def expectation_closed_form(p, balls):
    """E[X] = n - sum_i (1 - p_i)**N."""
    balls = check_balls(balls)
    return float(p.n - np.sum(_miss(p) ** balls))


def expectation_gradient(p, balls):
    """Gradient of E[X] with respect to p: component i is
    N (1 - p_i)**(N - 1).

    With no balls E[X] is identically zero; the zero gradient is returned
    with ``degenerate`` set rather than raising.
    """
    balls = check_balls(balls)
    if balls == 0:
        return Gradient(np.zeros(p.n), True)
    return Gradient(balls * _miss(p) ** (balls - 1), False)


def variance_closed_form(p, balls):
    """Var X from the pairwise empty-box probabilities.

    With e_i = (1 - p_i)**N the probability that box i stays empty,
    Var X = sum_i e_i (1 - e_i) + sum_{i != j} [(1 - p_i - p_j)**N - e_i e_j].
    """
    balls = check_balls(balls)
    empty = _miss(p) ** balls
    pair_miss = np.clip(1.0 - p.entries[:, None] - p.entries[None, :], 0.0, None)
    both = pair_miss ** balls
    np.fill_diagonal(both, 0.0)
    cross = np.outer(empty, empty)
    np.fill_diagonal(cross, 0.0)
    return float(np.sum(empty * (1.0 - empty)) + np.sum(both - cross))


_BACKENDS = {
    "dp": SequentialBinomialBackend,
    "ie": InclusionExclusionBackend,
    "brute": BruteForceBackend,
}


def get_backend(method, **budget):
    try:
        backend_cls = _BACKENDS[method]
    except KeyError:
        raise InvalidArgument(
            "unknown exact method %r; choose one of %s" % (method, ", ".join(EXACT_METHODS))
        )
    return backend_cls(**budget)


def distribution(p, balls, method="dp", **budget):
    """Exact pmf of X with the named backend."""
    return get_backend(method, **budget).distribution(p, balls)


def distribution_dp(p, balls, **budget):
    return distribution(p, balls, "dp", **budget)


def distribution_inclusion_exclusion(p, balls, **budget):
    return distribution(p, balls, "ie", **budget)


def distribution_brute_force(p, balls, **budget):
    return distribution(p, balls, "brute", **budget)


def simulate(p, cfg):
    """Monte Carlo estimate of the pmf of X under ``cfg``."""
    return MonteCarloSimulator(cfg).simulate(p)


def cdf_leq(d, k):
    return d.cdf_leq(k)


def tail_geq(d, k):
    return d.tail_geq(k)


def tail_sum_expectation(d):
    return d.tail_sum_expectation()


def empty_box_pmf(d):
    return d.empty_box_pmf()
