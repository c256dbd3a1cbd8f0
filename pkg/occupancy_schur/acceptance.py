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

"""
Run the acceptance sweeps at full scale (or a fraction of it) and report
PASS/FAIL per criterion. Exit status 2 when any criterion fails.
"""

import logging
import time

import autocommand
import numpy as np

from occupancy_schur import util
from occupancy_schur.backends.monte_carlo import MonteCarloSimulator
from occupancy_schur.errors import VerificationFailed
from occupancy_schur.majorization import (
    Relation,
    compare,
    majorizes,
    sample_majorized,
    t_transform,
)
from occupancy_schur.occupancy import expectation_closed_form, get_backend
from occupancy_schur.optimize import PROJECTED_GRADIENT, RANDOM_SEARCH, maximize_expectation
from occupancy_schur.prob import ExperimentConfig, ProbVector, sample_simplex
from occupancy_schur.schur import (
    dominance_check,
    neg_occupancy_phi,
    occupancy_phi,
    schur_check,
    verify_monotonicity,
)

LOG = logging.getLogger(__name__)


def _scaled(count, scale):
    return max(1, int(round(count * scale)))


def oracle_equivalence(seed=0, scale=1.0):
    """Worst entrywise disagreement between the three exact backends."""
    rng = util.make_rng(seed)
    backends = [get_backend(name) for name in ("dp", "ie", "brute")]
    worst = 0.0
    for n in range(1, 5):
        for balls in range(0, 7):
            for _ in range(_scaled(200, scale)):
                p = sample_simplex(n, rng)
                pmfs = [backend.distribution(p, balls).pmf for backend in backends]
                worst = max(worst, max(float(np.max(np.abs(pmf - pmfs[0]))) for pmf in pmfs))
    return worst <= 1e-9, worst


def mean_and_tail_sum(seed=0, scale=1.0):
    rng = util.make_rng(seed)
    backends = [get_backend(name) for name in ("dp", "ie", "brute")]
    worst = 0.0
    for n in range(1, 5):
        for balls in range(0, 7):
            for _ in range(_scaled(200, scale)):
                p = sample_simplex(n, rng)
                expectation = expectation_closed_form(p, balls)
                for backend in backends:
                    dist = backend.distribution(p, balls)
                    worst = max(
                        worst,
                        abs(dist.mean() - expectation),
                        abs(dist.tail_sum_expectation() - dist.mean()),
                    )
    return worst <= 1e-9, worst


def schur_condition(seed=0, scale=1.0):
    """Exact-gradient minimum over the grid, and the largest (least
    negative) minimum of the negated field for N >= 2."""
    rng = util.make_rng(seed)
    worst = np.inf
    weakest_witness = -np.inf
    for n in range(2, 7):
        for balls in range(1, 11):
            samples = _scaled(10 ** 4, scale)
            worst = min(worst, schur_check(occupancy_phi(n, balls), samples, rng).min_value)
            if balls >= 2:
                negated = schur_check(neg_occupancy_phi(n, balls), samples, rng)
                weakest_witness = max(weakest_witness, negated.min_value)
    return worst >= -1e-12 and weakest_witness < -1e-6, (worst, weakest_witness)


def monotonicity(seed=0, scale=1.0):
    rng = util.make_rng(seed)
    worst = np.inf
    for n in range(2, 9):
        for balls in range(1, 13):
            report = verify_monotonicity(occupancy_phi(n, balls), _scaled(10 ** 3, scale), rng)
            worst = min(worst, report.min_margin)
    return worst >= -1e-9, worst


def dominance(seed=0, scale=1.0):
    rng = util.make_rng(seed)
    worst = np.inf
    for n in range(2, 9):
        for balls in range(1, 13):
            for _ in range(_scaled(500, scale)):
                p = sample_simplex(n, rng)
                q = sample_majorized(p, int(rng.integers(1, 5)), rng)
                report = dominance_check(p, q, balls)
                if not report.applicable:
                    return False, "generated pair not comparable: %r %r" % (p, q)
                worst = min(worst, report.min_gap)
    return worst >= -1e-9, worst


def conjecture(seed=0, scale=1.0):
    worst_deviation = 0.0
    worst_excess = -np.inf
    for n in range(2, 11):
        for balls in (1, 5, 20, 50):
            ascent = maximize_expectation(
                n, balls, PROJECTED_GRADIENT, seed=util.mix64(seed, n * 100 + balls), starts=_scaled(20, scale)
            )
            search = maximize_expectation(
                n,
                balls,
                RANDOM_SEARCH,
                seed=util.mix64(seed + 1, n * 100 + balls),
                samples=_scaled(10 ** 5, scale),
            )
            worst_deviation = max(worst_deviation, ascent.max_deviation)
            worst_excess = max(worst_excess, search.expectation_best - search.expectation_uniform)
    passed = worst_deviation <= 1e-6 and worst_excess <= 1e-12
    return passed, (worst_deviation, worst_excess)


def monte_carlo(seed=0, scale=1.0):
    p = ProbVector([0.7, 0.3])
    trials = _scaled(10 ** 6, scale)
    runs = [
        MonteCarloSimulator(ExperimentConfig(2, seed=seed, trials=trials, workers=workers)).simulate(p)
        for workers in (1, 2, 8)
    ]
    reproducible = all(np.array_equal(run.counts, runs[0].counts) for run in runs)
    error = abs(runs[0].pmf_hat[1] - 0.58)
    return reproducible and error <= 0.003, error


def order_laws(seed=0, scale=1.0):
    rng = util.make_rng(seed)
    for _ in range(_scaled(10 ** 4, scale)):
        n = int(rng.integers(1, 7))
        a = sample_simplex(n, rng)
        b = sample_majorized(a, int(rng.integers(1, 5)), rng)
        c = sample_majorized(b, int(rng.integers(1, 5)), rng)
        if compare(a, a).relation is not Relation.EQUAL:
            return False, "reflexivity fails at %r" % a
        permuted = ProbVector(a.entries[rng.permutation(n)])
        if compare(a, permuted).relation is not Relation.EQUAL:
            return False, "permutation of %r not equal" % a
        if not (majorizes(a, b) and majorizes(b, c) and majorizes(a, c)):
            return False, "transitivity fails at %r %r %r" % (a, b, c)
        r = sample_simplex(n, rng)
        verdict = compare(a, r)
        if verdict.relation is Relation.EQUAL and not np.allclose(
            np.sort(a.entries), np.sort(r.entries), atol=2e-12
        ):
            return False, "antisymmetry fails at %r %r" % (a, r)
        if n > 1:
            i, j = rng.choice(n, 2, replace=False)
            if not majorizes(a, t_transform(a, int(i), int(j), float(rng.random()))):
                return False, "t_transform output not majorized at %r" % a
    return True, None


CRITERIA = [
    ("oracle equivalence", oracle_equivalence),
    ("mean and tail-sum identities", mean_and_tail_sum),
    ("schur condition", schur_condition),
    ("monotonicity", monotonicity),
    ("cdf dominance", dominance),
    ("uniform maximizes expectation", conjecture),
    ("monte carlo consistency", monte_carlo),
    ("majorization order laws", order_laws),
]


def run_criteria(only=None, seed=0, scale=1.0, stream=print):
    """Run the selected criteria (1-based numbers) and return the failures."""
    failures = []
    for number, (name, check) in enumerate(CRITERIA, start=1):
        if only and number not in only:
            continue
        started = time.perf_counter()
        passed, detail = check(seed=seed, scale=scale)
        stream(
            "%s %d. %s (%.1fs): %r"
            % ("PASS" if passed else "FAIL", number, name, time.perf_counter() - started, detail)
        )
        if not passed:
            failures.append(name)
    return failures


@autocommand.autocommand(__name__)
def run(
    only: "comma-separated criterion numbers, e.g. 1,3 (default: all)" = "",
    seed: "base seed for every sweep" = 0,
    scale: "fraction of the full sample counts" = 1.0,
    strict: "raise instead of returning a failing exit status" = False,
):
    logging.basicConfig(level=logging.WARNING)
    selected = set(int(part) for part in only.split(",") if part.strip())
    failures = run_criteria(selected, seed, scale)
    if failures and strict:
        raise VerificationFailed("failed: %s" % ", ".join(failures))
    return 2 if failures else 0
