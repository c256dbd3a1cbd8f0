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

"""Randomized verification harnesses behind ``occupancy-schur verify``.

Each harness draws its inputs from a generator seeded by ``seed`` and
returns a VerificationReport listing the individual checks.
"""

import logging

import numpy as np

from occupancy_schur import constants, util
from occupancy_schur.errors import BudgetExceeded
from occupancy_schur.majorization import sample_majorized
from occupancy_schur.occupancy import (
    EXACT_METHODS,
    expectation_closed_form,
    get_backend,
    variance_closed_form,
)
from occupancy_schur.optimize import PROJECTED_GRADIENT, RANDOM_SEARCH, maximize_expectation
from occupancy_schur.prob import ProbVector, check_balls, check_boxes, sample_simplex
from occupancy_schur.schur import dominance_check, occupancy_phi, schur_check, verify_monotonicity

LOG = logging.getLogger(__name__)

TARGETS = ("conjecture", "monotonicity", "dominance", "identities")


class Check(object):
    """One named check: ``value`` is the worst quantity observed and the
    check passes when ``passed`` is true."""

    def __init__(self, name, value, passed):
        self.name = name
        self.value = value
        self.passed = bool(passed)

    def to_dict(self):
        return {"name": self.name, "value": self.value, "passed": self.passed}


class VerificationReport(object):

    def __init__(self, name, n, balls, seed, checks, details=None):
        self.name = name
        self.n = n
        self.balls = balls
        self.seed = seed
        self.checks = checks
        self.details = details or {}

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failed_checks(self):
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self):
        return {
            "name": self.name,
            "n": self.n,
            "balls": self.balls,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "details": self.details,
        }


def verify_conjecture(
    n,
    balls,
    iters=constants.DEFAULT_ITERS,
    seed=constants.DEFAULT_SEED,
    starts=constants.VERIFY_STARTS,
    samples=constants.DEFAULT_SEARCH_SAMPLES,
    tolerance=constants.CONVERGENCE_TOLERANCE,
):
    """Projected gradient from ``starts`` random points must end within
    ``tolerance`` of uniform, and random search must never beat uniform."""
    ascent = maximize_expectation(
        n, balls, PROJECTED_GRADIENT, iters, util.mix64(seed, 0), starts=starts, tolerance=tolerance
    )
    search = maximize_expectation(
        n, balls, RANDOM_SEARCH, iters, util.mix64(seed, 1), samples=samples, tolerance=tolerance
    )
    checks = [
        Check("ascent_reaches_uniform", ascent.max_deviation, ascent.passed),
        Check(
            "search_never_beats_uniform",
            search.expectation_best - search.expectation_uniform,
            search.passed,
        ),
    ]
    return VerificationReport(
        "conjecture",
        n,
        balls,
        seed,
        checks,
        {"projected_gradient": ascent.to_dict(), "random_search": search.to_dict()},
    )


def verify_monotonicity_sweep(
    n,
    balls,
    pairs=constants.DEFAULT_PAIRS,
    seed=constants.DEFAULT_SEED,
    samples=constants.DEFAULT_SAMPLES,
    tolerance=constants.DEFAULT_TOLERANCE,
):
    """The Schur condition of phi holds at sampled points, and phi(q) <= phi(p)
    for generated pairs q majorized by p."""
    rng = util.make_rng(seed)
    phi = occupancy_phi(n, balls)
    schur = schur_check(phi, samples, rng)
    monotone = verify_monotonicity(phi, pairs, rng, tolerance, schur=schur)
    checks = [
        Check("schur_condition", schur.min_value, schur.passed),
        Check("phi_monotone", monotone.min_margin, monotone.passed),
    ]
    return VerificationReport(
        "monotonicity",
        n,
        balls,
        seed,
        checks,
        {"schur": schur.to_dict(), "monotonicity": monotone.to_dict()},
    )


def verify_dominance(
    n,
    balls,
    pairs=constants.DEFAULT_PAIRS,
    seed=constants.DEFAULT_SEED,
    method="dp",
    tolerance=constants.DEFAULT_TOLERANCE,
    max_mixes=constants.DEFAULT_MAX_MIXES,
):
    """CDF dominance for ``pairs`` generated pairs q majorized by p."""
    n = check_boxes(n)
    rng = util.make_rng(seed)
    worst_gap = worst_expectation = np.inf
    failures = not_applicable = 0
    witness = None
    for _ in range(int(pairs)):
        p = sample_simplex(n, rng)
        q = sample_majorized(p, int(rng.integers(1, max_mixes + 1)), rng)
        report = dominance_check(p, q, balls, method, tolerance)
        if not report.applicable:
            not_applicable += 1
            continue
        if not report.passed:
            failures += 1
        if report.min_gap < worst_gap:
            worst_gap = report.min_gap
            witness = report.to_dict()
        worst_expectation = min(worst_expectation, report.expectation_gap)
    checks = [
        Check("cdf_dominance", worst_gap, worst_gap >= -tolerance),
        Check("expectation_order", worst_expectation, worst_expectation >= -tolerance),
        Check("pairs_comparable", not_applicable, not_applicable == 0),
    ]
    return VerificationReport(
        "dominance",
        n,
        balls,
        seed,
        checks,
        {"pairs": int(pairs), "failures": failures, "worst": witness, "method": method},
    )


def _fitting_backends(p, balls):
    backends = [get_backend(method) for method in EXACT_METHODS]
    fitting = [backend for backend in backends if backend.fits(p, balls)]
    if p.n > constants.IE_CROSSCHECK_MAX_BOXES:
        fitting = [backend for backend in fitting if backend.name != "ie"]
    if not fitting:
        raise BudgetExceeded(
            "no exact backend handles n=%d, balls=%d; use the mc method" % (p.n, balls)
        )
    return fitting


def identity_errors(p, balls):
    """Worst deviations of every exact identity at one ``(p, balls)``.

    Returns the error dict and the distributions it was computed from, the
    first of which serves as reference.
    """
    dists = [backend.distribution(p, balls) for backend in _fitting_backends(p, balls)]
    expectation = expectation_closed_form(p, balls)
    variance = variance_closed_form(p, balls)
    support = min(p.n, balls)
    errors = {
        "backend_agreement": 0.0,
        "mean_closed_form": 0.0,
        "tail_sum": 0.0,
        "variance_closed_form": 0.0,
        "support": 0.0,
        "total_mass": 0.0,
    }
    for dist in dists:
        errors["backend_agreement"] = max(
            errors["backend_agreement"], float(np.max(np.abs(dist.pmf - dists[0].pmf)))
        )
        mean = dist.mean()
        errors["mean_closed_form"] = max(errors["mean_closed_form"], abs(mean - expectation))
        errors["tail_sum"] = max(errors["tail_sum"], abs(dist.tail_sum_expectation() - mean))
        errors["variance_closed_form"] = max(
            errors["variance_closed_form"], abs(dist.variance() - variance)
        )
        outside = np.abs(dist.pmf[support + 1 :])
        zero_term = abs(dist.pmf[0] - (1.0 if balls == 0 else 0.0))
        errors["support"] = max(
            errors["support"], zero_term, float(outside.max()) if outside.size else 0.0
        )
        errors["total_mass"] = max(errors["total_mass"], abs(dist.total() - 1.0))
    return errors, dists


def verify_identities(
    n,
    balls,
    pairs=constants.DEFAULT_PAIRS,
    seed=constants.DEFAULT_SEED,
    tolerance=constants.DEFAULT_TOLERANCE,
):
    """Backend agreement and the exact identities on ``pairs`` random p.

    Also checks that reversing the box labels leaves the pmf unchanged.
    """
    n = check_boxes(n)
    balls = check_balls(balls)
    rng = util.make_rng(seed)
    worst = {}
    permutation = 0.0
    backends = set()
    for _ in range(int(pairs)):
        p = sample_simplex(n, rng)
        errors, dists = identity_errors(p, balls)
        reference = dists[0]
        backends.update(dist.method for dist in dists)
        for name, value in errors.items():
            worst[name] = max(worst.get(name, 0.0), value)
        reversed_p = ProbVector(p.entries[::-1])
        flipped = get_backend(reference.method).distribution(reversed_p, balls)
        permutation = max(permutation, float(np.max(np.abs(flipped.pmf - reference.pmf))))
    worst["permutation_invariance"] = permutation
    checks = [Check(name, value, value <= tolerance) for name, value in sorted(worst.items())]
    return VerificationReport(
        "identities",
        n,
        balls,
        seed,
        checks,
        {"pairs": int(pairs), "backends": sorted(backends)},
    )
