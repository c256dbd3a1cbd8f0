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

"""Schur's condition, its monotonicity consequence, and CDF dominance.

A function phi is a Schur function when
``(x_i - x_j) (d phi/d x_i - d phi/d x_j) >= 0`` for every pair ``i != j``;
such functions are monotone with respect to majorization. The empty-box
expectation ``phi(p) = sum_i (1 - p_i)**N`` is one, which makes
``E_p = n - phi(p)`` largest at the uniform point.
"""

import logging

import numpy as np

from occupancy_schur import constants
from occupancy_schur.errors import DimensionMismatch, DomainError, InvalidArgument
from occupancy_schur.majorization import Relation, compare, sample_majorized
from occupancy_schur.occupancy import distribution
from occupancy_schur.prob import (
    ProbVector,
    check_balls,
    check_boxes,
    sample_interior_points,
    sample_simplex,
)

LOG = logging.getLogger(__name__)


def _point(x):
    if isinstance(x, ProbVector):
        return x.entries
    return np.asarray(x, dtype=float)


class ScalarField(object):
    """A real function of ``dimension`` variables on the open simplex.

    ``evaluate`` and ``gradient`` take 1-D arrays; a ``vectorized`` gradient
    also maps a 2-D array of points to their gradients row by row. Without an exact gradient
    central differences are used, with step ``fd_step`` shrunk to half the
    smallest coordinate so the stencil stays in the positive orthant.
    """

    def __init__(
        self,
        dimension,
        evaluate,
        gradient=None,
        fd_step=constants.DEFAULT_FD_STEP,
        name=None,
        vectorized=False,
    ):
        self.dimension = check_boxes(dimension)
        self._evaluate = evaluate
        self._gradient = gradient
        self.fd_step = fd_step
        self.name = name or getattr(evaluate, "__name__", "field")
        # the exact gradient accepts one point per row
        self.vectorized = vectorized and gradient is not None

    @property
    def exact_gradient(self):
        return self._gradient is not None

    def _check(self, x):
        x = _point(x)
        if x.shape != (self.dimension,):
            raise DimensionMismatch(
                "%s takes %d coordinates, got %d" % (self.name, self.dimension, x.size)
            )
        return x

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        return float(self._evaluate(self._check(x)))

    def gradient(self, x):
        x = self._check(x)
        if self._gradient is not None:
            return np.asarray(self._gradient(x), dtype=float)
        return self.finite_difference_gradient(x)

    def finite_difference_gradient(self, x):
        x = self._check(x)
        smallest = x.min()
        if not smallest > 0:
            raise DomainError(
                "finite differences need an interior point; smallest entry is %r" % smallest
            )
        h = min(self.fd_step, smallest / 2.0)
        grad = np.empty(self.dimension)
        for i in range(self.dimension):
            up = x.copy()
            down = x.copy()
            up[i] += h
            down[i] -= h
            grad[i] = (self._evaluate(up) - self._evaluate(down)) / (2.0 * h)
        return grad

    def gradients(self, points):
        """Gradient at every row of ``points``."""
        points = np.asarray(points, dtype=float)
        if points.ndim != 2 or points.shape[1] != self.dimension:
            raise DimensionMismatch(
                "%s takes rows of %d coordinates, got shape %r"
                % (self.name, self.dimension, points.shape)
            )
        if self.vectorized:
            return np.asarray(self._gradient(points), dtype=float)
        return np.array([self.gradient(x) for x in points])

    def check_gradient(self, x):
        """Largest gap between the exact and the finite-difference gradient."""
        return float(np.max(np.abs(self.gradient(x) - self.finite_difference_gradient(x))))


def occupancy_phi(n, balls, exact=True):
    """phi(x) = sum_i (1 - x_i)**N, the expected number of empty boxes."""
    balls = check_balls(balls)

    def evaluate(x):
        return np.sum((1.0 - x) ** balls)

    def gradient(x):
        if balls == 0:
            return np.zeros_like(x)
        return -balls * (1.0 - x) ** (balls - 1)

    return ScalarField(
        n, evaluate, gradient if exact else None, name="occupancy-phi", vectorized=True
    )


def neg_occupancy_phi(n, balls, exact=True):
    """-phi, a Schur-concave field used to exhibit violations."""
    phi = occupancy_phi(n, balls, exact)
    gradient = None
    if exact:
        def gradient(x):
            return -phi._gradient(x)
    return ScalarField(
        n, lambda x: -phi.evaluate(x), gradient, name="neg-occupancy-phi", vectorized=True
    )


def expectation_field(n, balls):
    """E_p = n - phi(p)."""
    phi = occupancy_phi(n, balls)
    return ScalarField(
        n,
        lambda x: n - phi.evaluate(x),
        lambda x: -phi.gradient(x),
        name="expectation",
    )


def constant_field(n, value=0.0):
    return ScalarField(n, lambda x: value, lambda x: np.zeros_like(x), name="constant")


def linear_sum_field(n):
    """sum_i x_i, constant one on the simplex."""
    return ScalarField(n, np.sum, lambda x: np.ones_like(x), name="sum")


FIELDS = {
    "occupancy-phi": occupancy_phi,
    "neg-occupancy-phi": neg_occupancy_phi,
}


def schur_condition_at(f, x, i, j):
    """(x_i - x_j) (g_i - g_j) with g the gradient of ``f`` at ``x``."""
    x = f._check(x)
    n = f.dimension
    for name, index in (("i", i), ("j", j)):
        if isinstance(index, bool) or int(index) != index or not 0 <= index < n:
            raise InvalidArgument("index %s=%r is out of range for %d coordinates" % (name, index, n))
    if i == j:
        raise InvalidArgument("the Schur condition needs i != j")
    g = f.gradient(x)
    return float((x[i] - x[j]) * (g[i] - g[j]))


def _pair_conditions(x, g):
    # condition values for every pair i < j; one row per point for 2-D input
    rows, cols = np.triu_indices(x.shape[-1], k=1)
    values = (x[..., rows] - x[..., cols]) * (g[..., rows] - g[..., cols])
    return values, (rows, cols)


class SchurReport(object):

    def __init__(self, field, samples, min_value, witness_point, witness_pair, tolerance, gradient):
        self.field = field
        self.samples = samples
        self.min_value = min_value
        self.witness_point = witness_point
        self.witness_pair = witness_pair
        self.tolerance = tolerance
        self.gradient = gradient
        self.passed = min_value >= -tolerance

    def to_dict(self):
        return {
            "field": self.field,
            "samples": self.samples,
            "min_value": self.min_value,
            "witness_point": self.witness_point,
            "witness_pair": self.witness_pair,
            "gradient": self.gradient,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def schur_check(f, samples, rng, tolerance=None, margin=constants.INTERIOR_MARGIN):
    """Evaluate the Schur condition at ``samples`` interior points and all
    pairs, keeping the smallest value.

    The default tolerance is tighter for exact gradients than for finite
    differences. Points are drawn and evaluated a block at a time; within the
    draw order the first minimum wins, so the report is a function of the
    generator state alone.
    """
    if isinstance(samples, bool) or int(samples) != samples or samples < 1:
        raise InvalidArgument("samples must be a positive integer, got %r" % (samples,))
    if tolerance is None:
        tolerance = (
            constants.SCHUR_TOLERANCE_EXACT if f.exact_gradient else constants.SCHUR_TOLERANCE_FD
        )
    best = 0.0
    witness_point = witness_pair = None
    pairs = f.dimension * (f.dimension - 1) // 2
    block = max(1, constants.SCHUR_BLOCK_VALUES // max(1, pairs))
    for start in range(0, int(samples), block):
        points = sample_interior_points(f.dimension, min(block, int(samples) - start), rng, margin)
        if pairs == 0:
            continue
        values, (rows, cols) = _pair_conditions(points, f.gradients(points))
        point, pair = np.unravel_index(int(np.argmin(values)), values.shape)
        if witness_point is None or values[point, pair] < best:
            best = float(values[point, pair])
            witness_point = points[point].tolist()
            witness_pair = [int(rows[pair]), int(cols[pair])]
    report = SchurReport(
        f.name,
        int(samples),
        best,
        witness_point,
        witness_pair,
        tolerance,
        "exact" if f.exact_gradient else "finite-difference",
    )
    LOG.info(
        "schur_check: %s n=%d samples=%d min=%r passed=%s",
        f.name,
        f.dimension,
        samples,
        best,
        report.passed,
    )
    return report


class MonotonicityReport(object):
    """Worst margin phi(p) - phi(q) over generated pairs q majorized by p."""

    def __init__(self, field, pairs, min_margin, witness_p, witness_q, violations, tolerance, direction):
        self.field = field
        self.pairs = pairs
        self.min_margin = min_margin
        self.witness_p = witness_p
        self.witness_q = witness_q
        self.violations = violations
        self.tolerance = tolerance
        self.direction = direction
        self.passed = violations == 0

    def to_dict(self):
        return {
            "field": self.field,
            "pairs": self.pairs,
            "min_margin": self.min_margin,
            "witness_p": self.witness_p,
            "witness_q": self.witness_q,
            "violations": self.violations,
            "direction": self.direction,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def verify_monotonicity(
    f,
    pairs,
    rng,
    tolerance=constants.DEFAULT_TOLERANCE,
    max_mixes=constants.DEFAULT_MAX_MIXES,
    schur=None,
):
    """Check f(q) <= f(p) + tolerance on ``pairs`` generated pairs q < p.

    ``schur`` may carry the SchurReport of the same field; it only decides
    which direction of the Schur-Ostrowski equivalence the run exercises:
    a passing condition predicts no violations, a failing one predicts
    that violations can be found.
    """
    if isinstance(pairs, bool) or int(pairs) != pairs or pairs < 1:
        raise InvalidArgument("pairs must be a positive integer, got %r" % (pairs,))
    worst = None
    witness_p = witness_q = None
    violations = 0
    for _ in range(int(pairs)):
        p = sample_simplex(f.dimension, rng)
        q = sample_majorized(p, int(rng.integers(1, max_mixes + 1)), rng)
        margin = f.evaluate(p) - f.evaluate(q)
        if margin < -tolerance:
            violations += 1
        if worst is None or margin < worst:
            worst = margin
            witness_p, witness_q = p.tolist(), q.tolist()
    if schur is None:
        direction = "monotone along majorization"
    elif schur.passed:
        direction = "schur condition holds, so no violation expected"
    else:
        direction = "schur condition fails, so violations may be found"
    report = MonotonicityReport(
        f.name, int(pairs), worst, witness_p, witness_q, violations, tolerance, direction
    )
    if violations:
        LOG.warning(
            "verify_monotonicity: %s has %d violations, worst margin %r",
            f.name,
            violations,
            worst,
        )
    return report


NOT_APPLICABLE = "not-applicable"
PASS = "pass"
FAIL = "fail"


class DominanceReport(object):
    """CDF comparison of X under ``p`` and under ``q``.

    ``gaps[k]`` is P_p(X <= k) - P_q(X <= k) for k = 0 .. n.
    ``expectation_gap`` is E_q - E_p through the tail-sum identity.
    """

    def __init__(self, p, q, balls, relation, gaps, expectation_gap, tolerance, method):
        self.p = p
        self.q = q
        self.balls = balls
        self.relation = relation
        self.gaps = gaps
        self.min_gap = min(gaps)
        self.expectation_gap = expectation_gap
        self.tolerance = tolerance
        self.method = method
        if relation not in (Relation.MAJORIZES, Relation.EQUAL):
            self.status = NOT_APPLICABLE
        elif self.min_gap >= -tolerance and expectation_gap >= -tolerance:
            self.status = PASS
        else:
            self.status = FAIL

    @property
    def applicable(self):
        return self.status != NOT_APPLICABLE

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        return {
            "p": self.p.tolist(),
            "q": self.q.tolist(),
            "balls": self.balls,
            "relation": self.relation.value,
            "gaps": self.gaps,
            "min_gap": self.min_gap,
            "expectation_gap": self.expectation_gap,
            "method": self.method,
            "tolerance": self.tolerance,
            "status": self.status,
        }


def dominance_check(p, q, balls, method="dp", tolerance=constants.DEFAULT_TOLERANCE, **budget):
    """Compare the CDFs of X under ``p`` and ``q`` for ``balls`` balls.

    The ordering P_q(X <= k) <= P_p(X <= k) is only claimed when ``q`` is
    majorized by ``p``; other pairs are reported as not applicable.
    """
    if p.n != q.n:
        raise DimensionMismatch("p has %d boxes and q has %d" % (p.n, q.n))
    verdict = compare(p, q)
    dist_p = distribution(p, balls, method, **budget)
    dist_q = distribution(q, balls, method, **budget)
    gaps = (dist_p.cdf() - dist_q.cdf()).tolist()
    expectation_gap = dist_q.tail_sum_expectation() - dist_p.tail_sum_expectation()
    report = DominanceReport(
        p, q, dist_p.balls, verdict.relation, gaps, expectation_gap, tolerance, method
    )
    if report.status == FAIL:
        LOG.warning(
            "dominance_check: CDF ordering violated for p=%r q=%r, min gap %r",
            p,
            q,
            report.min_gap,
        )
    return report
