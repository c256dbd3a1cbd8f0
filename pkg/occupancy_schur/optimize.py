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

"""Maximizing E_p over the simplex.

The argmax is the uniform point. ``maximize_expectation`` confirms it
numerically with projected-gradient ascent from random interior starts, or
by evaluating E_p at uniformly sampled simplex points.
"""

import logging

import numpy as np
from scipy.special import logsumexp

from occupancy_schur import constants, util
from occupancy_schur.errors import InvalidArgument
from occupancy_schur.majorization import uniform
from occupancy_schur.occupancy import expectation_closed_form
from occupancy_schur.prob import ProbVector, check_balls, check_boxes, sample_interior

LOG = logging.getLogger(__name__)

PROJECTED_GRADIENT = "projected-gradient"
RANDOM_SEARCH = "random-search"
METHODS = (PROJECTED_GRADIENT, RANDOM_SEARCH)


def _project(v):
    # sort-and-threshold on a float array
    n = v.size
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, n + 1)
    positive = np.flatnonzero(u - css / ind > 0)
    rho = positive[-1]
    theta = css[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def simplex_project(v):
    """Euclidean projection of ``v`` onto the probability simplex."""
    v = np.asarray(v, dtype=float).ravel()
    if v.size == 0:
        raise InvalidArgument("cannot project an empty vector")
    if not np.all(np.isfinite(v)):
        raise InvalidArgument("cannot project a vector with non-finite entries: %r" % v.tolist())
    return ProbVector.from_weights(_project(v))


def projection_kkt_residual(v, x):
    """How far ``x`` is from satisfying the optimality conditions of the
    projection of ``v``: v - x must be a constant theta on the support of x
    and at most theta off it."""
    v = np.asarray(v, dtype=float)
    x = x.entries if isinstance(x, ProbVector) else np.asarray(x, dtype=float)
    support = x > 0
    shift = v[support] - x[support]
    theta = shift.mean()
    residual = np.max(np.abs(shift - theta))
    if not support.all():
        residual = max(residual, np.max(v[~support] - theta))
    return float(max(residual, 0.0))


class ConjectureReport(object):

    def __init__(
        self,
        n,
        balls,
        method,
        best_point,
        expectation_best,
        expectation_uniform,
        max_deviation,
        iterations,
        samples,
        starts,
        converged,
        tolerance,
    ):
        self.n = n
        self.balls = balls
        self.method = method
        self.best_point = best_point
        self.expectation_best = expectation_best
        self.expectation_uniform = expectation_uniform
        self.max_deviation = max_deviation
        self.iterations = iterations
        self.samples = samples
        self.starts = starts
        self.converged = converged
        self.tolerance = tolerance
        uniform_wins = expectation_uniform >= expectation_best - constants.SEARCH_TOLERANCE
        if method == PROJECTED_GRADIENT:
            self.passed = uniform_wins and max_deviation <= tolerance
        else:
            self.passed = uniform_wins

    def to_dict(self):
        return {
            "n": self.n,
            "balls": self.balls,
            "method": self.method,
            "best_point": self.best_point,
            "expectation_best": self.expectation_best,
            "expectation_uniform": self.expectation_uniform,
            "max_deviation": self.max_deviation,
            "iterations": self.iterations,
            "samples": self.samples,
            "starts": self.starts,
            "converged": self.converged,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _log_phi(x, balls):
    with np.errstate(divide="ignore"):
        return logsumexp(balls * np.log1p(-x))


def _log_phi_gradient(x, balls, log_phi):
    with np.errstate(divide="ignore"):
        return -balls * np.exp((balls - 1) * np.log1p(-x) - log_phi)


def _ascend(x, balls, iters):
    """Projected-gradient ascent on E_p from ``x``.

    The step direction is the gradient N (1 - p_i)**(N - 1) of E_p divided
    by the expected number of empty boxes n - E_p, i.e. descent on
    log(n - E_p). The direction is unchanged and steps stay well scaled
    when n - E_p is tiny. Each iteration first tries twice the last accepted
    step (1/N initially) and halves it until the Armijo condition holds.
    """
    converged = False
    iterations = 0
    step = 0.5 / balls
    for iterations in range(1, iters + 1):
        value = _log_phi(x, balls)
        grad = _log_phi_gradient(x, balls, value)
        step = min(2.0 * step, constants.MAX_STEP)
        for _ in range(constants.MAX_BACKTRACKS):
            candidate = _project(x - step * grad)
            decrease = constants.ARMIJO_SLOPE * np.dot(grad, candidate - x)
            if _log_phi(candidate, balls) <= value + decrease:
                break
            step /= 2.0
        else:
            # no step improves on x within rounding
            converged = True
            break
        moved = np.max(np.abs(candidate - x))
        x = candidate
        if moved < constants.STEP_TOLERANCE:
            converged = True
            break
    return x, iterations, converged


def _random_search(n, balls, samples, rng):
    best_value = -np.inf
    best_point = None
    for start in range(0, samples, constants.ENUMERATION_CHUNK):
        rows = min(constants.ENUMERATION_CHUNK, samples - start)
        points = rng.standard_exponential((rows, n))
        points /= points.sum(axis=1, keepdims=True)
        values = n - np.sum((1.0 - points) ** balls, axis=1)
        at = int(np.argmax(values))
        if values[at] > best_value:
            best_value = float(values[at])
            best_point = points[at]
    return best_point, best_value


def maximize_expectation(
    n,
    balls,
    method=PROJECTED_GRADIENT,
    iters=constants.DEFAULT_ITERS,
    seed=constants.DEFAULT_SEED,
    starts=constants.DEFAULT_STARTS,
    samples=constants.DEFAULT_SEARCH_SAMPLES,
    tolerance=constants.CONVERGENCE_TOLERANCE,
):
    """Search for the maximizer of E_p over the ``n``-box simplex.

    ``projected-gradient`` runs ``starts`` ascents from random interior
    points. ``best_point`` is the final iterate with the largest E_p and
    ``max_deviation`` the worst distance to uniform over all starts.
    ``random-search`` evaluates E_p at ``samples`` uniform simplex points.

    With one ball E_p is 1 everywhere, so every point is a maximizer; the tie
    resolves to the uniform point.
    """
    n = check_boxes(n)
    balls = check_balls(balls)
    if balls < 1:
        raise InvalidArgument("maximize_expectation needs at least one ball")
    if method not in METHODS:
        raise InvalidArgument("unknown method %r; choose one of %s" % (method, ", ".join(METHODS)))
    for name, value in (("iters", iters), ("starts", starts), ("samples", samples)):
        if isinstance(value, bool) or int(value) != value or value < 1:
            raise InvalidArgument("%s must be a positive integer, got %r" % (name, value))
    rng = util.make_rng(seed)
    center = uniform(n).entries
    expectation_uniform = expectation_closed_form(uniform(n), balls)

    iterations = 0
    converged = True
    search_samples = 0
    if n == 1 or (balls == 1 and method == PROJECTED_GRADIENT):
        best = center
        deviations = [0.0]
    elif method == PROJECTED_GRADIENT:
        finals = []
        for _ in range(int(starts)):
            start = sample_interior(n, rng).entries
            x, used, done = _ascend(start, balls, int(iters))
            iterations = max(iterations, used)
            converged = converged and done
            finals.append(x)
        values = [n - np.sum((1.0 - x) ** balls) for x in finals]
        best = finals[int(np.argmax(values))]
        deviations = [float(np.max(np.abs(x - center))) for x in finals]
    else:
        search_samples = int(samples)
        best, _ = _random_search(n, balls, search_samples, rng)
        deviations = [float(np.max(np.abs(best - center)))]

    best = ProbVector.from_weights(best)
    report = ConjectureReport(
        n,
        balls,
        method,
        best.tolist(),
        expectation_closed_form(best, balls),
        expectation_uniform,
        max(deviations),
        iterations,
        search_samples,
        int(starts) if method == PROJECTED_GRADIENT else 0,
        converged,
        tolerance,
    )
    if not converged:
        LOG.warning(
            "maximize_expectation: n=%d balls=%d did not converge in %d iterations",
            n,
            balls,
            iters,
        )
    LOG.info(
        "maximize_expectation: n=%d balls=%d %s max deviation %r",
        n,
        balls,
        method,
        report.max_deviation,
    )
    return report
