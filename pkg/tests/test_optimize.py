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

"""Tests for the simplex projection and the expectation maximizer."""

import sys

import numpy as np
from hypothesis import given, strategies as st

sys.path[0:0] = [""]  # noqa

from occupancy_schur import errors, util
from occupancy_schur.optimize import (
    PROJECTED_GRADIENT,
    RANDOM_SEARCH,
    maximize_expectation,
    projection_kkt_residual,
    simplex_project,
)
from tests import unittest

vectors = st.lists(st.floats(min_value=-5.0, max_value=5.0), min_size=1, max_size=8)


class TestSimplexProject(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(simplex_project([0.2, 0.3, 0.5]).allclose([0.2, 0.3, 0.5]))
        self.assertTrue(simplex_project([2, 0]).allclose([1.0, 0.0]))
        self.assertTrue(simplex_project([0.5, 0.5, 0.5]).allclose([1 / 3.0] * 3))

    def test_rejects(self):
        with self.assertRaises(errors.InvalidArgument):
            simplex_project([])
        with self.assertRaises(errors.InvalidArgument):
            simplex_project([0.5, float("inf")])

    def test_kkt_residual(self):
        self.assertAlmostEqual(projection_kkt_residual([2, 0], [1.0, 0.0]), 0.0)
        self.assertGreater(projection_kkt_residual([2, 0], [0.5, 0.5]), 0.5)

    @given(vectors)
    def test_projection_optimal(self, v):
        x = simplex_project(v)
        self.assertLess(projection_kkt_residual(v, x), 1e-9)
        self.assertTrue(simplex_project(x.entries).allclose(x, atol=1e-12))


class TestMaximizeExpectation(unittest.TestCase):
    def test_single_box(self):
        for balls in (1, 5):
            report = maximize_expectation(1, balls)
            self.assertEqual(report.best_point, [1.0])
            self.assertEqual(report.expectation_best, 1.0)
            self.assertTrue(report.passed)

    def test_projected_gradient(self):
        report = maximize_expectation(5, 20, PROJECTED_GRADIENT, iters=500, seed=42)
        self.assertLessEqual(report.max_deviation, 1e-6)
        self.assertLessEqual(np.max(np.abs(np.array(report.best_point) - 0.2)), 1e-6)
        self.assertTrue(report.passed)

    def test_projected_gradient_many_starts(self):
        for n, balls in ((2, 50), (3, 5), (7, 2)):
            report = maximize_expectation(n, balls, PROJECTED_GRADIENT, seed=1, starts=5)
            self.assertLessEqual(report.max_deviation, 1e-6, (n, balls))
            self.assertEqual(report.starts, 5)

    def test_uniform_maximizer_grid(self):
        for n in range(2, 11):
            for balls in (1, 5, 20, 50):
                report = maximize_expectation(
                    n, balls, PROJECTED_GRADIENT, seed=util.mix64(0, n * 100 + balls), starts=20
                )
                self.assertLessEqual(report.max_deviation, 1e-6, (n, balls))
                self.assertTrue(report.converged, (n, balls))
                self.assertTrue(report.passed, (n, balls))

    def test_one_ball_tie(self):
        report = maximize_expectation(4, 1)
        self.assertEqual(report.best_point, [0.25] * 4)
        self.assertEqual(report.max_deviation, 0.0)

    def test_random_search(self):
        report = maximize_expectation(3, 4, RANDOM_SEARCH, seed=0, samples=10 ** 5)
        self.assertAlmostEqual(report.expectation_uniform, 3 - 3 * 16 / 81.0)
        self.assertAlmostEqual(report.expectation_uniform, 2.407, places=3)
        self.assertLessEqual(report.expectation_best, report.expectation_uniform + 1e-12)
        self.assertTrue(report.passed)
        self.assertEqual(report.samples, 10 ** 5)

    def test_seed_independent(self):
        for seed in (0, 1, 2):
            report = maximize_expectation(4, 6, PROJECTED_GRADIENT, seed=seed)
            self.assertLessEqual(report.max_deviation, 1e-6)

    def test_rejects(self):
        with self.assertRaises(errors.InvalidArgument):
            maximize_expectation(3, 0)
        with self.assertRaises(errors.InvalidArgument):
            maximize_expectation(3, 2, "newton")
        with self.assertRaises(errors.InvalidArgument):
            maximize_expectation(3, 2, iters=0)
        with self.assertRaises(errors.InvalidArgument):
            maximize_expectation(0, 2)

    def test_to_dict(self):
        d = maximize_expectation(3, 3, seed=5).to_dict()
        self.assertEqual(d["method"], PROJECTED_GRADIENT)
        self.assertEqual(len(d["best_point"]), 3)
        self.assertIn("passed", d)


if __name__ == "__main__":
    unittest.main()
