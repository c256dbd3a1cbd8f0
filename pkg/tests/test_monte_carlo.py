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

"""Tests for the seeded Monte Carlo simulator."""

import sys

import numpy as np

sys.path[0:0] = [""]  # noqa

from occupancy_schur import errors
from occupancy_schur.backends.monte_carlo import MonteCarloSimulator, run_shard, shard_layout
from occupancy_schur.distributions import EmpiricalDistribution
from occupancy_schur.occupancy import simulate
from occupancy_schur.prob import ExperimentConfig, ProbVector
from tests import unittest


class TestMonteCarlo(unittest.TestCase):
    def test_single_trial(self):
        result = simulate(ProbVector([1, 0, 0]), ExperimentConfig(5, trials=1))
        self.assertEqual(result.counts.tolist(), [0, 1, 0, 0])
        self.assertEqual(result.method, "mc")

    def test_deterministic(self):
        p = ProbVector([0.2, 0.3, 0.5])
        cfg = ExperimentConfig(4, seed=17, trials=20000, shard_size=3000)
        first = simulate(p, cfg)
        second = simulate(p, cfg)
        np.testing.assert_array_equal(first.counts, second.counts)
        other = simulate(p, ExperimentConfig(4, seed=18, trials=20000, shard_size=3000))
        self.assertFalse(np.array_equal(first.counts, other.counts))

    def test_independent_of_workers(self):
        p = ProbVector([0.1, 0.2, 0.3, 0.4])
        runs = [
            MonteCarloSimulator(
                ExperimentConfig(6, seed=3, trials=50000, shard_size=4096, workers=workers)
            ).simulate(p)
            for workers in (1, 2, 8)
        ]
        for run in runs[1:]:
            np.testing.assert_array_equal(run.counts, runs[0].counts)

    def test_matches_exact_value(self):
        result = simulate(ProbVector([0.7, 0.3]), ExperimentConfig(2, seed=0, trials=10 ** 6))
        self.assertEqual(int(result.counts.sum()), 10 ** 6)
        self.assertLessEqual(abs(result.pmf_hat[1] - 0.58), 0.003)
        self.assertLessEqual(abs(result.mean() - 1.42), 0.003)

    def test_zero_probability_box(self):
        result = simulate(ProbVector([0.5, 0.0, 0.5]), ExperimentConfig(6, trials=5000))
        self.assertEqual(result.counts[3], 0)

    def test_no_balls(self):
        result = simulate(ProbVector([0.5, 0.5]), ExperimentConfig(0, trials=100))
        self.assertEqual(result.counts.tolist(), [100, 0, 0])

    def test_shard_layout(self):
        self.assertEqual(shard_layout(10, 4), [4, 4, 2])
        self.assertEqual(shard_layout(8, 4), [4, 4])
        self.assertEqual(shard_layout(3, 4), [3])

    def test_run_shard(self):
        cumulative = np.cumsum([0.5, 0.5])
        histogram = run_shard(cumulative, 3, 100, 0, 0)
        self.assertEqual(int(histogram.sum()), 100)
        np.testing.assert_array_equal(histogram, run_shard(cumulative, 3, 100, 0, 0))

    def test_standard_errors(self):
        result = simulate(ProbVector([0.5, 0.5]), ExperimentConfig(2, trials=400))
        errors_ = result.standard_errors()
        self.assertEqual(errors_.shape, (3,))
        self.assertEqual(errors_[0], 0.0)

    def test_to_dict(self):
        result = simulate(ProbVector([0.5, 0.5]), ExperimentConfig(2, seed=9, trials=10))
        d = result.to_dict()
        self.assertEqual(d["trials"], 10)
        self.assertEqual(d["seed"], 9)
        self.assertEqual(sum(d["counts"]), 10)
        self.assertEqual(len(result.csv_rows()), 3)

    def test_counts_checked(self):
        with self.assertRaises(errors.InvalidArgument):
            EmpiricalDistribution(2, 1, 5, 0, [1, 1, 1])
        with self.assertRaises(errors.InvalidArgument):
            EmpiricalDistribution(2, 1, 3, 0, [1, 2])


if __name__ == "__main__":
    unittest.main()
