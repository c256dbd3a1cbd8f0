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

"""Tests for the majorization order and its generators."""

import itertools
import sys

import numpy as np
from hypothesis import assume, given, settings, strategies as st

sys.path[0:0] = [""]  # noqa

from occupancy_schur import errors
from occupancy_schur.majorization import (
    Relation,
    compare,
    majorizes,
    point_mass,
    sample_majorized,
    t_transform,
    uniform,
)
from occupancy_schur.prob import ProbVector, sample_simplex, validate
from occupancy_schur.util import make_rng
from tests import unittest

weights = st.lists(st.floats(min_value=0.0, max_value=10.0), min_size=1, max_size=8)


class TestCompare(unittest.TestCase):
    def test_extreme_points(self):
        self.assertIs(
            compare(ProbVector([1, 0, 0]), ProbVector([1 / 3.0] * 3)).relation, Relation.MAJORIZES
        )
        self.assertIs(compare(point_mass(4), uniform(4)).relation, Relation.MAJORIZES)
        self.assertIs(compare(uniform(4), point_mass(4)).relation, Relation.MAJORIZED_BY)

    def test_prefix_gaps(self):
        verdict = compare(ProbVector([0.6, 0.25, 0.15]), ProbVector([0.5, 0.35, 0.15]))
        self.assertIs(verdict.relation, Relation.MAJORIZES)
        np.testing.assert_allclose(verdict.gaps, [0.1, 0.0], atol=1e-12)
        self.assertAlmostEqual(verdict.worst_slack, 0.0, delta=1e-12)

    def test_incomparable(self):
        verdict = compare(ProbVector([0.5, 0.5, 0]), ProbVector([0.6, 0.2, 0.2]))
        self.assertIs(verdict.relation, Relation.INCOMPARABLE)
        self.assertFalse(verdict.comparable)
        np.testing.assert_allclose(verdict.gaps, [-0.1, 0.2], atol=1e-12)
        self.assertAlmostEqual(verdict.worst_slack, -0.1, delta=1e-12)

    def test_unsorted_arguments(self):
        a = ProbVector([0.15, 0.6, 0.25])
        verdict = compare(a, ProbVector([0.35, 0.15, 0.5]))
        self.assertIs(verdict.relation, Relation.MAJORIZES)
        self.assertEqual(a.tolist(), [0.15, 0.6, 0.25])

    def test_single_box(self):
        self.assertIs(compare(ProbVector([1.0]), ProbVector([1.0])).relation, Relation.EQUAL)

    def test_dimension_mismatch(self):
        with self.assertRaises(errors.DimensionMismatch):
            compare(uniform(2), uniform(3))

    def test_to_dict(self):
        d = compare(point_mass(2), uniform(2)).to_dict()
        self.assertEqual(d["relation"], "Majorizes")
        self.assertEqual(len(d["gaps"]), 1)

    @given(weights)
    def test_uniform_is_minimal(self, raw):
        assume(sum(raw) > 1e-3)
        p = validate(raw)
        self.assertTrue(majorizes(p, uniform(p.n)))
        self.assertTrue(majorizes(point_mass(p.n), p))

    @given(weights, st.randoms(use_true_random=False))
    def test_permutation_is_equal(self, raw, random):
        assume(sum(raw) > 1e-3)
        p = validate(raw)
        shuffled = list(p)
        random.shuffle(shuffled)
        self.assertIs(compare(p, ProbVector(shuffled)).relation, Relation.EQUAL)

    @settings(max_examples=50)
    @given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=2 ** 32))
    def test_transitivity(self, n, seed):
        rng = make_rng(seed)
        a = sample_simplex(n, rng)
        b = sample_majorized(a, 3, rng)
        c = sample_majorized(b, 2, rng)
        self.assertTrue(majorizes(a, b))
        self.assertTrue(majorizes(b, c))
        self.assertTrue(majorizes(a, c))

    def test_antisymmetry(self):
        rng = make_rng(11)
        for _ in range(200):
            a = sample_simplex(3, rng)
            b = sample_simplex(3, rng)
            if majorizes(a, b) and majorizes(b, a):
                np.testing.assert_allclose(np.sort(a.entries), np.sort(b.entries), atol=2e-12)


class TestTTransform(unittest.TestCase):
    def test_examples(self):
        p = ProbVector([0.7, 0.3])
        self.assertTrue(t_transform(p, 0, 1, 0.5).allclose([0.5, 0.5]))
        self.assertTrue(t_transform(p, 0, 1, 1.0).allclose(p))
        p = ProbVector([0.8, 0.2, 0.0])
        q = t_transform(p, 0, 2, 0.75)
        self.assertTrue(q.allclose([0.6, 0.2, 0.2]))
        self.assertIs(compare(p, q).relation, Relation.MAJORIZES)

    def test_rejects(self):
        p = ProbVector([0.7, 0.3])
        for args in ((0, 0, 0.5), (0, 2, 0.5), (-1, 1, 0.5), (0, 1, 1.5), (0, 1, -0.1)):
            with self.assertRaises(errors.InvalidArgument):
                t_transform(p, *args)

    def test_chain_decreases(self):
        rng = make_rng(5)
        n = 5
        current = point_mass(n)
        for _ in range(200):
            i, j = rng.choice(n, 2, replace=False)
            nxt = t_transform(current, int(i), int(j), 0.5)
            self.assertTrue(majorizes(current, nxt))
            current = nxt
        self.assertTrue(current.allclose(uniform(n), atol=1e-3))


class TestSampleMajorized(unittest.TestCase):
    def test_single_mix_is_permutation(self):
        rng = make_rng(2)
        p = ProbVector([0.6, 0.3, 0.1])
        q = sample_majorized(p, 1, rng)
        self.assertIs(compare(p, q).relation, Relation.EQUAL)

    def test_all_permutations_average_to_uniform(self):
        p = ProbVector([0.6, 0.3, 0.1])
        mean = np.mean([p.entries[list(perm)] for perm in itertools.permutations(range(3))], axis=0)
        self.assertTrue(ProbVector(mean).allclose(uniform(3)))

    def test_majorized(self):
        rng = make_rng(8)
        for _ in range(200):
            p = sample_simplex(6, rng)
            self.assertTrue(majorizes(p, sample_majorized(p, int(rng.integers(1, 5)), rng)))

    def test_rejects(self):
        with self.assertRaises(errors.InvalidArgument):
            sample_majorized(uniform(3), 0, make_rng(0))


class TestExtremePoints(unittest.TestCase):
    def test_values(self):
        self.assertEqual(uniform(2).tolist(), [0.5, 0.5])
        self.assertEqual(point_mass(3).tolist(), [1.0, 0.0, 0.0])
        with self.assertRaises(errors.InvalidArgument):
            uniform(0)


if __name__ == "__main__":
    unittest.main()
