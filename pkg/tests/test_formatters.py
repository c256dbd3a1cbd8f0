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

import csv
import io
import json
import sys

import numpy as np

sys.path[0:0] = [""]  # noqa

from occupancy_schur import errors
from occupancy_schur.formatters import (
    CsvFormatter,
    JsonFormatter,
    ScalarReport,
    TableFormatter,
    get_formatter,
)
from occupancy_schur.majorization import Relation, compare, point_mass, uniform
from occupancy_schur.occupancy import distribution
from occupancy_schur.prob import ProbVector
from tests import unittest


class TestFormatters(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        # Some test values to use
        cls.dist = distribution(ProbVector([0.7, 0.3]), 2)
        cls.verdict = compare(point_mass(3), uniform(3))
        cls.scalar = ScalarReport(expectation=1.63, n=2, balls=3)
        cls.doc = {
            "f": np.float64(0.25),
            "i": np.int64(3),
            "b": np.bool_(True),
            "a": np.array([1.5, 2.5]),
            "r": Relation.EQUAL,
            "nan": float("nan"),
            "none": None,
        }

    def test_types(self):
        trans = JsonFormatter().transform_value
        transformed = trans(self.doc)
        self.assertIs(type(transformed["f"]), float)
        self.assertIs(type(transformed["i"]), int)
        self.assertIs(transformed["b"], True)
        self.assertEqual(transformed["a"], [1.5, 2.5])
        self.assertEqual(transformed["r"], "Equal")
        self.assertEqual(transformed["nan"], "nan")
        self.assertIsNone(transformed["none"])

    def test_json(self):
        text = JsonFormatter().format_report(self.scalar)
        self.assertTrue(text.endswith("\n"))
        self.assertEqual(json.loads(text), {"expectation": 1.63, "n": 2, "balls": 3})
        parsed = json.loads(JsonFormatter().format_report(self.verdict))
        self.assertEqual(parsed["relation"], "Majorizes")

    def test_csv_distribution(self):
        rows = list(csv.reader(io.StringIO(CsvFormatter().format_report(self.dist))))
        self.assertEqual(rows[0], ["k", "probability"])
        self.assertEqual([row[0] for row in rows[1:]], ["0", "1", "2"])
        self.assertAlmostEqual(float(rows[2][1]), 0.58)

    def test_csv_flattens(self):
        rows = list(csv.reader(io.StringIO(CsvFormatter().format_report(self.verdict))))
        self.assertEqual(rows[0], ["key", "value"])
        values = dict(rows[1:])
        self.assertEqual(values["relation"], "Majorizes")
        self.assertEqual(len(values["gaps"].split(";")), 2)

    def test_table(self):
        text = TableFormatter().format_report(self.scalar)
        lines = text.splitlines()
        self.assertEqual(lines[0].split(), ["key", "value"])
        self.assertEqual(lines[1].split(), ["expectation", "1.63"])
        text = TableFormatter().format_report(self.dist)
        self.assertIn("method", text)
        self.assertIn("probability", text)

    def test_deterministic(self):
        for name in ("json", "csv", "table"):
            formatter = get_formatter(name)
            self.assertEqual(formatter.format_report(self.dist), formatter.format_report(self.dist))

    def test_unknown_format(self):
        with self.assertRaises(errors.InvalidConfiguration):
            get_formatter("xml")


if __name__ == "__main__":
    unittest.main()
