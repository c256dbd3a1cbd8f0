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

"""Tests for the occupancy-schur command line front end."""

import io
import json
import logging
import logging.handlers
import os
import shutil
import sys
import tempfile

sys.path[0:0] = [""]  # noqa

from occupancy_schur import cli, constants
from tests import unittest


class TestCli(unittest.TestCase):
    def setUp(self):
        self.addCleanup(self.remove_handlers)

    def remove_handlers(self):
        logger = logging.getLogger()
        for handler in list(logger.handlers):
            if getattr(handler, "_occupancy_schur_handler", False):
                logger.removeHandler(handler)
                handler.close()
        logger.setLevel(logging.WARNING)

    def run_cli(self, *argv):
        stdout = io.StringIO()
        stderr = io.StringIO()
        status = cli.run(list(argv), stdout=stdout, stderr=stderr)
        return status, stdout.getvalue(), stderr.getvalue()

    def test_expectation(self):
        status, out, err = self.run_cli(
            "expectation", "--p", "0.7,0.3", "--balls", "3", "--format", "json"
        )
        self.assertEqual(status, constants.EXIT_OK)
        report = json.loads(out)
        self.assertAlmostEqual(report["expectation"], 1.63)
        self.assertEqual(report["n"], 2)
        self.assertEqual(err, "")

    def test_dist_exact(self):
        for method in ("dp", "ie", "brute"):
            status, out, _ = self.run_cli(
                "dist", "--p", "1/2,1/2", "--balls", "2", "--method", method, "--format", "csv"
            )
            self.assertEqual(status, constants.EXIT_OK)
            lines = out.splitlines()
            self.assertEqual(lines[0], "k,probability")
            self.assertEqual(len(lines), 4)
            self.assertAlmostEqual(float(lines[2].split(",")[1]), 0.5)

    def test_dist_monte_carlo_reproducible(self):
        argv = ["dist", "--p", "0.7,0.3", "--balls", "2", "--method", "mc", "--trials", "20000"]
        first = self.run_cli(*(argv + ["--workers", "1"]))
        second = self.run_cli(*(argv + ["--workers", "4"]))
        self.assertEqual(first[0], constants.EXIT_OK)
        self.assertEqual(first[1], second[1])
        other = self.run_cli(*(argv + ["--seed", "1"]))
        self.assertNotEqual(first[1], other[1])

    def test_byte_identical_output(self):
        for fmt in ("table", "json", "csv"):
            argv = ["dominance", "--p", "0.7,0.3", "--q", "0.5,0.5", "--balls", "2", "--format", fmt]
            self.assertEqual(self.run_cli(*argv), self.run_cli(*argv))

    def test_compare(self):
        status, out, _ = self.run_cli(
            "compare", "--a", "1,0,0", "--b", "0.34,0.33,0.33", "--format", "json"
        )
        self.assertEqual(status, constants.EXIT_OK)
        self.assertEqual(json.loads(out)["relation"], "Majorizes")

    def test_dominance(self):
        status, out, err = self.run_cli(
            "dominance", "--p", "0.7,0.3", "--q", "0.5,0.5", "--balls", "2"
        )
        self.assertEqual(status, constants.EXIT_OK)
        self.assertTrue(err.startswith("PASS dominance"))
        status, _, err = self.run_cli(
            "dominance", "--p", "0.5,0.5,0", "--q", "0.6,0.2,0.2", "--balls", "2"
        )
        self.assertEqual(status, constants.EXIT_OK)
        self.assertTrue(err.startswith("N/A dominance"))

    def test_schur_check(self):
        status, _, err = self.run_cli(
            "schur-check", "--n", "5", "--balls", "7", "--samples", "500"
        )
        self.assertEqual(status, constants.EXIT_OK)
        self.assertTrue(err.startswith("PASS"))
        status, out, err = self.run_cli(
            "schur-check",
            "--field",
            "neg-occupancy-phi",
            "--n",
            "3",
            "--balls",
            "2",
            "--samples",
            "100",
            "--format",
            "json",
        )
        self.assertEqual(status, constants.EXIT_FAILED)
        self.assertTrue(err.startswith("FAIL"))
        self.assertLess(json.loads(out)["min_value"], 0)

    def test_verify_conjecture(self):
        status, out, err = self.run_cli(
            "verify",
            "conjecture",
            "--n",
            "5",
            "--balls",
            "20",
            "--iters",
            "500",
            "--seed",
            "42",
            "--trials",
            "20000",
            "--format",
            "json",
        )
        self.assertEqual(status, constants.EXIT_OK)
        self.assertEqual(err, "PASS verify conjecture\n")
        report = json.loads(out)
        self.assertLessEqual(report["details"]["projected_gradient"]["max_deviation"], 1e-6)

    def test_verify_other_targets(self):
        for target in ("monotonicity", "dominance", "identities"):
            status, _, err = self.run_cli(
                "verify", target, "--n", "3", "--balls", "4", "--pairs", "20"
            )
            self.assertEqual(status, constants.EXIT_OK, target)
            self.assertTrue(err.startswith("PASS verify " + target))

    def test_out_file(self):
        tmpdir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmpdir)
        path = os.path.join(tmpdir, "report.json")
        status, out, _ = self.run_cli(
            "expectation", "--p", "0.5,0.5", "--balls", "2", "--format", "json", "--out", path
        )
        self.assertEqual(status, constants.EXIT_OK)
        self.assertEqual(out, "")
        with open(path) as f:
            self.assertAlmostEqual(json.load(f)["expectation"], 1.5)

    def test_usage_errors(self):
        cases = [
            [],
            ["frobnicate"],
            ["expectation", "--balls", "2"],
            ["expectation", "--p", "0.5,0.6", "--balls", "2"],
            ["expectation", "--p", "0.5,-0.5,1", "--balls", "2"],
            ["expectation", "--p", "0.5,0.5", "--balls", "-1"],
            ["expectation", "--p", "0.5,0.5", "--balls", "2", "--seed", "3"],
            ["compare", "--a", "1,0", "--b", "0.5,0.5", "--balls", "3"],
            ["compare", "--a", "1,0", "--b", "1/3,1/3,1/3"],
            ["dist", "--p", "0.5,0.5", "--balls", "2", "--trials", "10"],
            ["dist", "--p", "0.5,0.5", "--balls", "2", "--method", "exact"],
            ["dominance", "--p", "0.5,0.5", "--q", "0.5,0.5", "--balls", "2", "--method", "brute"],
            ["schur-check", "--field", "entropy", "--n", "3", "--balls", "2"],
            ["verify", "--n", "3", "--balls", "2"],
            ["verify", "everything", "--n", "3", "--balls", "2"],
            ["verify", "identities", "--n", "3", "--balls", "2", "--method", "ie"],
            ["expectation", "--p", "0.5,0.5", "--balls", "2", "--tolerance", "0"],
        ]
        for argv in cases:
            status, out, err = self.run_cli(*argv)
            self.assertEqual(status, constants.EXIT_USAGE, argv)
            self.assertEqual(out, "", argv)
            self.assertIn("usage error", err, argv)

    def test_vector_overflow(self):
        for p in ("1e400,1", "0.5,-1e309"):
            status, out, err = self.run_cli("expectation", "--p", p, "--balls", "1")
            self.assertEqual(status, constants.EXIT_USAGE, p)
            self.assertEqual(out, "")
            self.assertIn("--p", err)

    def test_bad_config_file_after_warning(self):
        # a handler the caller installed before running the command
        foreign = logging.StreamHandler(io.StringIO())
        logger = logging.getLogger()
        logger.addHandler(foreign)
        self.addCleanup(logger.removeHandler, foreign)
        tmpdir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmpdir)
        path = os.path.join(tmpdir, "conf.json")
        with open(path, "w") as f:
            f.write('{"unknownKey": 1, "seed": "x"}')
        status, out, err = self.run_cli("expectation", "--p", "0.5,0.5", "--balls", "1", "-c", path)
        self.assertEqual(status, constants.EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("seed", err)
        self.assertFalse(
            any(isinstance(h, logging.handlers.MemoryHandler) for h in logger.handlers)
        )

    def test_buffered_warning_replayed(self):
        tmpdir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmpdir)
        path = os.path.join(tmpdir, "conf.json")
        with open(path, "w") as f:
            f.write('{"unknownKey": 1}')
        status, _, err = self.run_cli("expectation", "--p", "0.5,0.5", "--balls", "1", "-c", path)
        self.assertEqual(status, constants.EXIT_OK)
        self.assertIn("Unrecognized option: unknownKey", err)

    def test_budget_exceeded(self):
        p = ",".join(["0.1"] * 10)
        status, out, err = self.run_cli("dist", "--p", p, "--balls", "10", "--method", "brute")
        self.assertEqual(status, constants.EXIT_BUDGET)
        self.assertEqual(out, "")
        self.assertIn("mc", err)

    def test_budget_from_config_file(self):
        tmpdir = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmpdir)
        path = os.path.join(tmpdir, "conf.json")
        with open(path, "w") as f:
            json.dump({"budget": {"dpMaxBalls": 4}}, f)
        status, _, _ = self.run_cli(
            "dist", "--p", "0.5,0.5", "--balls", "5", "-c", path
        )
        self.assertEqual(status, constants.EXIT_BUDGET)

    def test_verbose_logging(self):
        status, _, err = self.run_cli("expectation", "--p", "1", "--balls", "1", "-v")
        self.assertEqual(status, constants.EXIT_OK)
        self.assertIn("Starting occupancy-schur version", err)


if __name__ == "__main__":
    unittest.main()
