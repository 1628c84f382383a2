"""
Tests for the solve, bench and verify commands.
"""
import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pandas as pd
from click.testing import CliRunner

from src.cli import EXIT_CONFIG, EXIT_IO, EXIT_OK, EXIT_VERIFY, cli
from src.cli.reporting import CSV_COLUMNS, TIMING_COLUMNS, aggregate
from src.models.problem import PheromoneMatrix, validate_tour
from src.pheromone import (
    AccumulateKernel,
    ScatterGatherKernel,
    SymmetricReductionKernel,
    TiledScatterGatherKernel,
    TourBuffer,
)
from tests.support import ATT48, ATT48_OPTIMUM


class MirrorFaultKernel(SymmetricReductionKernel):
    """Symmetric reduction that drops part of one mirrored write."""

    def _deposit(self, tau, tours, ledger, executor):
        before = tau[1, 0]
        super()._deposit(tau, tours, ledger, executor)
        tau[1, 0] = before + 0.5 * (tau[1, 0] - before) + 1e-3


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()
        self.tmp_path = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def invoke(self, *args):
        return self.runner.invoke(cli, [str(arg) for arg in args])


class TestSolve(CliTestCase):
    """Test suite for the solve command."""

    def test_att48_report(self):
        """Test that solve writes a valid JSON report and echoes the best length."""
        out = self.tmp_path / "report.json"
        result = self.invoke("solve", "--instance", ATT48, "--selection", "nn", "--deposit", "symmetric",
                             "--iters", 3, "--workers", 2, "--out", out)

        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        report = json.loads(out.read_text(encoding="utf-8"))
        self.assertEqual(report["schema_version"], 1)
        self.assertEqual(report["instance"], "att48")
        self.assertEqual(len(report["per_iteration"]), 3)
        self.assertGreaterEqual(report["best_length"], ATT48_OPTIMUM)
        validate_tour(48, report["best_tour"])
        self.assertIn(f"best_length={report['best_length']}", result.output)

    def test_missing_instance_flag(self):
        """Test that omitting --instance is a usage error naming the flag."""
        result = self.invoke("solve")
        self.assertEqual(result.exit_code, EXIT_CONFIG)
        self.assertIn("--instance", result.output)

    def test_rho_out_of_range(self):
        """Test that rho outside (0,1] exits with status 1."""
        result = self.invoke("solve", "--instance", ATT48, "--rho", 1.5, "--out", self.tmp_path / "r.json")
        self.assertEqual(result.exit_code, EXIT_CONFIG)
        self.assertIn("rho must be in (0,1]", result.output)

    def test_unknown_selection(self):
        """Test that an unknown selection name exits with status 1."""
        result = self.invoke("solve", "--instance", ATT48, "--selection", "greedy")
        self.assertEqual(result.exit_code, EXIT_CONFIG)

    def test_nn_too_long(self):
        """Test that nn >= n exits with status 1."""
        result = self.invoke("solve", "--instance", ATT48, "--selection", "nn", "--nn", 48,
                             "--iters", 1, "--out", self.tmp_path / "r.json")
        self.assertEqual(result.exit_code, EXIT_CONFIG)

    def test_missing_file(self):
        """Test that an unreadable instance exits with status 2."""
        result = self.invoke("solve", "--instance", self.tmp_path / "nowhere.tsp", "--out", self.tmp_path / "r.json")
        self.assertEqual(result.exit_code, EXIT_IO)

    def test_malformed_file(self):
        """Test that a malformed coordinate line exits with status 2."""
        broken = self.tmp_path / "broken.tsp"
        broken.write_text("NAME : broken\nTYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n"
                          "NODE_COORD_SECTION\n1 0 0\n2 x 4\n3 0 8\nEOF\n", encoding="utf-8")
        result = self.invoke("solve", "--instance", broken, "--out", self.tmp_path / "r.json")
        self.assertEqual(result.exit_code, EXIT_IO)

    def test_bad_worker_env(self):
        """Test that a non-integer worker count in the environment exits with status 1."""
        with patch.dict("os.environ", {"ANT_SYSTEM_WORKERS": "many"}):
            result = self.invoke("solve", "--instance", ATT48, "--iters", 1, "--out", self.tmp_path / "r.json")
        self.assertEqual(result.exit_code, EXIT_CONFIG)


class TestBench(CliTestCase):
    """Test suite for the bench command."""

    def run_bench(self, out, *extra):
        return self.invoke("bench", "--instance", ATT48, "--selection", "roulette", "--selection", "nn",
                           "--deposit", "accumulate", "--deposit", "scatter-gather", "--theta", 16,
                           "--reps", 2, "--iters", 3, "--workers", 1, "--out", out, *extra)

    def test_rows_and_header(self):
        """Test bench CSV header, row count, line endings and ledger columns."""
        out = self.tmp_path / "bench.csv"
        result = self.run_bench(out)

        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        self.assertEqual(out.read_text(encoding="utf-8").splitlines()[0], ",".join(CSV_COLUMNS))
        self.assertNotIn(b"\r\n", out.read_bytes())
        frame = pd.read_csv(out)
        self.assertEqual(len(frame), 2 * 2 * 2 * 3)
        self.assertIn("rows=24", result.output)

        gather = frame[frame["deposit"] == "scatter-gather"]
        self.assertTrue((gather["global_loads"] == 10616832).all())
        self.assertTrue((gather["atomic_ops"] == 0).all())
        accumulate = frame[frame["deposit"] == "accumulate"]
        self.assertTrue((accumulate["atomic_ops"] == 2 * 48 * 48).all())

    def test_reruns_identical_except_timings(self):
        """Test that two bench runs differ only in timing columns."""
        first, second = self.tmp_path / "a.csv", self.tmp_path / "b.csv"
        self.assertEqual(self.run_bench(first).exit_code, EXIT_OK)
        self.assertEqual(self.run_bench(second).exit_code, EXIT_OK)
        pd.testing.assert_frame_equal(
            pd.read_csv(first).drop(columns=TIMING_COLUMNS),
            pd.read_csv(second).drop(columns=TIMING_COLUMNS),
        )

    def test_aggregate_slowdown(self):
        """Test that the fastest cell has slow-down 1."""
        out = self.tmp_path / "bench.csv"
        self.assertEqual(self.run_bench(out).exit_code, EXIT_OK)
        cells = aggregate(pd.read_csv(out))
        self.assertEqual(len(cells), 4)
        self.assertAlmostEqual(cells["slowdown"].min(), 1.0)
        self.assertTrue((cells["slowdown"] >= 1.0).all())

    def test_recompute_baseline_cells(self):
        """Test that bench accepts the recomputing roulette and it builds the same tours as the precomputed one."""
        out = self.tmp_path / "baseline.csv"
        result = self.invoke("bench", "--instance", ATT48, "--selection", "roulette",
                             "--selection", "roulette-recompute", "--reps", 1, "--iters", 3,
                             "--workers", 1, "--out", out)
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        frame = pd.read_csv(out)
        baseline = frame[frame["selection"] == "roulette-recompute"].reset_index(drop=True)
        precomputed = frame[frame["selection"] == "roulette"].reset_index(drop=True)
        self.assertEqual(len(baseline), 3)
        self.assertEqual(list(baseline["best_len"]), list(precomputed["best_len"]))

    def test_missing_instance_aborts(self):
        """Test that bench stops before writing when an instance is missing."""
        result = self.invoke("bench", "--instance", self.tmp_path / "nowhere.tsp", "--iters", 1,
                             "--out", self.tmp_path / "bench.csv")
        self.assertEqual(result.exit_code, EXIT_IO)
        self.assertFalse((self.tmp_path / "bench.csv").exists())

    def test_zero_reps(self):
        """Test that --reps 0 exits with status 1."""
        result = self.invoke("bench", "--instance", ATT48, "--reps", 0, "--out", self.tmp_path / "bench.csv")
        self.assertEqual(result.exit_code, EXIT_CONFIG)


class TestVerify(CliTestCase):
    """Test suite for the verify command."""

    def test_all_pairs_pass(self):
        """Test that verify passes every kernel pair and every ledger on att48."""
        result = self.invoke("verify", "--instance", ATT48, "--theta", 64, "--seed", 7, "--workers", 1)
        self.assertEqual(result.exit_code, EXIT_OK, result.output)
        lines = result.output.splitlines()
        self.assertEqual(sum(line.startswith("PASS") and " vs " in line for line in lines), 6)
        self.assertEqual(sum(line.startswith("PASS ledger") for line in lines), 4)
        self.assertNotIn("FAIL", result.output)

    def test_theta_not_dividing_word_count(self):
        """Test verify with a tile size that leaves a padded last tile."""
        result = self.invoke("verify", "--instance", ATT48, "--theta", 7, "--workers", 2)
        self.assertEqual(result.exit_code, EXIT_OK, result.output)

    def test_fault_is_reported(self):
        """Test that a faulty kernel fails verify and is named as the suspect."""
        def faulty(theta):
            return [AccumulateKernel(theta), ScatterGatherKernel(theta),
                    TiledScatterGatherKernel(theta), MirrorFaultKernel(theta)]

        with patch("src.cli.commands.default_kernels", side_effect=faulty):
            result = self.invoke("verify", "--instance", ATT48, "--seed", 7, "--workers", 1)

        self.assertEqual(result.exit_code, EXIT_VERIFY)
        self.assertIn("FAIL Accumulate vs SymmetricReduction", result.output)
        self.assertIn("suspect: SymmetricReduction", result.output)

    def test_invalid_theta(self):
        """Test that --theta 0 exits with status 1."""
        result = self.invoke("verify", "--instance", ATT48, "--theta", 0)
        self.assertEqual(result.exit_code, EXIT_CONFIG)


class TestFaultKernel(unittest.TestCase):
    """The injected fault breaks symmetry, which the verify command relies on."""

    def test_mirror_fault_breaks_symmetry(self):
        """Test that the faulty kernel really leaves an asymmetric matrix."""
        tau = PheromoneMatrix(np.zeros((3, 3)))
        MirrorFaultKernel(1).apply(tau, TourBuffer.from_tours([[0, 1, 2, 0]], [18], 3))
        self.assertNotEqual(tau.tau[0, 1], tau.tau[1, 0])


if __name__ == '__main__':
    unittest.main()
