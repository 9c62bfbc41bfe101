"""
Test sweep specifications, runners, presets and output formats
"""

import json
import math
import os
import shutil
import tempfile
import unittest

from pydantic import ValidationError

from abflux.channels import TruncationPolicy
from abflux.cross_section import Statistics
from abflux.errors import PresetError
from abflux.sweep import (
    CSV_HEADER,
    EvaluationPath,
    SweepRecord,
    SweepRunner,
    SweepSpec,
    figure_preset,
    format_csv,
    format_json,
    get_preset,
    list_presets,
    run_checks,
    run_sweep,
    sweep_exit_status,
    write_text,
)


def window_argmin(records, low, high):
    """mu0 of the smallest sigma with low <= mu0 <= high"""
    inside = [r for r in records if low - 1e-9 <= r.mu0 <= high + 1e-9]
    return min(inside, key=lambda r: r.sigma_normalized).mu0


def make_record(**overrides):
    """A clean record with optional field overrides"""
    fields = dict(
        ka=1.0,
        mu0=0.0,
        statistics=Statistics.DISTINGUISHABLE,
        sigma_normalized=1.5,
        sigma_raw=0.5,
        channels_used=10,
        convergence_residual=1e-13,
        degenerate_flag=False,
    )
    fields.update(overrides)
    return SweepRecord(**fields)


class TestSweepSpec(unittest.TestCase):
    """Test sweep specification validation"""

    def test_defaults(self):
        """Test default options"""
        spec = SweepSpec(ka_grid=[0.5, 1.0], mu0_grid=[0.0, 0.5, 1.0])
        self.assertIs(spec.statistics, Statistics.DISTINGUISHABLE)
        self.assertIs(spec.path, EvaluationPath.CLOSED_FORM)
        self.assertTrue(spec.normalization)
        self.assertEqual(spec.size, 6)

    def test_row_major_points(self):
        """Test ka outer, mu0 inner"""
        spec = SweepSpec(ka_grid=[0.5, 1.0], mu0_grid=[0.0, 0.5])
        self.assertEqual(list(spec.points()), [(0.5, 0.0), (0.5, 0.5), (1.0, 0.0), (1.0, 0.5)])

    def test_statistics_label(self):
        """Test statistics given as a label"""
        spec = SweepSpec(ka_grid=[1.0], mu0_grid=[0.0], statistics="fermion")
        self.assertIs(spec.statistics, Statistics.FERMION)
        with self.assertRaises(ValidationError):
            SweepSpec(ka_grid=[1.0], mu0_grid=[0.0], statistics="anyon")

    def test_invalid_grids(self):
        """Test empty, unordered and non-positive grids"""
        for ka_grid, mu0_grid in (
            ([], [0.0]),
            ([1.0], []),
            ([1.0, 0.5], [0.0]),
            ([1.0], [0.0, 0.0]),
            ([0.0, 1.0], [0.0]),
            ([1.0], [math.nan]),
        ):
            with self.assertRaises(ValidationError):
                SweepSpec(ka_grid=ka_grid, mu0_grid=mu0_grid)

    def test_workers_bounds(self):
        """Test worker count limits"""
        with self.assertRaises(ValidationError):
            SweepSpec(ka_grid=[1.0], mu0_grid=[0.0], workers=0)


class TestSweepRunner(unittest.TestCase):
    """Test running sweeps"""

    def test_single_point(self):
        """Test the low-energy point gives sigma/sigma0 = 2"""
        records = run_sweep(SweepSpec(ka_grid=[0.01], mu0_grid=[0.0]))
        self.assertEqual(len(records), 1)
        self.assertAlmostEqual(records[0].sigma_normalized, 2.0, delta=0.04)
        self.assertTrue(records[0].converged)
        self.assertFalse(records[0].degenerate_flag)

    def test_record_order_and_flags(self):
        """Test record order and degenerate flags at half flux"""
        spec = SweepSpec(ka_grid=[0.2, 0.4, 0.6], mu0_grid=[0.0, 0.5], workers=3)
        records = run_sweep(spec)
        self.assertEqual([(r.ka, r.mu0) for r in records], list(spec.points()))
        self.assertEqual([r.degenerate_flag for r in records], [False, True] * 3)

    def test_paths_agree(self):
        """Test the closed form and phase-shift paths away from half flux"""
        kwargs = dict(ka_grid=[0.3, 2.0], mu0_grid=[0.0, 0.3, 1.0])
        closed = run_sweep(SweepSpec(path=EvaluationPath.CLOSED_FORM, **kwargs))
        phase = run_sweep(SweepSpec(path=EvaluationPath.PHASE_SHIFT, **kwargs))
        for first, second in zip(closed, phase):
            self.assertAlmostEqual(second.sigma_normalized / first.sigma_normalized, 1.0, places=10)

    def test_unnormalized(self):
        """Test sigma / a^2 when normalization is off"""
        normalized = run_sweep(SweepSpec(ka_grid=[1.0], mu0_grid=[0.3]))[0]
        raw = run_sweep(SweepSpec(ka_grid=[1.0], mu0_grid=[0.3], normalization=False))[0]
        self.assertAlmostEqual(raw.sigma_normalized, 2.0 * math.pi * normalized.sigma_normalized, places=12)
        self.assertEqual(raw.sigma_raw, normalized.sigma_raw)

    def test_null_model(self):
        """Test a model without closed form runs on its phase shifts"""
        runner = SweepRunner(SweepSpec(ka_grid=[1.0], mu0_grid=[0.5], model="null"))
        self.assertFalse(runner.closed_form)
        self.assertEqual(runner.run()[0].sigma_normalized, 0.0)

    def test_non_converged_point(self):
        """Test non-converged points are kept with their partial value"""
        spec = SweepSpec(ka_grid=[0.1, 10.0], mu0_grid=[0.3], policy=TruncationPolicy(q_max=10, m_max=12))
        records = run_sweep(spec)
        self.assertEqual(len(records), 2)
        self.assertTrue(records[0].converged)
        self.assertFalse(records[1].converged)
        self.assertGreater(records[1].sigma_normalized, 0.0)
        self.assertEqual(sweep_exit_status(records), 3)

    def test_exit_status(self):
        """Test exit status precedence"""
        clean = make_record()
        stuck = make_record(converged=False)
        missing = make_record(degenerate_flag=True, fallback_missing=True, sigma_normalized=math.nan)
        self.assertEqual(sweep_exit_status([clean]), 0)
        self.assertEqual(sweep_exit_status([clean, missing]), 4)
        self.assertEqual(sweep_exit_status([missing, stuck]), 3)
        self.assertEqual(sweep_exit_status([make_record(degenerate_flag=True)]), 0)


class TestOutput(unittest.TestCase):
    """Test CSV and JSON rendering"""

    def setUp(self):
        """Set up a scratch directory"""
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Remove the scratch directory"""
        shutil.rmtree(self.test_dir)

    def test_csv_header(self):
        """Test the exact header line"""
        text = format_csv([])
        self.assertEqual(text, "ka,mu0,statistics,sigma_over_sigma0,sigma_k2_over_4pi,channels,residual,degenerate\n")
        self.assertEqual(len(CSV_HEADER), 8)

    def test_csv_rows(self):
        """Test shortest round-trip floats and flags"""
        text = format_csv([make_record(ka=0.1, mu0=0.25, degenerate_flag=True)], comments=["fig0: demo"])
        lines = text.splitlines()
        self.assertEqual(lines[0], "# fig0: demo")
        self.assertEqual(lines[2], "0.1,0.25,dist,1.5,0.5,10,1e-13,true")

    def test_json(self):
        """Test the JSON document"""
        spec = SweepSpec(ka_grid=[1.0], mu0_grid=[0.0])
        document = json.loads(format_json([make_record()], spec))
        self.assertEqual(document["spec"]["ka_grid"], [1.0])
        self.assertEqual(document["records"][0]["statistics"], "dist")
        self.assertEqual(document["records"][0]["channels_used"], 10)

    def test_json_missing_values_are_null(self):
        """Test NaN values of points without a fallback become null"""
        record = make_record(
            sigma_normalized=math.nan, sigma_raw=math.nan, convergence_residual=math.nan, fallback_missing=True
        )
        text = format_json([record])
        self.assertNotIn("NaN", text)
        fields = json.loads(text)["records"][0]
        self.assertIsNone(fields["sigma_normalized"])
        self.assertIsNone(fields["convergence_residual"])
        self.assertTrue(fields["fallback_missing"])
        self.assertEqual(fields["ka"], 1.0)

    def test_write_text(self):
        """Test files are written with nested directories created"""
        path = os.path.join(self.test_dir, "out", "sweep.csv")
        write_text("a\nb\n", path)
        with open(path, newline="") as f:
            self.assertEqual(f.read(), "a\nb\n")

    def test_determinism_across_workers(self):
        """Test fig1 output is byte-identical for 1, 4 and 8 workers"""
        outputs = set()
        for workers in (1, 4, 8):
            spec = get_preset("fig1").to_spec(workers=workers)
            outputs.add(format_csv(run_sweep(spec), get_preset("fig1").comments()))
        self.assertEqual(len(outputs), 1)


class TestPresets(unittest.TestCase):
    """Test figure presets"""

    def test_names(self):
        """Test the six presets and their statistics"""
        self.assertEqual([p.name for p in list_presets()], ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"])
        expected = ["dist", "dist", "boson", "boson", "fermion", "fermion"]
        self.assertEqual([p.statistics.value for p in list_presets()], expected)

    def test_flux_sweeps(self):
        """Test flux grids cover at least two periods"""
        fig2 = figure_preset("fig2")
        self.assertEqual(fig2.ka_grid, [0.1, 0.3, 0.5])
        self.assertEqual((fig2.mu0_grid[0], fig2.mu0_grid[-1]), (0.0, 3.0))
        for name in ("fig4", "fig6"):
            spec = figure_preset(name)
            self.assertEqual((spec.mu0_grid[0], spec.mu0_grid[-1]), (0.0, 4.0))
            self.assertIn(1.0, spec.mu0_grid)
            self.assertIn(2.0, spec.mu0_grid)

    def test_unknown(self):
        """Test unknown names"""
        with self.assertRaises(PresetError):
            figure_preset("fig7")
        with self.assertRaises(KeyError):
            get_preset("")

    def test_comments(self):
        """Test header comments describe the grid"""
        comments = get_preset("fig2").comments()
        self.assertTrue(comments[0].startswith("fig2:"))
        self.assertIn("statistics=dist", comments)

    def _smallest_ka(self, name):
        spec = figure_preset(name)
        return run_sweep(spec.model_copy(update={"ka_grid": spec.ka_grid[:1]}))

    def test_fig2_minima(self):
        """Test minima at half-odd-integer flux"""
        records = self._smallest_ka("fig2")
        for n in range(3):
            self.assertAlmostEqual(window_argmin(records, n, n + 1), n + 0.5, places=9)

    def test_fig4_minima(self):
        """Test boson minima at odd-integer flux"""
        records = self._smallest_ka("fig4")
        self.assertAlmostEqual(window_argmin(records, 0.0, 2.0), 1.0, places=9)
        self.assertAlmostEqual(window_argmin(records, 2.0, 4.0), 3.0, places=9)

    def test_fig6_minima(self):
        """Test fermion minima at even-integer flux"""
        records = self._smallest_ka("fig6")
        self.assertAlmostEqual(window_argmin(records, 1.0, 3.0), 2.0, places=9)
        by_flux = {round(r.mu0, 9): r.sigma_normalized for r in records}
        self.assertLess(by_flux[0.0], 0.05)
        self.assertLess(by_flux[4.0], 0.05)


class TestChecks(unittest.TestCase):
    """Test the invariant suite"""

    def test_all_checks_pass(self):
        """Test every invariant holds with the default policy"""
        results = run_checks()
        self.assertEqual(len(results), 17)
        names = {result.name for result in results}
        for name in ("boson extrema", "fermion extrema", "phase-shift low-energy law", "Legendre bridge",
                     "angular orthogonality", "Jacobi zero-argument values", "half-integer Bessel forms",
                     "Bessel asymptotics"):
            self.assertIn(name, names)
        for result in results:
            self.assertTrue(result.passed, msg=f"{result.name}: {result.detail}")

    def test_failure_is_reported(self):
        """Test caps that are too small fail instead of raising"""
        results = run_checks(TruncationPolicy(q_max=1, m_max=1))
        self.assertFalse(all(result.passed for result in results))


if __name__ == "__main__":
    unittest.main()
