"""Tests for the concurrent sweep runtime."""

import asyncio
import time

import pytest
from app.core.exceptions import InvalidOperandError, NotPrimeError
from app.core.settings import SweepConfig
from app.models import CheckStatus
from app.services.sweep import SweepJob, SweepRuntime, build_sweep_jobs, run_sweep
from app.services.verify import VerificationReport

SMALL = SweepConfig(p_max=3, d_bound=3, n_max=1, mumford_n_max=3, cube_bound=1, workers=2)


def _report(identity: str, p: int) -> VerificationReport:
    return VerificationReport.compare(identity, {"p": p}, "x", "x")


class TestSweepRuntime:
    """Test ordering and concurrency of SweepRuntime."""

    async def test_results_sorted_regardless_of_completion(self):
        """Test (identity, params) order when later jobs finish first."""

        def slow(p: int):
            def fn():
                time.sleep(0.01 * (5 - p))
                return [_report("b_check", p), _report("a_check", p)]

            return fn

        jobs = [SweepJob(f"job:{p}", slow(p)) for p in (5, 3, 2)]
        summary = await SweepRuntime(workers=3).run(jobs)

        keys = [(r.identity, r.params["p"]) for r in summary.reports]
        assert keys == [
            ("a_check", 2),
            ("a_check", 3),
            ("a_check", 5),
            ("b_check", 2),
            ("b_check", 3),
            ("b_check", 5),
        ]
        assert (summary.total, summary.passed, summary.failed) == (6, 6, 0)

    async def test_semaphore_bounds_parallelism(self):
        """Test that at most `workers` jobs run at once."""
        running = 0
        peak = 0

        def fn():
            nonlocal running, peak
            running += 1
            peak = max(peak, running)
            time.sleep(0.02)
            running -= 1
            return []

        await SweepRuntime(workers=2).run([SweepJob(f"j{i}", fn) for i in range(6)])
        assert peak <= 2

    async def test_job_error_propagates(self):
        """Test that an application error inside a job surfaces to the caller."""

        def boom():
            raise NotPrimeError(message="bad p")

        with pytest.raises(NotPrimeError):
            await SweepRuntime(workers=1).run([SweepJob("boom", boom)])

    def test_rejects_zero_workers(self):
        """Test the worker lower bound."""
        with pytest.raises(InvalidOperandError):
            SweepRuntime(workers=0)

    async def test_runs_inside_event_loop(self):
        """Test that the runtime coexists with other tasks."""
        other = asyncio.create_task(asyncio.sleep(0))
        summary = await SweepRuntime(workers=1).run([SweepJob("one", lambda: [_report("x", 2)])])
        await other
        assert summary.total == 1


class TestSweep:
    """Test full sweeps on a small configuration."""

    def test_requires_p_max_at_least_two(self):
        """Test the p_max lower bound."""
        with pytest.raises(InvalidOperandError):
            build_sweep_jobs(1, assume_mumford=True, config=SMALL)

    def test_all_pass_with_mumford(self):
        """Test that every check is as expected under the binding."""
        summary = run_sweep(3, assume_mumford=True, config=SMALL)
        assert summary.failed == 0
        identities = {r.identity for r in summary.reports}
        assert {"main_degree", "main_grading", "deligne", "mumford", "arr_range", "coeff_moments"} <= identities

    def test_p2_statements_present(self):
        """Test that p = 2 includes the printed coefficients 7, −4, 1."""
        summary = run_sweep(2, assume_mumford=True, config=SMALL)
        oracle = next(r for r in summary.reports if r.identity == "coeff_oracle")
        assert oracle.lhs == "[(0, 7), (1, -4), (2, 1)]"

    def test_without_mumford_only_lambda_dependent_checks_fail(self):
        """Test that main-degree entries fail and lam-free checks pass."""
        summary = run_sweep(3, assume_mumford=False, config=SMALL)
        failing = {r.identity for r in summary.reports if not r.ok}
        assert failing <= {"main_degree", "remark_lambda", "top_lambda", "mumford"}
        main = [r for r in summary.reports if r.identity == "main_degree"]
        assert main and all(r.status == CheckStatus.FAIL for r in main)

    def test_deterministic_order(self):
        """Test identical output across runs."""
        first = run_sweep(3, assume_mumford=True, config=SMALL)
        second = run_sweep(3, assume_mumford=True, config=SMALL)
        strip = [r.public(include_timing=False) for r in first.reports]
        again = [r.public(include_timing=False) for r in second.reports]
        assert strip == again
