"""Concurrent runtime for verification sweeps."""

from __future__ import annotations

import asyncio
from collections.abc import Callable
from dataclasses import dataclass
from uuid import uuid4

from app.core.log_config import get_logger
from app.core.settings import SweepConfig, get_app_settings
from app.services.guards import ParameterGuardService, primes_up_to
from app.services.verify import (
    CLOSED_FORM_SAMPLE_PRIMES,
    SweepSummary,
    VerificationReport,
    arr_range_report,
    coeff_moments_report,
    coeff_oracle_report,
    cube_identity_report,
    gr_identity_report,
    pushforward_range_report,
    summand_report,
    symbolic_arr_report,
    verify_deligne_all,
    verify_lambda_induction,
    verify_lambda_recursion,
    verify_main_degree,
    verify_main_grading,
    verify_mumford,
    verify_omega_pairing,
    verify_power_triviality,
    verify_remark_lambda,
    verify_top_lambda,
    verify_virtual_pairing,
)

logger = get_logger("service.sweep.runtime")

JobFn = Callable[[], list[VerificationReport]]


@dataclass(frozen=True, slots=True)
class SweepJob:
    """One independent unit of sweep work."""

    key: str
    fn: JobFn


def _one(fn: Callable[[], VerificationReport]) -> JobFn:
    return lambda: [fn()]


def build_sweep_jobs(
    p_max: int,
    *,
    assume_mumford: bool,
    p2_mode: bool = False,
    config: SweepConfig | None = None,
) -> list[SweepJob]:
    """Every verification for primes p ≤ p_max within the configured bounds."""
    ParameterGuardService.ensure_at_least(action="sweep", name="p_max", value=p_max, minimum=2)
    cfg = config or get_app_settings().sweep
    primes = primes_up_to(p_max)
    jobs: list[SweepJob] = []

    for p in primes:
        jobs += [
            SweepJob(f"coeff_oracle:{p}", _one(lambda p=p: coeff_oracle_report(p))),
            SweepJob(
                f"main_degree:{p}",
                _one(lambda p=p: verify_main_degree(p, assume_mumford=assume_mumford)),
            ),
            SweepJob(f"main_grading:{p}", _one(lambda p=p: verify_main_grading(p))),
            SweepJob(
                f"remark_lambda:{p}",
                lambda p=p: [
                    verify_remark_lambda(n, p, assume_mumford=assume_mumford)
                    for n in range(cfg.n_max + 1)
                ],
            ),
            SweepJob(
                f"top_lambda:{p}",
                _one(lambda p=p: verify_top_lambda(p, assume_mumford=assume_mumford)),
            ),
            SweepJob(
                f"frobenius:{p}",
                lambda p=p: [
                    pushforward_range_report(p, cfg.d_bound),
                    gr_identity_report(p),
                    summand_report(p),
                ],
            ),
            SweepJob(
                f"arr:{p}",
                lambda p=p: [arr_range_report(p, cfg.d_bound), symbolic_arr_report(p)],
            ),
        ]

    for p in sorted(set(primes) | set(CLOSED_FORM_SAMPLE_PRIMES)):
        jobs.append(SweepJob(f"coeff_moments:{p}", _one(lambda p=p: coeff_moments_report(p))))

    jobs += [
        SweepJob("cube_identity", lambda: [cube_identity_report(), cube_identity_report(5, 2)]),
        SweepJob(
            "power_triviality",
            lambda: [verify_power_triviality(l, cfg.cube_bound, cfg.cube_samples) for l in (3, 4)]
            + [verify_virtual_pairing(cfg.cube_bound, cfg.cube_samples)],
        ),
        SweepJob("deligne", lambda: verify_deligne_all(p2_mode=p2_mode)),
        SweepJob("omega_pairing", lambda: verify_omega_pairing(p2_mode=p2_mode)),
        SweepJob(
            "mumford",
            lambda: [
                verify_mumford(n, assume_mumford=assume_mumford)
                for n in range(cfg.mumford_n_max + 1)
            ],
        ),
        SweepJob(
            "lambda_recursion",
            lambda: [verify_lambda_recursion(n) for n in range(cfg.mumford_n_max + 1)]
            + [verify_lambda_induction(cfg.mumford_n_max)],
        ),
    ]
    return jobs


class SweepRuntime:
    """Runs sweep jobs on worker threads, bounded by a semaphore."""

    def __init__(self, workers: int):
        ParameterGuardService.ensure_at_least(action="sweep_runtime", name="workers", value=workers, minimum=1)
        self._workers = workers
        self._tasks: dict[str, asyncio.Task[list[VerificationReport]]] = {}
        self._instance_id = uuid4().hex[:8]

    async def run(self, jobs: list[SweepJob]) -> SweepSummary:
        """Run every job and aggregate reports in (identity, params) order."""
        semaphore = asyncio.Semaphore(self._workers)
        logger.info("sweep {} starting {} jobs on {} workers", self._instance_id, len(jobs), self._workers)
        try:
            for job in jobs:
                self._tasks[job.key] = asyncio.create_task(self._run_job(job, semaphore))
            batches = await asyncio.gather(*self._tasks.values())
        finally:
            for task in self._tasks.values():
                task.cancel()
            self._tasks.clear()

        reports = sorted((r for batch in batches for r in batch), key=VerificationReport.sort_key)
        summary = SweepSummary(reports=reports)
        logger.info(
            "sweep {} finished: {} checks, {} as expected, {} not",
            self._instance_id,
            summary.total,
            summary.passed,
            summary.failed,
        )
        return summary

    async def _run_job(self, job: SweepJob, semaphore: asyncio.Semaphore) -> list[VerificationReport]:
        async with semaphore:
            reports = await asyncio.to_thread(job.fn)
        logger.debug("sweep job {} produced {} reports", job.key, len(reports))
        return reports


def run_sweep(
    p_max: int,
    *,
    assume_mumford: bool,
    p2_mode: bool = False,
    config: SweepConfig | None = None,
) -> SweepSummary:
    """Build and run a full sweep synchronously."""
    cfg = config or get_app_settings().sweep
    jobs = build_sweep_jobs(p_max, assume_mumford=assume_mumford, p2_mode=p2_mode, config=cfg)
    return asyncio.run(SweepRuntime(cfg.workers).run(jobs))
