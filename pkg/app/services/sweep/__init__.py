"""Concurrent verification sweeps."""

from app.services.sweep.runtime import SweepJob, SweepRuntime, build_sweep_jobs, run_sweep

__all__ = ["SweepJob", "SweepRuntime", "build_sweep_jobs", "run_sweep"]
