# Copyright (c) 2026 okedigitalmedia/hasanmaki. All rights reserved.
"""Workbench settings and configuration management.

Provides Pydantic-based settings models (Google-style) used across the workbench,
including sweep bounds, report rendering and logging configuration. Use
:func:`get_app_settings` for a cached settings instance.
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


class SweepConfig(BaseSettings):
    """Bounds and parallelism for verification sweeps."""

    model_config = {"env_prefix": "SWEEP_"}

    p_max: int = Field(13, ge=2)
    d_bound: int = Field(50, ge=0)
    n_max: int = Field(5, ge=0)
    mumford_n_max: int = Field(10, ge=0)
    cube_bound: int = Field(3, ge=1)
    cube_samples: int = Field(1000, ge=1)
    workers: int = Field(4, ge=1, le=64)


class ReportConfig(BaseSettings):
    """Report rendering settings."""

    model_config = {"env_prefix": "REPORT_"}

    include_timing: bool = False
    json_indent: int = Field(2, ge=0)


class LogConfig(BaseSettings):
    """Logging settings layered on top of ``mlog.yaml``."""

    model_config = {"env_prefix": "LOG_"}

    level: str = "WARNING"
    to_file: bool = False
    file_path: Path = Path("logs/workbench.log")


class WorkbenchSettings(BaseSettings):
    """Top-level settings for the workbench CLI."""

    assume_mumford: bool = False
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)
    log: LogConfig = Field(default_factory=LogConfig)

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
        "env_nested_delimiter": "__",
    }


@lru_cache
def get_app_settings() -> WorkbenchSettings:
    """Get cached workbench settings."""
    return WorkbenchSettings()  # type: ignore
