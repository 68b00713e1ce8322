"""logging configuration using Loguru."""

from __future__ import annotations

import logging
from contextvars import ContextVar
from pathlib import Path
from typing import TYPE_CHECKING

from loguru import logger
from loguru_config import LoguruConfig

from app.core.settings import get_app_settings

if TYPE_CHECKING:
    from loguru import Record

LOG_CONFIG_PATH = Path(__file__).parent.parent.parent / "mlog.yaml"

run_id_ctx: ContextVar[str] = ContextVar("run_id", default="no-run")


def get_logger(layer: str):
    """Return a loguru logger pre-bound with an architectural layer tag.

    Usage at module level in any file::

        from app.core.log_config import get_logger

        logger = get_logger("service.verify")
    """
    return logger.bind(layer=layer)


def _inject_run_id(record: Record) -> None:
    record["extra"]["run_id"] = run_id_ctx.get()


def bind_run(run_id: str):
    """Set the run id for the current context and return a logger bound to it.

    Once :func:`configure_logging` has run, every record emitted in this
    context carries the id, including those from module-level loggers.
    """
    run_id_ctx.set(run_id)
    return logger.bind(run_id=run_id)


class InterceptHandler(logging.Handler):
    """Redirect standard logging records to Loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        """Emit a logging record."""
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(
            depth=depth,
            exception=record.exc_info,
        ).log(level, record.getMessage())


def _configure_standard_logging() -> None:
    """Redirect standard library logging to Loguru using the InterceptHandler."""
    logging.root.handlers = [InterceptHandler()]
    logging.root.setLevel(logging.WARNING)

    for name in ("asyncio", "typer", "click"):
        logging_logger = logging.getLogger(name)
        logging_logger.handlers = [InterceptHandler()]
        logging_logger.propagate = False


def configure_logging(level: str | None = None) -> None:
    """Configure loguru using the config file and runtime settings.

    Stream sinks always write to stderr so stdout stays reserved for reports.
    File sinks are kept only when ``LOG_TO_FILE`` is enabled.

    Args:
        level: Optional level overriding ``LOG_LEVEL`` for stream sinks.
    """
    settings = get_app_settings()
    stream_level = (level or settings.log.level).upper()

    if not LOG_CONFIG_PATH.exists():
        logger.warning("Log config not found: {}", LOG_CONFIG_PATH)
        return

    config = LoguruConfig.load(str(LOG_CONFIG_PATH), configure=False)
    if config is None:
        return

    config = config.parse()
    handlers = []
    for handler in config.handlers or []:
        if getattr(handler.get("sink"), "write", None) is not None:
            handlers.append({**handler, "level": stream_level})
        elif settings.log.to_file:
            settings.log.file_path.parent.mkdir(parents=True, exist_ok=True)
            handlers.append({**handler, "sink": str(settings.log.file_path)})
    config.handlers = handlers

    config.configure()
    logger.configure(patcher=_inject_run_id)
    _configure_standard_logging()

    logger.bind(layer="core.logging").debug(
        "Loguru configured (level={}, file={}).", stream_level, settings.log.to_file
    )
