"""Exception handling for the command-line front end."""

from collections.abc import Callable
from typing import Any

from loguru import logger
from pydantic import ValidationError

from app.core.exceptions.base import AppBaseExceptionError
from app.core.log_config import run_id_ctx

USAGE_EXIT_CODE = 2
FAILURE_EXIT_CODE = 1


def _validation_payload(exc: ValidationError) -> dict[str, Any]:
    """Build the error payload for a pydantic validation error."""
    errors = exc.errors(include_url=False)
    first_error = errors[0] if errors else {}
    msg = first_error.get("msg", "Validation failed.")
    loc = " -> ".join(str(part) for part in first_error.get("loc", []))
    return {
        "success": False,
        "error": "ValidationError",
        "error_code": "validation_error",
        "message": f"Validation failed at {loc}: {msg}" if loc else msg,
        "context": {"errors": [str(err.get("msg")) for err in errors]},
    }


def handle_exception(
    exc: BaseException,
    emit: Callable[[dict[str, Any]], None],
    logger_: Any | None = None,
) -> int:
    """Log an exception, emit its payload and return the process exit code.

    Args:
        exc: The exception raised while executing a command.
        emit: Callback receiving the serialized error payload.
        logger_: Optional logger; defaults to the module-level loguru logger.

    Returns:
        2 for usage and validation errors, the error's own exit code for
        workbench errors, 1 for anything unexpected.
    """
    logger_ = logger_ or logger
    run_id = run_id_ctx.get()

    if isinstance(exc, AppBaseExceptionError):
        bound = logger_.bind(
            error=exc.__class__.__name__,
            error_code=exc.error_code,
            exit_code=exc.exit_code,
        )
        bound.opt(exception=exc.original_exception).log(
            exc.DEFAULT_LOG_LEVEL,
            "APPLICATION_ERROR | {name} | {msg} | context={ctx}",
            name=exc.__class__.__name__,
            msg=str(exc),
            ctx=exc.to_log_payload(run_id)["context"],
        )
        emit(exc.to_payload())
        return exc.exit_code

    if isinstance(exc, ValidationError):
        payload = _validation_payload(exc)
        logger_.warning(
            "VALIDATION_ERROR | {msg}",
            msg=payload["message"],
        )
        emit(payload)
        return USAGE_EXIT_CODE

    logger_.opt(exception=exc).critical(
        "UNEXPECTED_ERROR | {type} | {exc!r} | run={run}",
        type=exc.__class__.__name__,
        exc=exc,
        run=run_id,
    )
    emit(
        {
            "success": False,
            "error": "InternalError",
            "error_code": "internal_error",
            "message": "Unexpected internal error.",
            "context": {},
        }
    )
    return FAILURE_EXIT_CODE
