# Copyright (c) 2026 okedigitalmedia/hasanmaki. All rights reserved.
"""Workbench base exceptions and common subclasses.

Provides :class:`AppBaseExceptionError` with helpers to serialize exceptions
for CLI output and structured logging, plus the concrete subclasses raised by
the algebra services (e.g., :class:`NotPrimeError`,
:class:`NonInvertibleClassError`).
"""

from typing import Any


class AppBaseExceptionError(Exception):
    """Base class for all workbench-specific exceptions.

    Design principles:
    - Process-aware (exit code defined at class level)
    - Stable error code contract for reports + logs
    - Safe to be raised from any layer (algebra / verify / cli)

    Attributes:
        DEFAULT_EXIT_CODE: Process exit code associated with the error.
        DEFAULT_MESSAGE: Default human-readable error message.
        DEFAULT_CODE: Stable application error code for reports & logs.
        DEFAULT_LOG_LEVEL: Loguru level name to use when logging.
    """

    DEFAULT_EXIT_CODE: int = 1
    DEFAULT_MESSAGE: str = "Workbench error."
    DEFAULT_CODE: str = "app_error"
    DEFAULT_LOG_LEVEL: str = "WARNING"

    def __init__(
        self,
        message: str | None = None,
        error_code: str | None = None,
        context: dict[str, Any] | None = None,
        original_exception: Exception | None = None,
    ) -> None:
        super().__init__(message or self.DEFAULT_MESSAGE)
        self.context: dict[str, Any] = context or {}
        self.original_exception: Exception | None = original_exception
        self.error_code: str = error_code or self.DEFAULT_CODE

    @property
    def exit_code(self) -> int:
        """Process exit code associated with this exception."""
        return self.DEFAULT_EXIT_CODE

    def to_payload(self) -> dict[str, Any]:
        """Serialize exception for CLI error output."""
        return {
            "success": False,
            "error": self.__class__.__name__,
            "error_code": self.error_code,
            "message": str(self),
            "context": self.context,
        }

    def to_log_payload(self, run_id: str) -> dict[str, Any]:
        """Serialize exception for structured logging."""
        return {
            "type": self.__class__.__name__,
            "message": str(self),
            "exit_code": self.exit_code,
            "context": self.context,
            "original_exception": repr(self.original_exception),
            "error_code": self.error_code,
            "run_id": run_id,
        }

    def __repr__(self) -> str:
        """Return a compact representation including message, context and error code."""
        return (
            f"{self.__class__.__name__}("
            f"message={str(self)!r}, "
            f"context={self.context!r}, "
            f"original_exception={self.original_exception!r}, "
            f"error_code={self.error_code!r})"
        )


class AppValidationError(AppBaseExceptionError):
    """Invalid parameter or usage."""

    DEFAULT_MESSAGE = "Invalid parameters."
    DEFAULT_EXIT_CODE = 2
    DEFAULT_CODE = "validation_error"


class NotPrimeError(AppValidationError):
    """A characteristic was required to be prime."""

    DEFAULT_MESSAGE = "Parameter must be a prime number."
    DEFAULT_CODE = "not_prime"


class CyclicBindingError(AppValidationError):
    """Substitution bindings refer to bound symbols."""

    DEFAULT_MESSAGE = "Substitution bindings are cyclic."
    DEFAULT_CODE = "cyclic_binding"


class InvalidOperandError(AppValidationError):
    """Operand outside the domain of an operation."""

    DEFAULT_MESSAGE = "Operand outside the domain of the operation."
    DEFAULT_CODE = "invalid_operand"


class AppArithmeticError(AppBaseExceptionError):
    """Exact computation could not be carried out."""

    DEFAULT_MESSAGE = "Arithmetic error."
    DEFAULT_EXIT_CODE = 1
    DEFAULT_CODE = "arithmetic_error"


class NonInvertibleClassError(AppArithmeticError):
    """Class is not a unit in the localized Grothendieck group."""

    DEFAULT_MESSAGE = "Class is not invertible after inverting p."
    DEFAULT_CODE = "non_invertible_class"


class OracleMismatchError(AppArithmeticError):
    """A closed form disagreed with its independent oracle."""

    DEFAULT_MESSAGE = "Closed form disagrees with its oracle."
    DEFAULT_CODE = "oracle_mismatch"
    DEFAULT_LOG_LEVEL = "ERROR"
