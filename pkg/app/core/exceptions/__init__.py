from app.core.exceptions.base import (
    AppArithmeticError,
    AppBaseExceptionError,
    AppValidationError,
    CyclicBindingError,
    InvalidOperandError,
    NonInvertibleClassError,
    NotPrimeError,
    OracleMismatchError,
)

__all__ = [
    "AppArithmeticError",
    "AppBaseExceptionError",
    "AppValidationError",
    "CyclicBindingError",
    "InvalidOperandError",
    "NonInvertibleClassError",
    "NotPrimeError",
    "OracleMismatchError",
]
