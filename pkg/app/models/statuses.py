"""Shared status enums for verification results."""

from enum import StrEnum


class CheckStatus(StrEnum):
    """Outcome of a single identity check."""

    PASS = "pass"  # both sides render identically
    FAIL = "fail"
