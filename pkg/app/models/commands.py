"""Command vocabulary of the command-line front end."""

from enum import StrEnum


class Command(StrEnum):
    """Commands accepted by the runner."""

    COEFFS = "coeffs"
    VERIFY_MAIN = "verify-main"
    VERIFY_GRADING = "verify-grading"
    VERIFY_DELIGNE = "verify-deligne"
    VERIFY_MUMFORD = "verify-mumford"
    VERIFY_REMARK = "verify-remark"
    VERIFY_ARR = "verify-arr"
    VERIFY_CUBE = "verify-cube"
    VERIFY_LAMBDA = "verify-lambda"
    VERIFY_TOP = "verify-top"
    FROBENIUS = "frobenius"
    SWEEP = "sweep"


class OutputFormat(StrEnum):
    """Report rendering format."""

    TEXT = "text"
    JSON = "json"
