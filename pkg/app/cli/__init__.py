"""Command-line front end."""

from app.cli.app import cli
from app.cli.runner import RunOutcome, run
from app.cli.schemas import RunConfig

__all__ = ["RunConfig", "RunOutcome", "cli", "run"]
