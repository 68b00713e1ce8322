"""Enumerations shared by services, reports and the command line."""

from app.models.commands import Command, OutputFormat
from app.models.forms import DeligneForm
from app.models.statuses import CheckStatus

__all__ = ["CheckStatus", "Command", "DeligneForm", "OutputFormat"]
