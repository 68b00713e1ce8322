"""Run configuration accepted by the command-line runner."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.models import Command, DeligneForm, OutputFormat
from app.services.guards import is_prime
from app.services.verify import CoeffEntry

REQUIRED_PARAMS: dict[Command, tuple[str, ...]] = {
    Command.COEFFS: ("p",),
    Command.VERIFY_MAIN: ("p",),
    Command.VERIFY_GRADING: ("p",),
    Command.VERIFY_DELIGNE: (),
    Command.VERIFY_MUMFORD: ("n",),
    Command.VERIFY_REMARK: ("n", "p"),
    Command.VERIFY_ARR: ("p",),
    Command.VERIFY_CUBE: (),
    Command.VERIFY_LAMBDA: (),
    Command.VERIFY_TOP: ("p",),
    Command.FROBENIUS: ("p", "d"),
    Command.SWEEP: (),
}


class RunConfig(BaseModel):
    """One validated invocation of the runner."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    p: int | None = Field(None, examples=[2])
    n: int | None = Field(None, ge=0, examples=[2])
    d: int | None = Field(None, examples=[-3])
    t: int | None = Field(None, examples=[5])
    form: DeligneForm | None = None
    p_max: int | None = Field(None, ge=2, examples=[13])
    d_bound: int | None = Field(None, ge=0, examples=[50])
    assume_mumford: bool = False
    p2_mode: bool = False
    output_format: OutputFormat = OutputFormat.TEXT
    include_timing: bool = False
    out: Path | None = None

    @field_validator("p")
    @classmethod
    def _p_is_prime(cls, value: int | None) -> int | None:
        if value is not None and not is_prime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value

    @model_validator(mode="after")
    def _required_for_command(self) -> RunConfig:
        missing = [name for name in REQUIRED_PARAMS[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command.value} requires {', '.join('--' + m for m in missing)}")
        if self.command is Command.VERIFY_CUBE and (self.t is None) != (self.p is None):
            raise ValueError("verify-cube takes --t and --p together or neither")
        return self


class CoeffOutput(BaseModel):
    """JSON shape of the ``coeffs`` command."""

    p: int
    entries: list[CoeffEntry]
    moments: list[int]
