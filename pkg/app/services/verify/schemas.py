"""Schemas for coefficient tables and verification reports."""

from __future__ import annotations

from time import perf_counter

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from app.models import CheckStatus
from app.services.polyring import Poly


class CoeffEntry(BaseModel):
    """One factor (det Rf_*(L^p ⊗ ω^a))^{c_a} of the main identity."""

    model_config = ConfigDict(frozen=True)

    twist: int = Field(..., ge=0, examples=[1])
    exponent: int = Field(..., examples=[-4])


class CoeffTable(BaseModel):
    """Exponents c_a for a = 0..2p−2 at a given prime."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, examples=[2])
    entries: list[CoeffEntry]

    @model_validator(mode="after")
    def _check_twists(self) -> CoeffTable:
        twists = [entry.twist for entry in self.entries]
        if twists != list(range(2 * self.p - 1)):
            raise ValueError(f"twists must be 0..{2 * self.p - 2} in order, got {twists}")
        return self

    def as_pairs(self) -> list[tuple[int, int]]:
        """Entries as (twist, exponent) tuples."""
        return [(entry.twist, entry.exponent) for entry in self.entries]

    def exponent(self, twist: int) -> int:
        """c_a for the given twist a."""
        return self.entries[twist].exponent


class VerificationReport(BaseModel):
    """Outcome of one identity check, with both sides rendered canonically."""

    identity: str
    params: dict[str, int | str | bool]
    status: CheckStatus
    lhs: str
    rhs: str
    elapsed_ms: float | None = None
    expected: CheckStatus = CheckStatus.PASS
    residual: str | None = None
    note: str | None = None

    @model_validator(mode="after")
    def _status_matches_sides(self) -> VerificationReport:
        want = CheckStatus.PASS if self.lhs == self.rhs else CheckStatus.FAIL
        if self.status != want:
            raise ValueError(f"status {self.status} contradicts rendered sides")
        return self

    @classmethod
    def compare(
        cls,
        identity: str,
        params: dict[str, int | str | bool],
        lhs: Poly | str,
        rhs: Poly | str,
        *,
        started: float | None = None,
        expected: CheckStatus = CheckStatus.PASS,
        note: str | None = None,
    ) -> VerificationReport:
        """Render both sides and derive the status from the renderings.

        Polynomial sides also carry the canonical residual ``lhs - rhs``.
        """
        left = lhs.render() if isinstance(lhs, Poly) else lhs
        right = rhs.render() if isinstance(rhs, Poly) else rhs
        residual = (lhs - rhs).render() if isinstance(lhs, Poly) and isinstance(rhs, Poly) else None
        return cls(
            identity=identity,
            params=params,
            status=CheckStatus.PASS if left == right else CheckStatus.FAIL,
            lhs=left,
            rhs=right,
            elapsed_ms=None if started is None else round((perf_counter() - started) * 1000, 3),
            expected=expected,
            residual=residual,
            note=note,
        )

    @property
    def ok(self) -> bool:
        """True iff the status is the one this check is expected to have."""
        return self.status == self.expected

    def sort_key(self) -> tuple[str, tuple[tuple[str, int, int, str], ...]]:
        """Ascending (identity, params) order used for aggregation."""
        keyed = []
        for name, value in self.params.items():
            if isinstance(value, int):
                keyed.append((name, 0, int(value), ""))
            else:
                keyed.append((name, 1, 0, value))
        return self.identity, tuple(keyed)

    def public(self, *, include_timing: bool) -> VerificationReport:
        """Copy with timing stripped unless requested."""
        if include_timing:
            return self
        return self.model_copy(update={"elapsed_ms": None})


class SweepSummary(BaseModel):
    """Aggregated sweep result in deterministic order."""

    reports: list[VerificationReport]

    @computed_field
    @property
    def total(self) -> int:
        """Number of checks."""
        return len(self.reports)

    @computed_field
    @property
    def passed(self) -> int:
        """Checks whose status matched the expected status."""
        return sum(1 for report in self.reports if report.ok)

    @computed_field
    @property
    def failed(self) -> int:
        """Checks whose status differed from the expected status."""
        return self.total - self.passed
