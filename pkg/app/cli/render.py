"""Text and JSON renderings of run outcomes."""

from __future__ import annotations

from app.cli.runner import RunOutcome
from app.cli.schemas import CoeffOutput
from app.models import CheckStatus, OutputFormat
from app.services.verify import SweepSummary


def public_summary(outcome: RunOutcome, *, include_timing: bool) -> SweepSummary:
    """Summary with timings stripped unless requested."""
    return SweepSummary(
        reports=[r.public(include_timing=include_timing) for r in outcome.summary.reports]
    )


def render_json(outcome: RunOutcome, *, include_timing: bool, indent: int) -> str:
    """Deterministic JSON document for an outcome."""
    if outcome.table is not None:
        output = CoeffOutput(
            p=outcome.table.p,
            entries=outcome.table.entries,
            moments=list(outcome.moments or ()),
        )
        return output.model_dump_json(indent=indent or None)
    return public_summary(outcome, include_timing=include_timing).model_dump_json(
        indent=indent or None
    )


def render_text(outcome: RunOutcome, *, include_timing: bool) -> str:
    """Human-readable table for an outcome."""
    if outcome.table is not None:
        lines = [f"p = {outcome.table.p}", "    a    c_a"]
        lines += [f"{a:>5}  {c:>5}" for a, c in outcome.table.as_pairs()]
        if outcome.moments is not None:
            lines.append("sums (c, c*a, c*a^2): " + ", ".join(str(m) for m in outcome.moments))
        return "\n".join(lines)

    summary = outcome.summary
    lines: list[str] = []
    for report in summary.reports:
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        head = f"{report.status.value.upper():<4}  {report.identity}  {params}".rstrip()
        if report.expected is CheckStatus.FAIL:
            head += "  (expected fail)"
        if include_timing and report.elapsed_ms is not None:
            head += f"  [{report.elapsed_ms:.3f} ms]"
        lines.append(head)
        lines.append(f"      lhs: {report.lhs}")
        lines.append(f"      rhs: {report.rhs}")
        if report.status is CheckStatus.FAIL and report.residual is not None:
            lines.append(f"      residual: {report.residual}")
        if report.note:
            lines.append(f"      note: {report.note}")
    lines.append(f"{summary.total} checks, {summary.passed} as expected, {summary.failed} not")
    return "\n".join(lines)


def render(outcome: RunOutcome, output_format: OutputFormat, *, include_timing: bool, indent: int) -> str:
    if output_format is OutputFormat.JSON:
        return render_json(outcome, include_timing=include_timing, indent=indent)
    return render_text(outcome, include_timing=include_timing)
