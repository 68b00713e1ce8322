"""Typer application behind the ``rrwork`` command."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any
from uuid import uuid4

import typer

from app.cli.render import render, render_json
from app.cli.runner import run
from app.cli.schemas import RunConfig
from app.core.exceptions.handlers import handle_exception
from app.core.log_config import bind_run, configure_logging, get_logger
from app.core.settings import get_app_settings
from app.models import Command, DeligneForm, OutputFormat

logger = get_logger("cli")

cli = typer.Typer(
    name="rrwork",
    help="Exact verification of Frobenius Riemann-Roch identities at degree level.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)

PrimeOpt = Annotated[int | None, typer.Option("--p", help="Prime characteristic.")]
FormatOpt = Annotated[OutputFormat, typer.Option("--format", help="Report format.")]
OutOpt = Annotated[Path | None, typer.Option("--out", help="Also write the JSON report to FILE.")]
TimingsOpt = Annotated[bool, typer.Option("--timings", help="Include elapsed_ms in reports.")]
MumfordOpt = Annotated[
    bool, typer.Option("--assume-mumford", help="Bind lam to ww/12 (also set by ASSUME_MUMFORD).")
]
P2ModeOpt = Annotated[
    bool, typer.Option("--p2-mode", help="Derive the lam binding from the p = 2 identity.")
]


@cli.callback()
def main(
    verbose: Annotated[bool, typer.Option("-v", "--verbose", help="Log at DEBUG on stderr.")] = False,
) -> None:
    """Configure logging and bind a run id for every command."""
    configure_logging(level="DEBUG" if verbose else None)
    bind_run(uuid4().hex[:12])


def _emit_error(payload: dict[str, Any]) -> None:
    typer.echo(json.dumps(payload), err=True)


def _execute(
    command: Command,
    *,
    output_format: OutputFormat,
    out: Path | None,
    timings: bool,
    assume_mumford: bool = False,
    **params: Any,
) -> None:
    settings = get_app_settings()
    try:
        config = RunConfig(
            command=command,
            output_format=output_format,
            out=out,
            include_timing=timings or settings.report.include_timing,
            assume_mumford=assume_mumford or settings.assume_mumford,
            **params,
        )
        outcome = run(config, settings)
        typer.echo(
            render(
                outcome,
                config.output_format,
                include_timing=config.include_timing,
                indent=settings.report.json_indent,
            )
        )
        if config.out is not None:
            config.out.parent.mkdir(parents=True, exist_ok=True)
            config.out.write_text(
                render_json(
                    outcome,
                    include_timing=config.include_timing,
                    indent=settings.report.json_indent,
                )
                + "\n",
                encoding="utf-8",
            )
        code = outcome.exit_code
    except Exception as exc:  # noqa: BLE001
        code = handle_exception(exc, _emit_error, logger)
    raise typer.Exit(code)


@cli.command("coeffs")
def coeffs(
    p: PrimeOpt = None,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
) -> None:
    """Print the exponents c_a of the main identity."""
    _execute(Command.COEFFS, output_format=output_format, out=out, timings=False, p=p)


@cli.command("verify-main")
def verify_main(
    p: PrimeOpt = None,
    assume_mumford: MumfordOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Degree of the main isomorphism."""
    _execute(
        Command.VERIFY_MAIN,
        output_format=output_format,
        out=out,
        timings=timings,
        assume_mumford=assume_mumford,
        p=p,
    )


@cli.command("verify-grading")
def verify_grading(
    p: PrimeOpt = None,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Gradings of the main isomorphism in the symbols d, g."""
    _execute(Command.VERIFY_GRADING, output_format=output_format, out=out, timings=timings, p=p)


@cli.command("verify-deligne")
def verify_deligne(
    form: Annotated[
        DeligneForm | None, typer.Option("--form", help="Single form; all forms when omitted.")
    ] = None,
    p2_mode: P2ModeOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Deligne's isomorphism, including the as-printed negative control."""
    _execute(
        Command.VERIFY_DELIGNE,
        output_format=output_format,
        out=out,
        timings=timings,
        form=form,
        p2_mode=p2_mode,
    )


@cli.command("verify-mumford")
def verify_mumford(
    n: Annotated[int | None, typer.Option("--n", help="Power of ω.")] = None,
    p: PrimeOpt = None,
    assume_mumford: MumfordOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """lam_n against lam_1^(6n²−6n+1)."""
    _execute(
        Command.VERIFY_MUMFORD,
        output_format=output_format,
        out=out,
        timings=timings,
        assume_mumford=assume_mumford,
        n=n,
        p=p,
    )


@cli.command("verify-remark")
def verify_remark(
    n: Annotated[int | None, typer.Option("--n", help="Power of ω.")] = None,
    p: PrimeOpt = None,
    assume_mumford: MumfordOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """The main identity for L = ω^n."""
    _execute(
        Command.VERIFY_REMARK,
        output_format=output_format,
        out=out,
        timings=timings,
        assume_mumford=assume_mumford,
        n=n,
        p=p,
    )


@cli.command("verify-arr")
def verify_arr(
    p: PrimeOpt = None,
    d: Annotated[int | None, typer.Option("--d", help="Twist; a range when omitted.")] = None,
    d_bound: Annotated[int | None, typer.Option("--d-bound", help="Range |d| <= bound.")] = None,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Adams-Riemann-Roch for O(d) on the projective line."""
    _execute(
        Command.VERIFY_ARR,
        output_format=output_format,
        out=out,
        timings=timings,
        p=p,
        d=d,
        d_bound=d_bound,
    )


@cli.command("verify-cube")
def verify_cube(
    t: Annotated[int | None, typer.Option("--t", help="Numeric t (with --p).")] = None,
    p: PrimeOpt = None,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """p³ + (t − p)³ = t·(p² + p(p − t) + (p − t)²)."""
    _execute(Command.VERIFY_CUBE, output_format=output_format, out=out, timings=timings, t=t, p=p)


@cli.command("verify-lambda")
def verify_lambda(
    n: Annotated[int | None, typer.Option("--n", help="Largest n (defaults to SWEEP_MUMFORD_N_MAX).")] = None,
    p2_mode: P2ModeOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Lambda recursion, Mumford exponents by induction and ⟨ω, ω⟩."""
    _execute(
        Command.VERIFY_LAMBDA,
        output_format=output_format,
        out=out,
        timings=timings,
        n=n,
        p2_mode=p2_mode,
    )


@cli.command("verify-top")
def verify_top(
    p: PrimeOpt = None,
    assume_mumford: MumfordOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """lam_(2p−2) solved in terms of lam_1, ..., lam_(2p−3)."""
    _execute(
        Command.VERIFY_TOP,
        output_format=output_format,
        out=out,
        timings=timings,
        assume_mumford=assume_mumford,
        p=p,
    )


@cli.command("frobenius")
def frobenius(
    p: PrimeOpt = None,
    d: Annotated[int | None, typer.Option("--d", help="Twist of O(d).")] = None,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Splitting of F_*O(d) with its oracle, ARR and the gr identity."""
    _execute(Command.FROBENIUS, output_format=output_format, out=out, timings=timings, p=p, d=d)


@cli.command("sweep")
def sweep(
    p_max: Annotated[int | None, typer.Option("--p-max", help="Largest prime (defaults to SWEEP_P_MAX).")] = None,
    d_bound: Annotated[int | None, typer.Option("--d-bound", help="Twists |d| <= bound.")] = None,
    assume_mumford: MumfordOpt = False,
    p2_mode: P2ModeOpt = False,
    output_format: FormatOpt = OutputFormat.TEXT,
    out: OutOpt = None,
    timings: TimingsOpt = False,
) -> None:
    """Every verification for all primes up to --p-max."""
    _execute(
        Command.SWEEP,
        output_format=output_format,
        out=out,
        timings=timings,
        assume_mumford=assume_mumford,
        p_max=p_max,
        d_bound=d_bound,
        p2_mode=p2_mode,
    )
