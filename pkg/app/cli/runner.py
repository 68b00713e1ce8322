"""Maps a run configuration to verification calls."""

from __future__ import annotations

from dataclasses import dataclass

from app.cli.schemas import RunConfig
from app.core.log_config import get_logger
from app.core.settings import WorkbenchSettings, get_app_settings
from app.models import Command, DeligneForm
from app.services.sweep import run_sweep
from app.services.verify import (
    CoeffTable,
    SweepSummary,
    VerificationReport,
    arr_range_report,
    arr_report,
    closed_form_sums,
    coeff_table,
    cube_identity_report,
    gr_identity_report,
    pushforward_report,
    summand_report,
    symbolic_arr_report,
    verify_deligne,
    verify_lambda_induction,
    verify_lambda_recursion,
    verify_main_degree,
    verify_main_grading,
    verify_mumford,
    verify_omega_pairing,
    verify_remark_lambda,
    verify_top_lambda,
)

logger = get_logger("cli.runner")


@dataclass(slots=True)
class RunOutcome:
    """Everything a command produced."""

    summary: SweepSummary
    table: CoeffTable | None = None
    moments: tuple[int, int, int] | None = None

    @property
    def exit_code(self) -> int:
        """0 iff every report has its expected status."""
        return 0 if self.summary.failed == 0 else 1


def run(config: RunConfig, settings: WorkbenchSettings | None = None) -> RunOutcome:
    """Execute the command named by ``config``."""
    settings = settings or get_app_settings()
    logger.debug("running {} with {}", config.command, config.model_dump(exclude_none=True))

    if config.command is Command.COEFFS:
        assert config.p is not None
        return RunOutcome(
            summary=SweepSummary(reports=[]),
            table=coeff_table(config.p),
            moments=closed_form_sums(config.p),
        )

    if config.command is Command.SWEEP:
        sweep_cfg = settings.sweep
        if config.d_bound is not None:
            sweep_cfg = sweep_cfg.model_copy(update={"d_bound": config.d_bound})
        summary = run_sweep(
            config.p_max or sweep_cfg.p_max,
            assume_mumford=config.assume_mumford,
            p2_mode=config.p2_mode,
            config=sweep_cfg,
        )
        return RunOutcome(summary=summary)

    return RunOutcome(summary=SweepSummary(reports=_reports_for(config, settings)))


def _reports_for(config: RunConfig, settings: WorkbenchSettings) -> list[VerificationReport]:
    p, n, d = config.p, config.n, config.d
    mumford = config.assume_mumford
    match config.command:
        case Command.VERIFY_MAIN:
            assert p is not None
            return [verify_main_degree(p, assume_mumford=mumford)]
        case Command.VERIFY_GRADING:
            assert p is not None
            return [verify_main_grading(p)]
        case Command.VERIFY_DELIGNE:
            forms = [config.form] if config.form else list(DeligneForm)
            return [verify_deligne(form, p2_mode=config.p2_mode) for form in forms]
        case Command.VERIFY_MUMFORD:
            assert n is not None
            return [verify_mumford(n, p or 2, assume_mumford=mumford)]
        case Command.VERIFY_REMARK:
            assert n is not None and p is not None
            return [verify_remark_lambda(n, p, assume_mumford=mumford)]
        case Command.VERIFY_ARR:
            assert p is not None
            if d is not None:
                return [arr_report(p, d), gr_identity_report(p)]
            d_bound = settings.sweep.d_bound if config.d_bound is None else config.d_bound
            return [arr_range_report(p, d_bound), symbolic_arr_report(p), gr_identity_report(p)]
        case Command.VERIFY_CUBE:
            reports = [cube_identity_report()]
            if config.t is not None:
                reports.append(cube_identity_report(config.t, p))
            return reports
        case Command.VERIFY_LAMBDA:
            n_max = settings.sweep.mumford_n_max if n is None else n
            return (
                [verify_lambda_recursion(k) for k in range(n_max + 1)]
                + [verify_lambda_induction(n_max)]
                + verify_omega_pairing(p2_mode=config.p2_mode)
            )
        case Command.VERIFY_TOP:
            assert p is not None
            return [verify_top_lambda(p, assume_mumford=mumford)]
        case Command.FROBENIUS:
            assert p is not None and d is not None
            return [
                pushforward_report(p, d),
                arr_report(p, d),
                gr_identity_report(p),
                summand_report(p),
            ]
    raise ValueError(f"unsupported command {config.command}")
