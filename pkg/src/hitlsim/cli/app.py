"""Main CLI application for hitlsim.

Exit codes: 0 on success, 2 for invalid input (files, flags, config),
1 for internal errors.
"""

from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.markup import escape

from hitlsim import __version__
from hitlsim.cli.context import create_context
from hitlsim.cli.options import FormatOption, IouOption, LogLevelOption, ModeOption

# Import commands to ensure they're registered
from hitlsim.commands import CommandRegistry
from hitlsim.config import get_config
from hitlsim.exceptions import HitlSimError
from hitlsim.output.base import ReportFormat
from hitlsim.utils.logging import info, setup_logging

app = typer.Typer(
    name="hitlsim",
    help="Human-in-the-loop anomaly alert simulator and evaluation toolkit",
    add_completion=False,
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)


def _fail(message: str, exit_code: int) -> typer.Exit:
    err_console.print(
        f"[red]Error:[/red] {escape(message)}", highlight=False, soft_wrap=True
    )
    return typer.Exit(exit_code)


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        console.print(f"hitlsim version {__version__}")
        raise typer.Exit()


@app.callback()
def main_callback(
    version: bool = typer.Option(
        False,
        "--version",
        "-V",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
    log_level: LogLevelOption = None,
    json_logs: bool = typer.Option(False, "--json-logs", help="Log as JSON lines."),
) -> None:
    """Human-in-the-loop anomaly alert simulator and evaluation toolkit."""
    try:
        config = get_config()
    except HitlSimError as e:
        raise _fail(str(e), e.exit_code) from None
    setup_logging(
        level=log_level or config.logging.level,
        log_file=config.logging.file,
        json_format=json_logs or config.logging.json_format,
        use_color=config.output.color,
    )


def _run(name: str, format_choice: ReportFormat | None, **kwargs: Any) -> None:
    """Run a registered command and map its outcome to an exit code."""
    try:
        ctx = create_context(format_choice=format_choice)
        cmd = CommandRegistry.create(name)
        result = cmd.run(ctx, **kwargs)
    except HitlSimError as e:
        raise _fail(str(e), e.exit_code) from None
    except Exception as e:
        raise _fail(f"internal error: {e}", 1) from None

    if not result.success:
        raise _fail(result.error or "Unknown error", result.exit_code or 1)
    info("Effective configuration", **result.metadata.get("effective", {}))


@app.command("config")
def config_cmd(
    show_path: bool = typer.Option(False, "--path", "-p", help="Show config file path."),
    show_default: bool = typer.Option(
        False, "--default", help="Print the default configuration file."
    ),
) -> None:
    """Show the effective configuration."""
    from hitlsim.config.defaults import DEFAULT_CONFIG_TOML
    from hitlsim.config.loader import get_config_path

    if show_path:
        typer.echo(str(get_config_path()))
        return
    if show_default:
        typer.echo(DEFAULT_CONFIG_TOML, nl=False)
        return
    typer.echo(get_config().model_dump_json(indent=2))


@app.command()
def postprocess(
    frames: Path = typer.Option(..., "--frames", help="Frame file (bitstring or index,flag)."),
    out: Path = typer.Option(..., "--out", help="Interval file to write."),
    mode: ModeOption = None,
    format: FormatOption = None,
) -> None:
    """Smooth per-frame flags and write event intervals."""
    _run("postprocess", format, frames=frames, out=out, mode=mode)


@app.command("eval")
def evaluate(
    gt: Path = typer.Option(..., "--gt", help="Ground-truth interval file."),
    pred: Path = typer.Option(..., "--pred", help="Predicted interval file."),
    iou: IouOption = None,
    format: FormatOption = None,
) -> None:
    """Score predicted event intervals against ground truth."""
    _run("eval", format, gt=gt, pred=pred, iou=iou)


@app.command()
def simulate(
    out: Path = typer.Option(..., "--out", help="Log file to write."),
    config: Path | None = typer.Option(
        None, "--config", "-c", help="TOML file with a [simulation] table."
    ),
    seed: int | None = typer.Option(None, "--seed", help="Override the configured seed."),
    replicates: int = typer.Option(
        1, "--replicates", help="Run consecutive seeds; logs get a .seed<N> suffix."
    ),
    workers: int = typer.Option(1, "--workers", help="Worker processes for replicates."),
    format: FormatOption = None,
) -> None:
    """Simulate the alert feedback loop and write canonical event logs."""
    _run(
        "simulate",
        format,
        out=out,
        config=config,
        seed=seed,
        replicates=replicates,
        workers=workers,
    )


@app.command()
def metrics(
    log: Path = typer.Option(..., "--log", help="Event log file."),
    window: float | None = typer.Option(None, "--window", help="Window length in seconds."),
    cv: float | None = typer.Option(None, "--cv", help="Coefficient-of-variation threshold."),
    stable: int | None = typer.Option(None, "--stable", help="Consecutive stable windows."),
    gt: Path | None = typer.Option(None, "--gt", help="Ground-truth intervals for FNR."),
    pred: Path | None = typer.Option(None, "--pred", help="Predicted intervals for FNR."),
    iou: IouOption = None,
    format: FormatOption = None,
) -> None:
    """Compute accuracy, latency and adaptation metrics from a log."""
    _run(
        "metrics",
        format,
        log=log,
        window=window,
        cv=cv,
        stable=stable,
        gt=gt,
        pred=pred,
        iou=iou,
    )


@app.command()
def survey(
    responses: Path = typer.Option(..., "--responses", help="Survey file."),
    alpha_strict: bool = typer.Option(
        False, "--alpha-strict", help="Fail (exit 2) when alpha cannot be computed."
    ),
    format: FormatOption = None,
) -> None:
    """Score Likert trust surveys and report Cronbach's alpha."""
    _run("survey", format, responses=responses, alpha_strict=alpha_strict)


def main() -> None:
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
