"""Run the HITL alert pipeline simulation and write canonical logs."""

from pathlib import Path
from typing import Any

from hitlsim.commands.base import BaseCommand, CommandContext, CommandResult
from hitlsim.commands.registry import CommandRegistry
from hitlsim.config.loader import load_config
from hitlsim.config.schema import SimConfig
from hitlsim.exceptions import InvalidArgumentError
from hitlsim.output.reports import simulation_report
from hitlsim.sim.engine import coerce_sim_config, run_replicates, summarize
from hitlsim.store.logfile import write_log
from hitlsim.utils.hashing import file_digest
from hitlsim.utils.logging import info


def replicate_path(out: Path, seed: int) -> Path:
    """``runs/log.jsonl`` -> ``runs/log.seed7.jsonl``."""
    return out.with_name(f"{out.stem}.seed{seed}{out.suffix}")


@CommandRegistry.register
class SimulateCommand(BaseCommand):
    """Simulate alert -> feedback -> retraining runs."""

    @property
    def name(self) -> str:
        return "simulate"

    @property
    def description(self) -> str:
        return "Simulate the alert feedback loop and write event logs"

    @property
    def aliases(self) -> list[str]:
        return ["sim"]

    def execute(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        """Execute the simulate command.

        Args:
            ctx: Command context.
            **kwargs: Command arguments:
                - config: TOML file with a [simulation] table (default: ctx config)
                - out: Log file to write
                - seed: Seed override
                - replicates: Number of consecutive seeds to run (default: 1)
                - workers: Worker processes for replicates (default: 1)
        """
        out_arg = kwargs.get("out")
        if not out_arg:
            raise InvalidArgumentError("simulate needs an output log file")
        replicates = int(kwargs.get("replicates") or 1)
        workers = int(kwargs.get("workers") or 1)
        if replicates < 1:
            raise InvalidArgumentError(f"--replicates must be >= 1, got {replicates}")
        if workers < 1:
            raise InvalidArgumentError(f"--workers must be >= 1, got {workers}")

        sim_config = self._load_sim_config(ctx, kwargs.get("config"), kwargs.get("seed"))
        out_path = ctx.resolve(out_arg)
        seeds = [sim_config.seed + i for i in range(replicates)]

        logs = run_replicates(sim_config, seeds, workers=workers)
        rows = []
        for seed, log in zip(seeds, logs, strict=True):
            path = out_path if replicates == 1 else replicate_path(out_path, seed)
            write_log(path, log)
            rows.append((seed, summarize(log), str(path), file_digest(path)))

        effective = {
            "command": self.name,
            "out": str(out_path),
            "replicates": replicates,
            "workers": workers,
            "simulation": sim_config.model_dump(mode="json"),
        }
        info("Simulation written", out=str(out_path), replicates=replicates)
        return CommandResult.ok(
            simulation_report(rows, effective),
            summaries=[row[1] for row in rows],
            effective=effective,
        )

    def _load_sim_config(
        self, ctx: CommandContext, config_arg: Any, seed: int | None
    ) -> SimConfig:
        if config_arg:
            sim_config = load_config(ctx.resolve(config_arg), required=True).simulation
        else:
            sim_config = ctx.config.simulation
        if seed is None:
            return sim_config
        return coerce_sim_config({**sim_config.model_dump(), "seed": seed})
