"""CLI entry point for FlextIlsAccuracy.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import sys
from abc import ABC, abstractmethod
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError
from pydantic_settings import (
    BaseSettings,
    CliApp,
    CliPositionalArg,
    CliSubCommand,
    SettingsConfigDict,
    SettingsError,
    get_subcommand,
)

from flext_ils_accuracy import c, m, p, settings, t, u
from flext_ils_accuracy.api import FlextIlsAccuracyService

logger = u.fetch_logger(__name__)


class _StageCommand(BaseModel, ABC):
    """Options shared by every stage."""

    output_dir: Path = Field(
        default_factory=lambda: Path(settings.IlsAccuracy.output_dir),
        description="Directory receiving every report",
    )

    def run_config(self) -> m.IlsAccuracy.RunConfig:
        """Validated run configuration from the options this command declares."""
        declared = type(self).model_fields
        return m.IlsAccuracy.RunConfig.model_validate({
            name: getattr(self, name)
            for name in m.IlsAccuracy.RunConfig.model_fields
            if name in declared
        })

    @abstractmethod
    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Run the stage on the bound service."""


class _EvaluateCommand(_StageCommand):
    """Per-experiment and per-scenario accuracy reports."""

    manifest: CliPositionalArg[Path] = Field(description="Scenario manifest JSON")
    percentile: float = Field(
        default_factory=lambda: settings.IlsAccuracy.percentile,
        description="Quantile of the horizontal error driving categorization",
    )
    max_gap: float = Field(
        default_factory=lambda: settings.IlsAccuracy.max_gap,
        description="Largest sample gap (s) bridged by interpolation",
    )

    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Evaluate every experiment of the manifest."""
        return service.evaluate()


class _CategorizeCommand(_StageCommand):
    """Scenario labels under the application and/or technology schemes."""

    manifest: Path | None = Field(
        default=None, description="Manifest holding the application class table"
    )
    scheme: c.IlsAccuracy.SchemeSelection = Field(
        default_factory=lambda: settings.IlsAccuracy.scheme,
        description="Schemes to produce",
    )
    k_max: int = Field(
        default_factory=lambda: settings.IlsAccuracy.k_max,
        description="Largest cluster count examined by the elbow search",
    )
    elbow_method: c.IlsAccuracy.ElbowMethod = Field(
        default_factory=lambda: settings.IlsAccuracy.elbow_method,
        description="Elbow score over the SSE curve",
    )

    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Categorize the evaluated scenarios."""
        return service.categorize()


class _LearnCommand(_StageCommand):
    """Decision trees and relevance reports per scheme."""

    manifest: CliPositionalArg[Path] = Field(description="Scenario manifest JSON")
    scheme: c.IlsAccuracy.SchemeSelection = Field(
        default_factory=lambda: settings.IlsAccuracy.scheme,
        description="Schemes to learn",
    )
    strict: bool = Field(
        default_factory=lambda: settings.IlsAccuracy.strict,
        description="Reject inconsistent labels instead of emitting impure leaves",
    )

    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Learn one tree per categorized scheme."""
        return service.learn()


class _MapQualityCommand(_StageCommand):
    """ICP fitness of one planar map against another."""

    map_a: CliPositionalArg[Path] = Field(description="Source map as an x,y CSV")
    map_b: CliPositionalArg[Path] = Field(description="Target map as an x,y CSV")
    inlier_radius: float = Field(
        default_factory=lambda: settings.IlsAccuracy.inlier_radius,
        description="Inlier radius (m)",
    )
    icp_max_iters: int = Field(
        default_factory=lambda: settings.IlsAccuracy.icp_max_iters,
        description="ICP iteration cap",
    )
    yaw_step_deg: float = Field(
        default_factory=lambda: settings.IlsAccuracy.yaw_step_deg,
        description="Yaw sweep step (deg) of the global registration",
    )

    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Register the two maps."""
        return service.map_quality(self.map_a, self.map_b)


class _SimulateCommand(_StageCommand):
    """Synthetic dataset with a planted decision tree."""

    plan: Path | None = Field(default=None, description="Simulation plan JSON")
    preset: c.IlsAccuracy.SchemeKind = Field(
        default=c.IlsAccuracy.SchemeKind.APPLICATION,
        description="Reference tree planted when no plan is given",
    )
    seed: int = Field(
        default_factory=lambda: settings.IlsAccuracy.seed, description="Run seed"
    )
    repetitions: int | None = Field(default=None, description="Repetitions per scenario")
    evaluation_poses: int | None = Field(
        default=None, description="Evaluation poses per experiment"
    )
    speed: float | None = Field(default=None, description="Platform speed (m/s)")
    rate: float | None = Field(default=None, description="Sample rate (Hz)")

    def overrides(self) -> dict[str, int | float]:
        """Plan fields set on the command line; without a plan file, settings fill the rest."""
        given: dict[str, int | float | None] = {
            "repetitions": self.repetitions,
            "evaluation_poses": self.evaluation_poses,
            "speed": self.speed,
            "rate": self.rate,
        }
        if self.plan is None:
            defaults = settings.IlsAccuracy
            given = {
                name: getattr(defaults, name) if value is None else value
                for name, value in given.items()
            }
        return {name: value for name, value in given.items() if value is not None}

    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Plant and write the dataset."""
        return service.simulate(self.preset, self.overrides())


class _ReportCommand(_EvaluateCommand):
    """Evaluate, categorize and learn in one run."""

    scheme: c.IlsAccuracy.SchemeSelection = Field(
        default_factory=lambda: settings.IlsAccuracy.scheme,
        description="Schemes to produce and learn",
    )
    k_max: int = Field(
        default_factory=lambda: settings.IlsAccuracy.k_max,
        description="Largest cluster count examined by the elbow search",
    )
    elbow_method: c.IlsAccuracy.ElbowMethod = Field(
        default_factory=lambda: settings.IlsAccuracy.elbow_method,
        description="Elbow score over the SSE curve",
    )
    strict: bool = Field(
        default_factory=lambda: settings.IlsAccuracy.strict,
        description="Reject inconsistent labels instead of emitting impure leaves",
    )

    def execute(
        self, service: FlextIlsAccuracyService
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Run the whole pipeline."""
        return service.report()


class _Arguments(BaseSettings):
    """Indoor localization accuracy analytics."""

    model_config = SettingsConfigDict(
        cli_prog_name="ils-accuracy",
        cli_kebab_case=True,
        cli_implicit_flags=True,
        cli_exit_on_error=False,
        env_prefix="FLEXT_ILS_ACCURACY_CLI_",
    )

    evaluate: CliSubCommand[_EvaluateCommand]
    categorize: CliSubCommand[_CategorizeCommand]
    learn: CliSubCommand[_LearnCommand]
    map_quality: CliSubCommand[_MapQualityCommand]
    simulate: CliSubCommand[_SimulateCommand]
    report: CliSubCommand[_ReportCommand]


class FlextIlsAccuracyCli:
    """CLI wrapper bound to the ILS accuracy service facade."""

    @staticmethod
    def render(report: m.IlsAccuracy.StageReport, output_dir: Path) -> str:
        """Stage outcome as printed on stdout."""
        lines = [f"{report.stage}: {len(report.outputs)} file(s) in {output_dir}"]
        lines.extend(
            f"  {key}: {u.IlsAccuracy.Numbers.short(value) if isinstance(value, float) else value}"
            for key, value in report.summary.items()
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def run(cls, args: t.StrSequence | None = None) -> int:
        """Parse the arguments, run one stage and map its outcome to an exit code."""
        cli_args = list(sys.argv[1:] if args is None else args)
        try:
            parsed = CliApp.run(_Arguments, cli_args=cli_args)
            command = get_subcommand(parsed, is_required=True, cli_exit_on_error=False)
            if not isinstance(command, _StageCommand):
                msg = "unknown command"
                raise SettingsError(msg)
            config = command.run_config()
        except (SettingsError, ValidationError) as exc:
            sys.stderr.write(f"usage error: {exc}\n")
            return c.IlsAccuracy.ExitCode.USAGE
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else c.IlsAccuracy.ExitCode.USAGE
        outcome = command.execute(FlextIlsAccuracyService(config))
        if not outcome.success:
            message = outcome.error or ""
            logger.error("Stage failed", command=type(command).__name__, error=message)
            sys.stderr.write(f"error: {message}\n")
            return u.IlsAccuracy.Errors.exit_code_for(message)
        sys.stdout.write(cls.render(outcome.value, config.output_dir))
        return c.IlsAccuracy.ExitCode.OK


def main(args: t.StrSequence | None = None) -> int:
    """Provide CLI entry point."""
    return FlextIlsAccuracyCli.run(args)


__all__: list[str] = ["FlextIlsAccuracyCli", "main"]
