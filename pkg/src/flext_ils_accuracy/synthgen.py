"""Synthetic experiments and planted-structure datasets with known ground truth.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from pathlib import Path

import numpy as np

from flext_ils_accuracy import c, m, p, r, t, u
from flext_ils_accuracy.dtree import FlextIlsAccuracyDecisionTree
from flext_ils_accuracy.errors import (
    FlextIlsAccuracyError,
    InfeasibleRangeError,
    InvalidPlanError,
)
from flext_ils_accuracy.presets import FlextIlsAccuracyPresets
from flext_ils_accuracy.writer import FlextIlsAccuracyReportWriter

logger = u.fetch_logger(__name__)


class FlextIlsAccuracySynthGen:
    """Noise-controlled trajectories along a rectilinear path."""

    @staticmethod
    def default_path() -> tuple[t.IlsAccuracy.Point2D, ...]:
        """Double-rectangle course, 21 m long."""
        return c.IlsAccuracy.DEFAULT_PATH

    @staticmethod
    def rng(seed: int, *keys: int) -> np.random.Generator:
        """Generator derived from the run seed and per-item keys."""
        return np.random.default_rng(np.random.SeedSequence([seed, *keys]))

    @staticmethod
    def sample_path(
        path: Sequence[t.IlsAccuracy.Point2D], speed: float, rate: float
    ) -> tuple[t.IlsAccuracy.FloatArray, t.IlsAccuracy.FloatArray, t.IlsAccuracy.FloatArray]:
        """Times, (n, 3) positions and (n, 4) heading quaternions at constant speed."""
        if speed <= 0.0 or rate <= 0.0:
            msg = f"speed and rate must be positive, got {speed} m/s and {rate} Hz"
            raise InvalidPlanError(msg)
        waypoints = np.asarray(path, dtype=np.float64).reshape(-1, 2)
        if waypoints.shape[0] < c.IlsAccuracy.MIN_INTERPOLATION_POSES:
            msg = f"path needs at least two waypoints, got {waypoints.shape[0]}"
            raise InvalidPlanError(msg)
        keep = np.concatenate(([True], np.any(np.diff(waypoints, axis=0) != 0.0, axis=1)))
        waypoints = waypoints[keep]
        segments = np.diff(waypoints, axis=0)
        lengths = np.hypot(segments[:, 0], segments[:, 1])
        if lengths.size == 0:
            msg = "path has zero length"
            raise InvalidPlanError(msg)
        cumulative = np.concatenate(([0.0], np.cumsum(lengths)))
        total = float(cumulative[-1])
        count = math.floor(total / speed * rate) + 1
        times = np.arange(count, dtype=np.float64) / rate
        distance = np.minimum(times * speed, total)
        positions = np.column_stack([
            np.interp(distance, cumulative, waypoints[:, 0]),
            np.interp(distance, cumulative, waypoints[:, 1]),
            np.zeros(count),
        ])
        segment = np.clip(
            np.searchsorted(cumulative, distance, side="right") - 1, 0, lengths.size - 1
        )
        yaw = np.arctan2(segments[segment, 1], segments[segment, 0])
        quaternions = np.column_stack([
            np.cos(yaw / 2.0),
            np.zeros(count),
            np.zeros(count),
            np.sin(yaw / 2.0),
        ])
        return times, positions, quaternions

    @staticmethod
    def add_noise(
        reference: t.IlsAccuracy.FloatArray,
        noise: m.IlsAccuracy.NoiseSpec,
        rng: np.random.Generator,
    ) -> t.IlsAccuracy.FloatArray:
        """Estimate positions: reference plus bias plus Gaussian or outlier offsets."""
        count = reference.shape[0]
        gaussian = rng.normal(0.0, noise.sigma_xy, size=(count, 2))
        outlier = rng.random(count) < noise.outlier_rate
        radius = noise.outlier_scale * np.sqrt(rng.random(count))
        angle = rng.uniform(0.0, 2.0 * math.pi, size=count)
        disc = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
        offsets = np.where(outlier[:, np.newaxis], disc, gaussian) + np.asarray(noise.bias)
        estimate = reference.copy()
        estimate[:, :2] += offsets
        return estimate

    @staticmethod
    def generate_experiment(
        planted: m.IlsAccuracy.PlantedScenario,
        path: Sequence[t.IlsAccuracy.Point2D] | None = None,
        speed: float = c.IlsAccuracy.DEFAULT_SPEED_MPS,
        rate: float = c.IlsAccuracy.DEFAULT_RATE_HZ,
        seed: int = c.IlsAccuracy.DEFAULT_SEED,
        *,
        evaluation_poses: int = c.IlsAccuracy.DEFAULT_EVALUATION_POSES,
        scenario_index: int = 0,
        repetition: int = 1,
    ) -> p.Result[m.IlsAccuracy.ExperimentRecord]:
        """One repetition of a planted scenario.

        Evaluation times are spread evenly over the traversal and coincide
        with sample times.
        """
        synth = FlextIlsAccuracySynthGen
        try:
            times, reference, quaternions = synth.sample_path(
                path or synth.default_path(), speed, rate
            )
            if evaluation_poses < 1:
                msg = f"evaluation_poses must be positive, got {evaluation_poses}"
                raise InvalidPlanError(msg)
            if times.size < evaluation_poses:
                msg = (
                    f"{evaluation_poses} evaluation poses requested but the path "
                    f"yields only {times.size} samples"
                )
                raise InvalidPlanError(msg)
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.ExperimentRecord].fail(str(exc))
        rng = synth.rng(seed, scenario_index, repetition)
        estimate = synth.add_noise(reference, planted.noise, rng)
        picks = np.unique(
            np.round(np.linspace(0, times.size - 1, evaluation_poses)).astype(np.int64)
        )
        scenario_id = planted.scenario.id
        tag = f"{scenario_id}_r{repetition}"
        return r[m.IlsAccuracy.ExperimentRecord].ok(
            m.IlsAccuracy.ExperimentRecord(
                scenario_id=scenario_id,
                repetition_index=repetition,
                estimate=m.IlsAccuracy.Trajectory.from_arrays(
                    f"{tag}_estimate", times, estimate, quaternions
                ),
                reference=m.IlsAccuracy.Trajectory.from_arrays(
                    f"{tag}_reference", times, reference, quaternions
                ),
                evaluation_times=tuple(float(value) for value in times[picks]),
            )
        )

    @staticmethod
    def ranges_from_scheme(
        scheme: m.IlsAccuracy.PerformanceClassScheme, cap: float | None = None
    ) -> dict[str, t.IlsAccuracy.ValueRange]:
        """Value range per class; the open-ended last class is closed at ``cap``."""
        ranges: dict[str, t.IlsAccuracy.ValueRange] = {}
        for item in scheme.classes:
            if item.upper is not None:
                ranges[item.label] = (item.lower, item.upper)
                continue
            upper = cap
            if upper is None:
                upper = (
                    item.lower * c.IlsAccuracy.OPEN_CLASS_CAP_FACTOR
                    if item.lower > 0.0
                    else c.IlsAccuracy.DEFAULT_OPEN_CLASS_CAP_M
                )
            ranges[item.label] = (item.lower, upper)
        return ranges

    @staticmethod
    def plant_labeled_dataset(
        tree: m.IlsAccuracy.DecisionTree,
        schema: m.IlsAccuracy.FactorSchema,
        class_value_ranges: Mapping[str, t.IlsAccuracy.ValueRange],
        seed: int = c.IlsAccuracy.DEFAULT_SEED,
        *,
        outlier_rate: float = 0.0,
        outlier_scale: float = 0.0,
    ) -> p.Result[tuple[m.IlsAccuracy.PlantedScenario, ...]]:
        """Label the full factorial by the tree and give each scenario a target h95.

        The target sits in the middle band of its class range; the noise is the
        isotropic Gaussian whose expected h95 equals the target.
        """
        result_type = tuple[m.IlsAccuracy.PlantedScenario, ...]

        def _run_plant() -> p.Result[tuple[m.IlsAccuracy.PlantedScenario, ...]]:
            for label, (lower, upper) in class_value_ranges.items():
                if lower < 0.0 or not lower < upper:
                    msg = f"class {label} range [{lower}, {upper}) is empty or negative"
                    raise InfeasibleRangeError(msg)
            scenarios = u.IlsAccuracy.Scenarios.full_factorial(schema)
            if not scenarios.success:
                return r[result_type].fail(scenarios.error or "")
            band_low, band_high = c.IlsAccuracy.TARGET_BAND
            planted: list[m.IlsAccuracy.PlantedScenario] = []
            for index, scenario in enumerate(scenarios.value, start=1):
                prediction = FlextIlsAccuracyDecisionTree.predict(tree, scenario.assignment)
                if not prediction.success:
                    msg = f"scenario {scenario.id}: {prediction.error}"
                    raise InvalidPlanError(msg)
                label = prediction.value.label
                if label not in class_value_ranges:
                    msg = f"no value range for class {label} (scenario {scenario.id})"
                    raise InfeasibleRangeError(msg)
                lower, upper = class_value_ranges[label]
                fraction = FlextIlsAccuracySynthGen.rng(seed, index, 0).uniform(
                    band_low, band_high
                )
                target = lower + (upper - lower) * float(fraction)
                noise = m.IlsAccuracy.NoiseSpec.for_h95(target).model_copy(
                    update={"outlier_rate": outlier_rate, "outlier_scale": outlier_scale}
                )
                planted.append(
                    m.IlsAccuracy.PlantedScenario(
                        scenario=scenario, label=label, target_h95=target, noise=noise
                    )
                )
            return r[result_type].ok(tuple(planted))

        try:
            return _run_plant()
        except FlextIlsAccuracyError as exc:
            return r[result_type].fail(str(exc))

    @staticmethod
    def labeled_records(
        planted: Sequence[m.IlsAccuracy.PlantedScenario],
    ) -> tuple[m.IlsAccuracy.LabeledRecord, ...]:
        """Planted scenarios as training records."""
        return tuple(
            m.IlsAccuracy.LabeledRecord(
                scenario_id=item.scenario.id,
                features=item.scenario.assignment,
                label=item.label,
            )
            for item in planted
        )

    @staticmethod
    def _write_trajectory(path: Path, trajectory: m.IlsAccuracy.Trajectory) -> p.Result[bool]:
        positions = trajectory.positions()
        columns: dict[str, t.IlsAccuracy.FloatArray] = {
            "t": trajectory.times(),
            "x": positions[:, 0],
            "y": positions[:, 1],
            "z": positions[:, 2],
        }
        quaternions = trajectory.quaternions()
        if quaternions is not None:
            for index, name in enumerate(c.IlsAccuracy.QUATERNION_COLUMNS):
                columns[name] = quaternions[:, index]
        return FlextIlsAccuracyReportWriter.write_columns(path, columns)

    @staticmethod
    def materialize_dataset(
        planted: Sequence[m.IlsAccuracy.PlantedScenario],
        plan: m.IlsAccuracy.SimulationPlan,
        output_dir: Path | str,
        seed: int = c.IlsAccuracy.DEFAULT_SEED,
        *,
        tree: m.IlsAccuracy.DecisionTree | None = None,
        class_value_ranges: Mapping[str, t.IlsAccuracy.ValueRange] | None = None,
        schema: m.IlsAccuracy.FactorSchema | None = None,
        path: Sequence[t.IlsAccuracy.Point2D] | None = None,
    ) -> p.Result[Path]:
        """Write trajectories, ``manifest.json`` and ``planted.json``; return the manifest path."""
        synth = FlextIlsAccuracySynthGen
        root = Path(output_dir)
        trajectory_dir = root / c.IlsAccuracy.TRAJECTORY_DIR
        factor_schema = schema or plan.factor_schema or (tree.factor_schema if tree else None)
        if factor_schema is None:
            return r[Path].fail(str(InvalidPlanError("no factor schema to write")))
        scenarios: list[m.IlsAccuracy.ManifestScenario] = []
        for index, item in enumerate(planted, start=1):
            experiments: list[m.IlsAccuracy.ManifestExperiment] = []
            for repetition in range(1, plan.repetitions + 1):
                record = synth.generate_experiment(
                    item,
                    path,
                    plan.speed,
                    plan.rate,
                    seed,
                    evaluation_poses=plan.evaluation_poses,
                    scenario_index=index,
                    repetition=repetition,
                )
                if not record.success:
                    return r[Path].fail(record.error or "")
                tag = f"{item.scenario.id}_r{repetition}"
                for suffix, trajectory in (
                    ("estimate", record.value.estimate),
                    ("reference", record.value.reference),
                ):
                    written = synth._write_trajectory(
                        trajectory_dir / f"{tag}_{suffix}.csv", trajectory
                    )
                    if not written.success:
                        return r[Path].fail(written.error or "")
                experiments.append(
                    m.IlsAccuracy.ManifestExperiment(
                        estimate=f"{c.IlsAccuracy.TRAJECTORY_DIR}/{tag}_estimate.csv",
                        reference=f"{c.IlsAccuracy.TRAJECTORY_DIR}/{tag}_reference.csv",
                        evaluation_times=record.value.evaluation_times,
                        repetition=repetition,
                    )
                )
            scenarios.append(
                m.IlsAccuracy.ManifestScenario(
                    id=item.scenario.id,
                    assignment=item.scenario.assignment,
                    experiments=tuple(experiments),
                )
            )
        manifest = m.IlsAccuracy.ScenarioManifest(
            factor_schema=factor_schema,
            performance_classes=plan.performance_classes,
            repetitions=plan.repetitions,
            scenarios=tuple(scenarios),
        )
        manifest_path = root / c.IlsAccuracy.SIMULATED_MANIFEST
        written = FlextIlsAccuracyReportWriter.write_model(manifest_path, manifest, by_alias=True)
        if not written.success:
            return r[Path].fail(written.error or "")
        if tree is not None:
            truth = m.IlsAccuracy.PlantedDataset(
                seed=seed,
                preset=plan.preset if plan.tree is None else None,
                tree=tree,
                class_value_ranges=dict(class_value_ranges or {}),
                scenarios=tuple(planted),
            )
            written = FlextIlsAccuracyReportWriter.write_model(
                root / c.IlsAccuracy.PLANTED_REPORT, truth
            )
            if not written.success:
                return r[Path].fail(written.error or "")
        logger.info(
            "Synthetic dataset written",
            output_dir=str(root),
            scenarios=len(scenarios),
            experiments=len(scenarios) * plan.repetitions,
        )
        return r[Path].ok(manifest_path)

    @staticmethod
    def simulate(
        plan: m.IlsAccuracy.SimulationPlan,
        output_dir: Path | str,
        seed: int = c.IlsAccuracy.DEFAULT_SEED,
    ) -> p.Result[Path]:
        """Plant the plan's tree (or its preset) and write the dataset."""
        presets = FlextIlsAccuracyPresets
        tree = plan.tree or presets.tree(plan.preset)
        schema = plan.factor_schema or tree.factor_schema
        classes = plan.performance_classes or presets.scheme(plan.preset)
        ranges = plan.class_value_ranges or FlextIlsAccuracySynthGen.ranges_from_scheme(classes)
        planted = FlextIlsAccuracySynthGen.plant_labeled_dataset(
            tree,
            schema,
            ranges,
            seed,
            outlier_rate=plan.outlier_rate,
            outlier_scale=plan.outlier_scale,
        )
        if not planted.success:
            return r[Path].fail(planted.error or "")
        return FlextIlsAccuracySynthGen.materialize_dataset(
            planted.value,
            plan.model_copy(update={"performance_classes": classes}),
            output_dir,
            seed,
            tree=tree,
            class_value_ranges=ranges,
            schema=schema,
        )


__all__: list[str] = ["FlextIlsAccuracySynthGen"]
