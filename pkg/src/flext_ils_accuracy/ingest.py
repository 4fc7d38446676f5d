"""Trajectory, point cloud and manifest ingestion with time synchronisation.

Copyright (c) 2025 Flext. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import ValidationError
from scipy.spatial.transform import Rotation, Slerp

from flext_ils_accuracy import c, m, p, r, t, u
from flext_ils_accuracy.errors import (
    EmptyEvaluationSetError,
    EmptyFileError,
    FlextIlsAccuracyError,
    GapTooLargeError,
    MalformedRowError,
    MissingInputFileError,
    NonMonotoneTimestampError,
    OutOfRangeError,
    SchemaError,
    TooFewPosesError,
)

logger = u.fetch_logger(__name__)

# First data row sits on line 2, after the header.
_FIRST_DATA_LINE = 2


class FlextIlsAccuracyIngest:
    """Readers for trajectory CSVs, point clouds and scenario manifests."""

    @staticmethod
    def _read_frame(path: Path) -> pd.DataFrame:
        """Headed CSV as strings with stripped column names."""
        if not path.is_file():
            msg = f"input file not found: {path}"
            raise MissingInputFileError(msg, {"path": str(path)})
        try:
            frame = pd.read_csv(
                path,
                dtype=str,
                keep_default_na=False,
                skipinitialspace=True,
                encoding=c.IlsAccuracy.ENCODING,
            )
        except pd.errors.EmptyDataError as exc:
            msg = f"{path} is empty"
            raise EmptyFileError(msg, {"path": str(path)}) from exc
        except pd.errors.ParserError as exc:
            msg = f"{path}: {exc}"
            raise MalformedRowError(msg, {"path": str(path)}) from exc
        except (OSError, UnicodeDecodeError) as exc:
            msg = f"{path}: unreadable ({exc})"
            raise MalformedRowError(msg, {"path": str(path)}) from exc
        frame.columns = [str(name).strip() for name in frame.columns]
        return frame

    @staticmethod
    def _read_columns(
        path: Path, required: Sequence[str], optional: Sequence[str] = ()
    ) -> dict[str, t.IlsAccuracy.FloatArray]:
        """Finite float columns of a headed CSV, with line-numbered failures."""
        frame = FlextIlsAccuracyIngest._read_frame(path)
        missing = [name for name in required if name not in frame.columns]
        if missing:
            msg = f"{path}:1: header lacks column(s) {', '.join(missing)}"
            raise MalformedRowError(msg, {"path": str(path), "line": "1"})
        present_optional = [name for name in optional if name in frame.columns]
        if present_optional and len(present_optional) != len(optional):
            msg = f"{path}:1: header must hold all or none of {', '.join(optional)}"
            raise MalformedRowError(msg, {"path": str(path), "line": "1"})
        if frame.empty:
            msg = f"{path} has a header but no rows"
            raise EmptyFileError(msg, {"path": str(path)})
        columns: dict[str, t.IlsAccuracy.FloatArray] = {}
        for name in (*required, *present_optional):
            raw = frame[name]
            numeric = pd.to_numeric(raw, errors="coerce").to_numpy(dtype=np.float64)
            bad = np.flatnonzero(~np.isfinite(numeric))
            if bad.size:
                row = int(bad[0])
                line = row + _FIRST_DATA_LINE
                msg = (
                    f"{path}:{line}: column {name} value {raw.iloc[row]!r} "
                    f"is not a finite number"
                )
                raise MalformedRowError(msg, {"path": str(path), "line": str(line)})
            columns[name] = numeric
        return columns

    @staticmethod
    def read_trajectory(
        path: Path | str, source_id: str | None = None
    ) -> m.IlsAccuracy.Trajectory:
        """Raising variant of ``parse_trajectory_csv``."""
        csv_path = Path(path)
        columns = FlextIlsAccuracyIngest._read_columns(
            csv_path, c.IlsAccuracy.TRAJECTORY_COLUMNS, c.IlsAccuracy.QUATERNION_COLUMNS
        )
        times = columns["t"]
        steps = np.flatnonzero(np.diff(times) <= 0.0)
        if steps.size:
            row = int(steps[0]) + 1
            line = row + _FIRST_DATA_LINE
            msg = (
                f"{csv_path}:{line}: timestamp {times[row]!r} does not increase "
                f"after {times[row - 1]!r}"
            )
            raise NonMonotoneTimestampError(
                msg, {"path": str(csv_path), "line": str(line)}
            )
        positions = np.column_stack([columns["x"], columns["y"], columns["z"]])
        quaternions = None
        if "qw" in columns:
            quaternions = np.column_stack([
                columns[name] for name in c.IlsAccuracy.QUATERNION_COLUMNS
            ])
            norms = np.linalg.norm(quaternions, axis=1)
            zero = np.flatnonzero(norms == 0.0)
            if zero.size:
                line = int(zero[0]) + _FIRST_DATA_LINE
                msg = f"{csv_path}:{line}: orientation quaternion has zero norm"
                raise MalformedRowError(msg, {"path": str(csv_path), "line": str(line)})
            quaternions /= norms[:, np.newaxis]
        trajectory = m.IlsAccuracy.Trajectory.from_arrays(
            source_id or csv_path.stem, times, positions, quaternions
        )
        logger.debug(
            "Parsed trajectory", path=str(csv_path), poses=len(trajectory.poses)
        )
        return trajectory

    @staticmethod
    def parse_trajectory_csv(
        path: Path | str, source_id: str | None = None
    ) -> p.Result[m.IlsAccuracy.Trajectory]:
        """Parse a ``t,x,y,z[,qw,qx,qy,qz]`` CSV into a trajectory."""
        try:
            return r[m.IlsAccuracy.Trajectory].ok(
                FlextIlsAccuracyIngest.read_trajectory(path, source_id)
            )
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.Trajectory].fail(str(exc))

    @staticmethod
    def parse_point_cloud_csv(path: Path | str) -> p.Result[m.IlsAccuracy.PointCloud2D]:
        """Parse an ``x,y`` CSV into a planar point cloud."""
        try:
            columns = FlextIlsAccuracyIngest._read_columns(
                Path(path), c.IlsAccuracy.POINT_CLOUD_COLUMNS
            )
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.PointCloud2D].fail(str(exc))
        points = tuple(
            (float(x), float(y)) for x, y in zip(columns["x"], columns["y"], strict=True)
        )
        return r[m.IlsAccuracy.PointCloud2D].ok(m.IlsAccuracy.PointCloud2D(points=points))

    @staticmethod
    def _report_rows(path: Path, columns: Sequence[str]) -> list[dict[str, str]]:
        frame = FlextIlsAccuracyIngest._read_frame(path)
        missing = [name for name in columns if name not in frame.columns]
        if missing:
            msg = f"{path}:1: header lacks column(s) {', '.join(missing)}"
            raise MalformedRowError(msg, {"path": str(path), "line": "1"})
        if frame.empty:
            msg = f"{path} has a header but no rows"
            raise EmptyFileError(msg, {"path": str(path)})
        return [
            {name: str(row[name]).strip() for name in columns}
            for row in frame.to_dict(orient="records")
        ]

    @staticmethod
    def read_scenario_report(
        path: Path | str,
    ) -> p.Result[tuple[m.IlsAccuracy.ScenarioMetrics, ...]]:
        """Scenario aggregates written by the evaluate stage."""
        report_path = Path(path)
        result_type = tuple[m.IlsAccuracy.ScenarioMetrics, ...]
        try:
            rows = FlextIlsAccuracyIngest._report_rows(
                report_path, c.IlsAccuracy.SCENARIO_REPORT_COLUMNS
            )
            scenarios: list[m.IlsAccuracy.ScenarioMetrics] = []
            for index, row in enumerate(rows):
                line = index + _FIRST_DATA_LINE
                try:
                    values = tuple(
                        float(value)
                        for value in row["per_repetition"].split(
                            c.IlsAccuracy.PER_REPETITION_SEPARATOR
                        )
                    )
                    scenarios.append(
                        m.IlsAccuracy.ScenarioMetrics(
                            scenario_id=row["scenario_id"],
                            per_repetition_h95=values,
                            mean_h95=float(row["mean_h95"]),
                            percentile=float(row["percentile"]),
                            repeatability=float(row["repeatability"])
                            if row["repeatability"]
                            else None,
                        )
                    )
                except ValueError as exc:
                    msg = f"{report_path}:{line}: {exc}"
                    raise MalformedRowError(
                        msg, {"path": str(report_path), "line": str(line)}
                    ) from exc
        except FlextIlsAccuracyError as exc:
            return r[result_type].fail(str(exc))
        return r[result_type].ok(tuple(scenarios))

    @staticmethod
    def read_category_report(
        path: Path | str,
    ) -> p.Result[tuple[m.IlsAccuracy.CategoryAssignment, ...]]:
        """Class labels written by the categorize stage."""
        report_path = Path(path)
        result_type = tuple[m.IlsAccuracy.CategoryAssignment, ...]
        try:
            rows = FlextIlsAccuracyIngest._report_rows(
                report_path, c.IlsAccuracy.CATEGORY_REPORT_COLUMNS
            )
            assignments: list[m.IlsAccuracy.CategoryAssignment] = []
            for index, row in enumerate(rows):
                try:
                    assignments.append(
                        m.IlsAccuracy.CategoryAssignment.model_validate(row)
                    )
                except ValidationError as exc:
                    line = index + _FIRST_DATA_LINE
                    problems = "; ".join(
                        f"{u.IlsAccuracy.Errors.location(error['loc'])}: {error['msg']}"
                        for error in exc.errors()
                    )
                    msg = f"{report_path}:{line}: {problems}"
                    raise MalformedRowError(
                        msg, {"path": str(report_path), "line": str(line)}
                    ) from exc
        except FlextIlsAccuracyError as exc:
            return r[result_type].fail(str(exc))
        return r[result_type].ok(tuple(assignments))

    @staticmethod
    def parse_scenario_manifest(path: Path | str) -> p.Result[m.IlsAccuracy.LoadedManifest]:
        """Load a JSON manifest and validate every scenario against its schema."""
        manifest_path = Path(path)

        def _run_parse_scenario_manifest() -> p.Result[m.IlsAccuracy.LoadedManifest]:
            if not manifest_path.is_file():
                msg = f"manifest not found: {manifest_path}"
                raise SchemaError(msg, {"path": str(manifest_path)})
            text = manifest_path.read_text(encoding=c.IlsAccuracy.ENCODING)
            try:
                manifest = m.IlsAccuracy.ScenarioManifest.model_validate_json(text)
            except ValidationError as exc:
                problems = "; ".join(
                    f"{u.IlsAccuracy.Errors.location(error['loc'])}: {error['msg']}"
                    for error in exc.errors()
                )
                msg = f"{manifest_path}: {problems}"
                raise SchemaError(msg, {"path": str(manifest_path)}) from exc
            scenarios = tuple(
                m.IlsAccuracy.Scenario(id=item.id, assignment=item.assignment)
                for item in manifest.scenarios
            )
            validated = u.IlsAccuracy.Scenarios.validate_manifest(
                manifest.factor_schema, scenarios
            )
            if not validated.success:
                return r[m.IlsAccuracy.LoadedManifest].fail(validated.error or "")
            if manifest.alignment is not None and manifest.alignment.calibration_scenario not in {
                item.id for item in scenarios
            }:
                msg = (
                    f"alignment.calibration_scenario: unknown scenario "
                    f"{manifest.alignment.calibration_scenario}"
                )
                raise SchemaError(msg, {"path": str(manifest_path)})
            logger.info(
                "Manifest parsed",
                path=str(manifest_path),
                scenarios=len(scenarios),
                factors=len(manifest.factor_schema.factors),
            )
            return r[m.IlsAccuracy.LoadedManifest].ok(
                m.IlsAccuracy.LoadedManifest(
                    manifest=manifest,
                    base_dir=manifest_path.resolve().parent,
                    scenarios=scenarios,
                )
            )

        try:
            return _run_parse_scenario_manifest()
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.LoadedManifest].fail(str(exc))
        except (OSError, UnicodeDecodeError) as exc:
            return r[m.IlsAccuracy.LoadedManifest].fail(
                str(SchemaError(f"{manifest_path}: unreadable ({exc})"))
            )

    @staticmethod
    def iter_experiments(
        loaded: m.IlsAccuracy.LoadedManifest,
    ) -> Iterator[tuple[str, int, m.IlsAccuracy.ManifestExperiment]]:
        """(scenario id, repetition, experiment) in manifest order."""
        for scenario in loaded.manifest.scenarios:
            for position, experiment in enumerate(scenario.experiments, start=1):
                yield scenario.id, experiment.repetition or position, experiment

    @staticmethod
    def load_experiment(
        loaded: m.IlsAccuracy.LoadedManifest,
        scenario_id: str,
        repetition: int,
        experiment: m.IlsAccuracy.ManifestExperiment,
    ) -> p.Result[m.IlsAccuracy.ExperimentRecord]:
        """Read both trajectories and the evaluation times of one experiment."""

        def _run_load_experiment() -> m.IlsAccuracy.ExperimentRecord:
            estimate = FlextIlsAccuracyIngest.read_trajectory(
                loaded.resolve(experiment.estimate)
            )
            if experiment.time_offset:
                estimate = m.IlsAccuracy.Trajectory.from_arrays(
                    estimate.source_id,
                    estimate.times() + experiment.time_offset,
                    estimate.positions(),
                    estimate.quaternions(),
                )
            reference = FlextIlsAccuracyIngest.read_trajectory(
                loaded.resolve(experiment.reference)
            )
            if isinstance(experiment.evaluation_times, str):
                columns = FlextIlsAccuracyIngest._read_columns(
                    loaded.resolve(experiment.evaluation_times), ("t",)
                )
                evaluation_times = tuple(float(value) for value in columns["t"])
            else:
                evaluation_times = experiment.evaluation_times
            return m.IlsAccuracy.ExperimentRecord(
                scenario_id=scenario_id,
                repetition_index=repetition,
                estimate=estimate,
                reference=reference,
                evaluation_times=tuple(sorted(evaluation_times)),
            )

        try:
            return r[m.IlsAccuracy.ExperimentRecord].ok(_run_load_experiment())
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.ExperimentRecord].fail(
                f"{exc} (scenario {scenario_id}, repetition {repetition})"
            )

    @staticmethod
    def interpolate_many(
        trajectory: m.IlsAccuracy.Trajectory,
        query: t.IlsAccuracy.FloatArray,
        max_gap: float,
    ) -> tuple[t.IlsAccuracy.FloatArray, t.IlsAccuracy.FloatArray | None]:
        """Positions (k, 3) and orientations (k, 4) at the query times.

        Linear in position, spherical-linear in orientation; exact at sample
        times. Raises on the first query outside the span or inside a gap.
        """
        times = trajectory.times()
        if times.size < c.IlsAccuracy.MIN_INTERPOLATION_POSES:
            msg = f"trajectory {trajectory.source_id} needs at least two poses"
            raise TooFewPosesError(msg)
        outside = np.flatnonzero((query < times[0]) | (query > times[-1]))
        if outside.size:
            index = int(outside[0])
            msg = (
                f"evaluation index {index}: t={query[index]!r} outside "
                f"[{times[0]!r}, {times[-1]!r}] of {trajectory.source_id}"
            )
            raise OutOfRangeError(msg, {"index": str(index)})
        lower = np.clip(
            np.searchsorted(times, query, side="right") - 1, 0, times.size - 2
        )
        upper = lower + 1
        exact_lower = query == times[lower]
        exact_upper = query == times[upper]
        exact = exact_lower | exact_upper
        intervals = times[upper] - times[lower]
        wide = np.flatnonzero(~exact & (intervals > max_gap))
        if wide.size:
            index = int(wide[0])
            msg = (
                f"evaluation index {index}: t={query[index]!r} falls in a "
                f"{intervals[index]!r} s gap of {trajectory.source_id} "
                f"(max {max_gap!r} s)"
            )
            raise GapTooLargeError(
                msg, {"index": str(index), "interval": repr(float(intervals[index]))}
            )
        fraction = (query - times[lower]) / intervals
        positions = trajectory.positions()
        interpolated = positions[lower] + fraction[:, np.newaxis] * (
            positions[upper] - positions[lower]
        )
        interpolated[exact_lower] = positions[lower[exact_lower]]
        interpolated[exact_upper] = positions[upper[exact_upper]]
        quaternions = trajectory.quaternions()
        if quaternions is None:
            return interpolated, None
        slerp = Slerp(times, Rotation.from_quat(quaternions[:, [1, 2, 3, 0]]))
        orientations = slerp(query).as_quat()[:, [3, 0, 1, 2]]
        orientations /= np.linalg.norm(orientations, axis=1)[:, np.newaxis]
        orientations[exact_lower] = quaternions[lower[exact_lower]]
        orientations[exact_upper] = quaternions[upper[exact_upper]]
        return interpolated, orientations

    @staticmethod
    def interpolate_at(
        trajectory: m.IlsAccuracy.Trajectory, at: float, max_gap: float
    ) -> p.Result[m.IlsAccuracy.Pose]:
        """Pose of the trajectory at one time."""
        try:
            positions, orientations = FlextIlsAccuracyIngest.interpolate_many(
                trajectory, np.array([at], dtype=np.float64), max_gap
            )
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.Pose].fail(str(exc))
        orientation = (
            None
            if orientations is None
            else (
                float(orientations[0, 0]),
                float(orientations[0, 1]),
                float(orientations[0, 2]),
                float(orientations[0, 3]),
            )
        )
        return r[m.IlsAccuracy.Pose].ok(
            m.IlsAccuracy.Pose(
                t=float(at),
                x=float(positions[0, 0]),
                y=float(positions[0, 1]),
                z=float(positions[0, 2]),
                orientation=orientation,
            )
        )

    @staticmethod
    def sync_pairs(
        record: m.IlsAccuracy.ExperimentRecord, max_gap: float
    ) -> p.Result[tuple[m.IlsAccuracy.SyncedSamplePair, ...]]:
        """Interpolate estimate and reference at every evaluation time."""
        try:
            if not record.evaluation_times:
                msg = (
                    f"scenario {record.scenario_id} repetition "
                    f"{record.repetition_index} has no evaluation times"
                )
                raise EmptyEvaluationSetError(msg)
            query = np.array(record.evaluation_times, dtype=np.float64)
            estimate, _ = FlextIlsAccuracyIngest.interpolate_many(
                record.estimate, query, max_gap
            )
            reference, _ = FlextIlsAccuracyIngest.interpolate_many(
                record.reference, query, max_gap
            )
        except FlextIlsAccuracyError as exc:
            return r[tuple[m.IlsAccuracy.SyncedSamplePair, ...]].fail(str(exc))
        pairs = tuple(
            m.IlsAccuracy.SyncedSamplePair(
                t=float(query[i]),
                estimate_xy=(float(estimate[i, 0]), float(estimate[i, 1])),
                reference_xy=(float(reference[i, 0]), float(reference[i, 1])),
                estimate_z=float(estimate[i, 2]),
                reference_z=float(reference[i, 2]),
            )
            for i in range(query.size)
        )
        return r[tuple[m.IlsAccuracy.SyncedSamplePair, ...]].ok(pairs)


__all__: list[str] = ["FlextIlsAccuracyIngest"]
