"""Tests for trajectory, point cloud and manifest ingestion.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest

from flext_ils_accuracy import m
from flext_ils_accuracy.ingest import FlextIlsAccuracyIngest
from flext_tests import tm
from tests import u

_HEADER = ("t", "x", "y", "z")


class TestsFlextIlsAccuracyIngest:
    """Trajectory parsing, interpolation, synchronisation and manifests."""

    def test_parse_trajectory(self, tmp_path: Path) -> None:
        path = u.IlsAccuracy.Tests.write_csv(
            tmp_path / "traj.csv", _HEADER, [(0.0, 0.0, 0.0, 0.0), (1.0, 1.0, 2.0, 0.5)]
        )
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
        tm.ok(result)
        tm.that(result.value.source_id, eq="traj")
        tm.that(len(result.value.poses), eq=2)
        tm.that(result.value.poses[1].position, eq=(1.0, 2.0, 0.5))
        assert result.value.quaternions() is None

    def test_parse_trajectory_normalizes_quaternions(self, tmp_path: Path) -> None:
        path = u.IlsAccuracy.Tests.write_csv(
            tmp_path / "q.csv",
            (*_HEADER, "qw", "qx", "qy", "qz"),
            [(0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0), (1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.0)],
        )
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
        tm.ok(result)
        tm.that(result.value.poses[0].orientation, eq=(1.0, 0.0, 0.0, 0.0))
        tm.that(result.value.poses[1].orientation, eq=(0.0, 0.0, 0.0, 1.0))

    def test_non_monotone_timestamp_names_line(self, tmp_path: Path) -> None:
        path = u.IlsAccuracy.Tests.write_csv(
            tmp_path / "bad.csv",
            _HEADER,
            [(0.0, 0.0, 0.0, 0.0), (1.0, 0.0, 0.0, 0.0), (1.0, 0.0, 0.0, 0.0)],
        )
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
        tm.fail(result)
        tm.that(result.error or "", has="NonMonotoneTimestamp")
        tm.that(result.error or "", has="bad.csv:4")

    def test_malformed_value_names_line(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.csv"
        path.write_text("t,x,y,z\n0,0,0,0\n1,abc,0,0\n", encoding="utf-8")
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
        tm.fail(result)
        tm.that(result.error or "", has="MalformedRow")
        tm.that(result.error or "", has="bad.csv:3")

    def test_missing_column(self, tmp_path: Path) -> None:
        path = tmp_path / "cols.csv"
        path.write_text("t,x,y\n0,0,0\n", encoding="utf-8")
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
        tm.fail(result)
        tm.that(result.error or "", has="lacks column(s) z")

    def test_partial_quaternion_header(self, tmp_path: Path) -> None:
        path = tmp_path / "partial.csv"
        path.write_text("t,x,y,z,qw\n0,0,0,0,1\n", encoding="utf-8")
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
        tm.fail(result)
        tm.that(result.error or "", has="MalformedRow")

    def test_empty_file_and_header_only(self, tmp_path: Path) -> None:
        empty = tmp_path / "empty.csv"
        empty.write_text("", encoding="utf-8")
        header_only = tmp_path / "header.csv"
        header_only.write_text("t,x,y,z\n", encoding="utf-8")
        for path in (empty, header_only):
            result = FlextIlsAccuracyIngest.parse_trajectory_csv(path)
            tm.fail(result)
            tm.that(result.error or "", has="EmptyFile")

    def test_missing_file(self, tmp_path: Path) -> None:
        result = FlextIlsAccuracyIngest.parse_trajectory_csv(tmp_path / "absent.csv")
        tm.fail(result)
        tm.that(result.error or "", has="MissingInputFile")
        tm.that(result.error or "", has="absent.csv")

    def test_interpolation_is_exact_at_samples_and_linear_between(self) -> None:
        trajectory = m.IlsAccuracy.Trajectory.from_arrays(
            "line",
            np.array([0.0, 0.1, 0.2]),
            np.array([[0.0, 0.0, 0.0], [1.0, 2.0, 0.0], [3.0, 2.0, 1.0]]),
        )
        exact = FlextIlsAccuracyIngest.interpolate_at(trajectory, 0.1, 0.1)
        tm.ok(exact)
        tm.that(exact.value.position, eq=(1.0, 2.0, 0.0))
        middle = FlextIlsAccuracyIngest.interpolate_at(trajectory, 0.15, 0.1)
        tm.ok(middle)
        assert middle.value.x == pytest.approx(2.0)
        assert middle.value.z == pytest.approx(0.5)

    def test_interpolation_out_of_range_and_gap(self) -> None:
        trajectory = m.IlsAccuracy.Trajectory.from_arrays(
            "gappy",
            np.array([0.0, 0.05, 1.0]),
            np.zeros((3, 3)),
        )
        outside = FlextIlsAccuracyIngest.interpolate_at(trajectory, 1.5, 0.1)
        tm.fail(outside)
        tm.that(outside.error or "", has="OutOfRange")
        gap = FlextIlsAccuracyIngest.interpolate_at(trajectory, 0.5, 0.1)
        tm.fail(gap)
        tm.that(gap.error or "", has="GapTooLarge")
        at_sample = FlextIlsAccuracyIngest.interpolate_at(trajectory, 1.0, 0.1)
        tm.ok(at_sample)

    def test_single_pose_trajectory_cannot_interpolate(self) -> None:
        trajectory = m.IlsAccuracy.Trajectory.from_arrays(
            "single", np.array([0.0]), np.zeros((1, 3))
        )
        result = FlextIlsAccuracyIngest.interpolate_at(trajectory, 0.0, 0.1)
        tm.fail(result)
        tm.that(result.error or "", has="TooFewPoses")

    def test_orientation_is_slerped(self) -> None:
        half = math.sqrt(0.5)
        trajectory = m.IlsAccuracy.Trajectory.from_arrays(
            "turn",
            np.array([0.0, 0.1]),
            np.zeros((2, 3)),
            np.array([[1.0, 0.0, 0.0, 0.0], [half, 0.0, 0.0, half]]),
        )
        result = FlextIlsAccuracyIngest.interpolate_at(trajectory, 0.05, 0.1)
        tm.ok(result)
        orientation = result.value.orientation
        assert orientation is not None
        expected = (math.cos(math.pi / 8), 0.0, 0.0, math.sin(math.pi / 8))
        assert orientation == pytest.approx(expected, abs=1e-12)

    def test_sync_pairs_and_empty_evaluation_set(self) -> None:
        reference = m.IlsAccuracy.Trajectory.from_arrays(
            "ref", np.array([0.0, 0.1]), np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
        )
        estimate = m.IlsAccuracy.Trajectory.from_arrays(
            "est", np.array([0.0, 0.1]), np.array([[0.0, 1.0, 0.0], [1.0, 1.0, 0.0]])
        )
        record = m.IlsAccuracy.ExperimentRecord(
            scenario_id="S1",
            repetition_index=1,
            estimate=estimate,
            reference=reference,
            evaluation_times=(0.0, 0.05),
        )
        pairs = FlextIlsAccuracyIngest.sync_pairs(record, 0.1)
        tm.ok(pairs)
        tm.that(len(pairs.value), eq=2)
        assert pairs.value[1].reference_xy == pytest.approx((0.5, 0.0))
        assert pairs.value[1].estimate_xy == pytest.approx((0.5, 1.0))
        empty = FlextIlsAccuracyIngest.sync_pairs(
            record.model_copy(update={"evaluation_times": ()}), 0.1
        )
        tm.fail(empty)
        tm.that(empty.error or "", has="EmptyEvaluationSet")

    def test_parse_manifest_and_load_experiment(self, tmp_path: Path) -> None:
        manifest = u.IlsAccuracy.Tests.offset_manifest(
            tmp_path, {"a": (0.02, 0.03), "b": (0.3,)}
        )
        loaded = FlextIlsAccuracyIngest.parse_scenario_manifest(manifest)
        tm.ok(loaded)
        tm.that([item.id for item in loaded.value.scenarios], eq=["a", "b"])
        experiments = list(FlextIlsAccuracyIngest.iter_experiments(loaded.value))
        tm.that([(sid, rep) for sid, rep, _ in experiments], eq=[("a", 1), ("a", 2), ("b", 1)])
        scenario_id, repetition, experiment = experiments[0]
        record = FlextIlsAccuracyIngest.load_experiment(
            loaded.value, scenario_id, repetition, experiment
        )
        tm.ok(record)
        tm.that(len(record.value.evaluation_times), eq=11)

    def test_manifest_reports_every_violation(self, tmp_path: Path) -> None:
        document = {
            "schema": {
                "factors": [
                    {"kind": "categorical", "name": "System", "values": ["a", "b"]},
                    {"kind": "continuous", "name": "FoV", "min": 0.0, "max": 360.0},
                ]
            },
            "scenarios": [
                {"id": "S1", "assignment": {"System": "a", "FoV": 400.0}},
                {"id": "S1", "assignment": {"System": "c", "FoV": 90.0, "Extra": "x"}},
                {"id": "S3", "assignment": {"System": "a"}},
            ],
        }
        path = u.IlsAccuracy.Tests.write_manifest(tmp_path / "m.json", document)
        result = FlextIlsAccuracyIngest.parse_scenario_manifest(path)
        tm.fail(result)
        for kind in ("ValueOutOfDomain", "DuplicateScenarioId", "UnknownFactor", "MissingFactor"):
            tm.that(result.error or "", has=kind)

    def test_manifest_schema_error_names_json_path(self, tmp_path: Path) -> None:
        path = tmp_path / "m.json"
        path.write_text(
            json.dumps({"schema": {"factors": []}, "scenarios": []}), encoding="utf-8"
        )
        result = FlextIlsAccuracyIngest.parse_scenario_manifest(path)
        tm.fail(result)
        tm.that(result.error or "", has="SchemaError")
        tm.that(result.error or "", has="schema.factors")

    def test_load_experiment_missing_trajectory_names_path(self, tmp_path: Path) -> None:
        manifest = u.IlsAccuracy.Tests.offset_manifest(tmp_path, {"a": (0.02,)})
        (tmp_path / "a_r1_estimate.csv").unlink()
        loaded = FlextIlsAccuracyIngest.parse_scenario_manifest(manifest)
        tm.ok(loaded)
        scenario_id, repetition, experiment = next(
            FlextIlsAccuracyIngest.iter_experiments(loaded.value)
        )
        record = FlextIlsAccuracyIngest.load_experiment(
            loaded.value, scenario_id, repetition, experiment
        )
        tm.fail(record)
        tm.that(record.error or "", has="a_r1_estimate.csv")
        tm.that(record.error or "", has="scenario a, repetition 1")

    def test_point_cloud(self, tmp_path: Path) -> None:
        path = u.IlsAccuracy.Tests.write_csv(
            tmp_path / "cloud.csv", ("x", "y"), [(0.0, 0.0), (1.0, 0.5)]
        )
        result = FlextIlsAccuracyIngest.parse_point_cloud_csv(path)
        tm.ok(result)
        tm.that(result.value.points, eq=((0.0, 0.0), (1.0, 0.5)))
