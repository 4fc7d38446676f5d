"""Tests for domain model validation.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError

from flext_ils_accuracy import m
from flext_tests import tm
from tests import c

_NS = m.IlsAccuracy


class TestsFlextIlsAccuracyDomainModels:
    """Invariants enforced at construction."""

    def test_pose_requires_unit_quaternion(self) -> None:
        pose = _NS.Pose(t=0.0, x=1.0, y=2.0, orientation=(1.0, 0.0, 0.0, 0.0))
        tm.that(pose.position, eq=(1.0, 2.0, 0.0))
        with pytest.raises(ValidationError, match="unit quaternion"):
            _NS.Pose(t=0.0, x=0.0, y=0.0, orientation=(1.0, 1.0, 0.0, 0.0))

    def test_trajectory_requires_increasing_timestamps(self) -> None:
        with pytest.raises(ValidationError, match="strictly increase at pose 1"):
            _NS.Trajectory(
                source_id="est",
                poses=(_NS.Pose(t=1.0, x=0.0, y=0.0), _NS.Pose(t=1.0, x=1.0, y=0.0)),
            )
        trajectory = _NS.Trajectory.from_arrays(
            "est", np.array([0.0, 1.0]), np.array([[0.0, 0.0, 0.0], [1.0, 2.0, 3.0]])
        )
        tm.that((trajectory.start, trajectory.end), eq=(0.0, 1.0))
        assert trajectory.quaternions() is None
        tm.that(trajectory.positions().shape, eq=(2, 3))

    def test_factor_schema_groups(self) -> None:
        ils = _NS.CategoricalFactor(name="ILS", values=("LiDAR", "UWB"))
        fov = _NS.ContinuousFactor(name="FoV", min=0.0, max=360.0, levels=(180.0, 270.0))
        ekf = _NS.CategoricalFactor(name="EKF", values=("on", "off"))
        schema = _NS.FactorSchema(
            factors=(ils, fov, ekf),
            join_factor="ILS",
            groups={"LiDAR": ("FoV",), "UWB": ("EKF",)},
        )
        tm.that(schema.applicable({"ILS": "UWB"}), eq=("ILS", "EKF"))
        tm.that(schema.applicable({"ILS": "GPS"}), eq=("ILS",))
        with pytest.raises(ValidationError, match="cover exactly"):
            _NS.FactorSchema(factors=(ils, fov), join_factor="ILS", groups={"LiDAR": ()})
        with pytest.raises(ValidationError, match="require a join_factor"):
            _NS.FactorSchema(factors=(fov,), groups={"x": ("FoV",)})
        with pytest.raises(ValidationError, match="outside bounds"):
            _NS.ContinuousFactor(name="FoV", min=0.0, max=360.0, levels=(400.0,))

    def test_performance_classes_must_be_contiguous(self) -> None:
        cls = _NS.PerformanceClass
        with pytest.raises(ValidationError, match="not contiguous"):
            _NS.PerformanceClassScheme(
                kind=c.IlsAccuracy.SchemeKind.APPLICATION,
                classes=(cls(label="A", lower=0.0, upper=0.1), cls(label="B", lower=0.2, upper=0.3)),
            )
        with pytest.raises(ValidationError, match="start at 0"):
            _NS.PerformanceClassScheme(
                kind=c.IlsAccuracy.SchemeKind.APPLICATION,
                classes=(cls(label="A", lower=0.1, upper=0.2),),
            )
        with pytest.raises(ValidationError, match="only the last class"):
            _NS.PerformanceClassScheme(
                kind=c.IlsAccuracy.SchemeKind.TECHNOLOGY,
                classes=(cls(label="I", lower=0.0), cls(label="II", lower=0.1)),
            )

    def test_rigid_transform_rotation(self) -> None:
        quarter = _NS.RigidTransform.from_yaw(math.pi / 2.0, (1.0, 0.0))
        assert quarter.yaw_deg == pytest.approx(90.0)
        moved = quarter.apply_points(np.array([[1.0, 0.0]]))
        assert moved[0] == pytest.approx([1.0, 1.0])
        with pytest.raises(ValidationError, match="orthonormal"):
            _NS.RigidTransform.from_arrays(np.eye(3) * 2.0, np.zeros(3))
        with pytest.raises(ValidationError, match="determinant"):
            _NS.RigidTransform.from_arrays(np.diag([1.0, 1.0, -1.0]), np.zeros(3))

    def test_scenario_metrics_mean(self) -> None:
        metrics = _NS.ScenarioMetrics(
            scenario_id="S01", per_repetition_h95=(0.1, 0.3), mean_h95=0.2
        )
        tm.that(metrics.percentile, eq=c.IlsAccuracy.DEFAULT_PERCENTILE)
        with pytest.raises(ValidationError, match="differs from mean"):
            _NS.ScenarioMetrics(scenario_id="S01", per_repetition_h95=(0.1, 0.3), mean_h95=0.25)

    def test_cdf_curve(self) -> None:
        curve = _NS.CdfCurve(points=((0.1, 0.25), (0.2, 0.75), (0.4, 1.0)))
        tm.that(curve.fraction_at(0.05), eq=0.0)
        tm.that(curve.fraction_at(0.3), eq=0.75)
        with pytest.raises(ValidationError, match="end at fraction 1"):
            _NS.CdfCurve(points=((0.1, 0.5),))
        with pytest.raises(ValidationError, match="strictly increase"):
            _NS.CdfCurve(points=((0.2, 0.5), (0.1, 1.0)))

    def test_outlier_rate_stays_below_one(self) -> None:
        tm.that(_NS.NoiseSpec(sigma_xy=0.0, outlier_rate=0.999).outlier_rate, eq=0.999)
        with pytest.raises(ValidationError, match="less than 1"):
            _NS.NoiseSpec(sigma_xy=0.0, outlier_rate=1.0)
        with pytest.raises(ValidationError, match="less than 1"):
            _NS.SimulationPlan(outlier_rate=1.0)
        with pytest.raises(ValidationError, match="greater than or equal to 0"):
            _NS.NoiseSpec(sigma_xy=0.0, outlier_rate=-0.1)

    def test_stage_report_merged(self) -> None:
        first = _NS.StageReport(stage="report", outputs=("a.csv",), summary={"x": 1})
        second = _NS.StageReport(stage="learn", outputs=("b.json",), summary={"y": 2.5})
        merged = first.merged(second)
        tm.that(merged.stage, eq="report")
        tm.that(merged.outputs, eq=("a.csv", "b.json"))
        tm.that(merged.summary, eq={"x": 1, "y": 2.5})

    def test_models_are_frozen(self) -> None:
        pose = _NS.Pose(t=0.0, x=0.0, y=0.0)
        with pytest.raises(ValidationError):
            pose.x = 1.0  # type: ignore[misc]
        with pytest.raises(ValidationError):
            _NS.Pose(t=0.0, x=0.0, y=0.0, w=1.0)  # type: ignore[call-arg]
