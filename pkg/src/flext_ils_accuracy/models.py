"""Models for indoor localization accuracy analytics.

All domain values are frozen pydantic models; construction validates the
invariants each value must hold for the rest of the pipeline.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from pathlib import Path
from typing import Annotated, Literal, Self

import numpy as np
from flext_core import m
from pydantic import BaseModel, ConfigDict, Field, model_validator

from flext_ils_accuracy.constants import c
from flext_ils_accuracy.typings import t


class FlextIlsAccuracyModels(m):
    """Unified models collection for FLEXT ILS Accuracy.

    Model Categories:
    - Trajectories: poses, trajectories, experiments and synchronised samples
    - Scenarios: factor schemas, scenarios and manifests
    - Metrics: error samples, CDF curves, per-experiment and per-scenario metrics
    - Classes: performance class schemes and clustering results
    - Trees: split tests, nodes, decision trees and their reports
    - Simulation: noise specifications, planted scenarios and plans
    """

    class IlsAccuracy:
        """ILS accuracy domain model namespace."""

        class FrozenModel(BaseModel):
            """Immutable, strict-keyed base of every domain value."""

            model_config = ConfigDict(
                frozen=True, extra="forbid", allow_inf_nan=False
            )

        class Pose(FrozenModel):
            """Timestamped position with optional unit quaternion (w, x, y, z)."""

            t: float
            x: float
            y: float
            z: float = 0.0
            orientation: tuple[float, float, float, float] | None = None

            @model_validator(mode="after")
            def _validate_orientation(self) -> Self:
                if self.orientation is not None:
                    norm = math.sqrt(sum(q * q for q in self.orientation))
                    if abs(norm - 1.0) > c.IlsAccuracy.QUATERNION_NORM_TOL:
                        msg = f"orientation must be a unit quaternion, norm is {norm}"
                        raise ValueError(msg)
                return self

            @property
            def position(self) -> tuple[float, float, float]:
                """Position as an (x, y, z) tuple."""
                return (self.x, self.y, self.z)

        class Trajectory(FrozenModel):
            """Time-ordered pose sequence from one source."""

            source_id: Annotated[str, Field(min_length=1)]
            poses: Annotated[
                tuple[FlextIlsAccuracyModels.IlsAccuracy.Pose, ...],
                Field(min_length=1),
            ]

            @model_validator(mode="after")
            def _validate_monotone(self) -> Self:
                for index in range(1, len(self.poses)):
                    if self.poses[index].t <= self.poses[index - 1].t:
                        msg = (
                            f"timestamps must strictly increase at pose {index}: "
                            f"{self.poses[index].t} after {self.poses[index - 1].t}"
                        )
                        raise ValueError(msg)
                return self

            @classmethod
            def from_arrays(
                cls,
                source_id: str,
                times: t.IlsAccuracy.FloatArray,
                positions: t.IlsAccuracy.FloatArray,
                quaternions: t.IlsAccuracy.FloatArray | None = None,
            ) -> FlextIlsAccuracyModels.IlsAccuracy.Trajectory:
                """Build a trajectory from (n,), (n, 3) and optional (n, 4) arrays."""
                pose_cls = FlextIlsAccuracyModels.IlsAccuracy.Pose
                poses = tuple(
                    pose_cls(
                        t=float(times[i]),
                        x=float(positions[i, 0]),
                        y=float(positions[i, 1]),
                        z=float(positions[i, 2]),
                        orientation=None
                        if quaternions is None
                        else (
                            float(quaternions[i, 0]),
                            float(quaternions[i, 1]),
                            float(quaternions[i, 2]),
                            float(quaternions[i, 3]),
                        ),
                    )
                    for i in range(len(times))
                )
                return cls(source_id=source_id, poses=poses)

            @property
            def start(self) -> float:
                """First timestamp."""
                return self.poses[0].t

            @property
            def end(self) -> float:
                """Last timestamp."""
                return self.poses[-1].t

            def times(self) -> t.IlsAccuracy.FloatArray:
                """Timestamps as a float array."""
                return np.array([pose.t for pose in self.poses], dtype=np.float64)

            def positions(self) -> t.IlsAccuracy.FloatArray:
                """Positions as an (n, 3) float array."""
                return np.array(
                    [pose.position for pose in self.poses], dtype=np.float64
                ).reshape(-1, 3)

            def quaternions(self) -> t.IlsAccuracy.FloatArray | None:
                """Orientations as an (n, 4) array when every pose has one."""
                if any(pose.orientation is None for pose in self.poses):
                    return None
                return np.array(
                    [pose.orientation for pose in self.poses], dtype=np.float64
                ).reshape(-1, 4)

        class CategoricalFactor(FrozenModel):
            """Factor with a finite set of named values."""

            kind: Literal["categorical"] = "categorical"
            name: Annotated[str, Field(min_length=1)]
            values: Annotated[tuple[str, ...], Field(min_length=1)]

            @model_validator(mode="after")
            def _validate_values(self) -> Self:
                if len(set(self.values)) != len(self.values):
                    msg = f"factor {self.name} declares duplicate values"
                    raise ValueError(msg)
                return self

            def contains(self, value: str | float) -> bool:
                """Whether the value is one of the declared values."""
                return isinstance(value, str) and value in self.values

        class ContinuousFactor(FrozenModel):
            """Factor with a real value inside declared bounds."""

            kind: Literal["continuous"] = "continuous"
            name: Annotated[str, Field(min_length=1)]
            unit: str = ""
            min: float
            max: float
            levels: tuple[float, ...] = ()

            @model_validator(mode="after")
            def _validate_bounds(self) -> Self:
                if not self.min < self.max:
                    msg = f"factor {self.name} needs min < max"
                    raise ValueError(msg)
                for level in self.levels:
                    if not self.min <= level <= self.max:
                        msg = f"level {level} of factor {self.name} outside bounds"
                        raise ValueError(msg)
                if len(set(self.levels)) != len(self.levels):
                    msg = f"factor {self.name} declares duplicate levels"
                    raise ValueError(msg)
                return self

            def contains(self, value: str | float) -> bool:
                """Whether the value is a number inside the bounds."""
                return (
                    not isinstance(value, str)
                    and math.isfinite(value)
                    and self.min <= value <= self.max
                )

        class FactorSchema(FrozenModel):
            """Ordered factor declarations, optionally joined on one factor.

            When ``join_factor`` is set, each of its values selects the group
            of factors applicable to scenarios holding that value.
            """

            factors: Annotated[
                tuple[
                    Annotated[
                        FlextIlsAccuracyModels.IlsAccuracy.CategoricalFactor
                        | FlextIlsAccuracyModels.IlsAccuracy.ContinuousFactor,
                        Field(discriminator="kind"),
                    ],
                    ...,
                ],
                Field(min_length=1),
            ]
            join_factor: str | None = None
            groups: dict[str, tuple[str, ...]] = Field(default_factory=dict)

            @model_validator(mode="after")
            def _validate_schema(self) -> Self:
                names = [factor.name for factor in self.factors]
                if len(set(names)) != len(names):
                    msg = "factor names must be unique"
                    raise ValueError(msg)
                if self.join_factor is None:
                    if self.groups:
                        msg = "groups require a join_factor"
                        raise ValueError(msg)
                    return self
                join = self.factor(self.join_factor)
                if not isinstance(
                    join, FlextIlsAccuracyModels.IlsAccuracy.CategoricalFactor
                ):
                    msg = f"join factor {self.join_factor} must be a declared categorical factor"
                    raise ValueError(msg)
                if set(self.groups) != set(join.values):
                    msg = f"groups must cover exactly the values of {self.join_factor}"
                    raise ValueError(msg)
                for value, members in self.groups.items():
                    for member in members:
                        if member not in names or member == self.join_factor:
                            msg = f"group {value} lists unknown factor {member}"
                            raise ValueError(msg)
                return self

            @property
            def names(self) -> tuple[str, ...]:
                """Factor names in declaration order."""
                return tuple(factor.name for factor in self.factors)

            def factor(
                self, name: str
            ) -> (
                FlextIlsAccuracyModels.IlsAccuracy.CategoricalFactor
                | FlextIlsAccuracyModels.IlsAccuracy.ContinuousFactor
                | None
            ):
                """Factor declaration by name."""
                for factor in self.factors:
                    if factor.name == name:
                        return factor
                return None

            def applicable(self, assignment: t.IlsAccuracy.Assignment) -> tuple[str, ...]:
                """Factor names a scenario with this assignment must define."""
                if self.join_factor is None:
                    return self.names
                join_value = assignment.get(self.join_factor)
                if not isinstance(join_value, str) or join_value not in self.groups:
                    return (self.join_factor,)
                wanted = {self.join_factor, *self.groups[join_value]}
                return tuple(name for name in self.names if name in wanted)

        class Scenario(FrozenModel):
            """One factor-level assignment."""

            id: Annotated[str, Field(min_length=1)]
            assignment: dict[str, str | float]

        class ExperimentRecord(FrozenModel):
            """One repetition of one scenario: estimate, reference, evaluation times."""

            scenario_id: Annotated[str, Field(min_length=1)]
            repetition_index: Annotated[int, Field(ge=1)]
            estimate: FlextIlsAccuracyModels.IlsAccuracy.Trajectory
            reference: FlextIlsAccuracyModels.IlsAccuracy.Trajectory
            evaluation_times: tuple[float, ...]

            @model_validator(mode="after")
            def _validate_sorted(self) -> Self:
                times = self.evaluation_times
                if any(times[i] < times[i - 1] for i in range(1, len(times))):
                    msg = "evaluation_times must be sorted"
                    raise ValueError(msg)
                return self

        class SyncedSamplePair(FrozenModel):
            """Estimate and reference interpolated at one evaluation time."""

            t: float
            estimate_xy: tuple[float, float]
            reference_xy: tuple[float, float]
            estimate_z: float = 0.0
            reference_z: float = 0.0

        class ErrorSample(FrozenModel):
            """Horizontal error at one evaluation time."""

            t: float
            horizontal_error: Annotated[float, Field(ge=0.0)]

        class CdfCurve(FrozenModel):
            """Empirical CDF as (error, fraction) steps."""

            points: Annotated[
                tuple[tuple[float, float], ...], Field(min_length=1)
            ]

            @model_validator(mode="after")
            def _validate_steps(self) -> Self:
                previous_error = -math.inf
                previous_fraction = 0.0
                for error, fraction in self.points:
                    if error <= previous_error or fraction <= previous_fraction:
                        msg = "CDF points must strictly increase in error and fraction"
                        raise ValueError(msg)
                    previous_error, previous_fraction = error, fraction
                if self.points[-1][1] != 1.0:
                    msg = "CDF must end at fraction 1"
                    raise ValueError(msg)
                return self

            def fraction_at(self, error: float) -> float:
                """Fraction of samples with error <= the given value."""
                fraction = 0.0
                for step_error, step_fraction in self.points:
                    if step_error > error:
                        break
                    fraction = step_fraction
                return fraction

        class ExperimentMetrics(FrozenModel):
            """Per-experiment accuracy summary."""

            scenario_id: str
            repetition: Annotated[int, Field(ge=1)]
            n_samples: Annotated[int, Field(ge=1)]
            h95: Annotated[float, Field(ge=0.0)]
            median: Annotated[float, Field(ge=0.0)]
            mean: Annotated[float, Field(ge=0.0)]
            percentile: Annotated[float, Field(gt=0.0, lt=1.0)]
            value: Annotated[float, Field(ge=0.0)]

        class ScenarioMetrics(FrozenModel):
            """Aggregate of a scenario's repetitions.

            ``per_repetition_h95`` and ``mean_h95`` hold the configured
            percentile, the 95th unless overridden.
            """

            scenario_id: Annotated[str, Field(min_length=1)]
            per_repetition_h95: Annotated[tuple[float, ...], Field(min_length=1)]
            mean_h95: float
            percentile: Annotated[float, Field(gt=0.0, lt=1.0)] = (
                c.IlsAccuracy.DEFAULT_PERCENTILE
            )
            repeatability: float | None = None
            class_label: str | None = None

            @model_validator(mode="after")
            def _validate_mean(self) -> Self:
                if any(value < 0.0 for value in self.per_repetition_h95):
                    msg = "per-repetition values must be non-negative"
                    raise ValueError(msg)
                expected = float(np.mean(self.per_repetition_h95))
                if abs(self.mean_h95 - expected) > c.IlsAccuracy.MEAN_TOL:
                    msg = f"mean_h95 {self.mean_h95} differs from mean {expected}"
                    raise ValueError(msg)
                return self

        class PerformanceClass(FrozenModel):
            """Half-open interval [lower, upper); ``upper`` None is unbounded."""

            label: Annotated[str, Field(min_length=1)]
            lower: Annotated[float, Field(ge=0.0)]
            upper: float | None = None

            def contains(self, value: float) -> bool:
                """Whether the value falls inside the interval."""
                return value >= self.lower and (self.upper is None or value < self.upper)

        class PerformanceClassScheme(FrozenModel):
            """Contiguous classes starting at 0 plus an overflow label."""

            kind: c.IlsAccuracy.SchemeKind
            classes: Annotated[
                tuple[FlextIlsAccuracyModels.IlsAccuracy.PerformanceClass, ...],
                Field(min_length=1),
            ]
            overflow_label: Annotated[str, Field(min_length=1)] = (
                c.IlsAccuracy.OVERFLOW_LABEL
            )

            @model_validator(mode="after")
            def _validate_classes(self) -> Self:
                if self.classes[0].lower != 0.0:
                    msg = "first class must start at 0"
                    raise ValueError(msg)
                labels = [item.label for item in self.classes]
                if len(set(labels)) != len(labels):
                    msg = "class labels must be unique"
                    raise ValueError(msg)
                for index, item in enumerate(self.classes):
                    last = index == len(self.classes) - 1
                    if item.upper is None:
                        if not last:
                            msg = f"only the last class may be unbounded, not {item.label}"
                            raise ValueError(msg)
                        continue
                    if not item.lower < item.upper:
                        msg = f"class {item.label} needs lower < upper"
                        raise ValueError(msg)
                    if not last and self.classes[index + 1].lower != item.upper:
                        msg = f"class {item.label} is not contiguous with its successor"
                        raise ValueError(msg)
                return self

            @property
            def labels(self) -> tuple[str, ...]:
                """Class labels in ascending interval order."""
                return tuple(item.label for item in self.classes)

            def classify(self, value: float) -> str:
                """Label of the class containing the value, else the overflow label."""
                for item in self.classes:
                    if item.contains(value):
                        return item.label
                return self.overflow_label

        class RigidTransform(FrozenModel):
            """Similarity transform x -> scale * R x + t with R in SO(3)."""

            rotation: tuple[
                tuple[float, float, float],
                tuple[float, float, float],
                tuple[float, float, float],
            ]
            translation: tuple[float, float, float]
            scale: Annotated[float, Field(gt=0.0)] = 1.0

            @model_validator(mode="after")
            def _validate_rotation(self) -> Self:
                rot = self.matrix()
                tol = c.IlsAccuracy.ROTATION_TOL
                if not np.allclose(rot.T @ rot, np.eye(3), rtol=0.0, atol=tol):
                    msg = "rotation must be orthonormal"
                    raise ValueError(msg)
                if abs(float(np.linalg.det(rot)) - 1.0) > tol:
                    msg = "rotation must have determinant +1"
                    raise ValueError(msg)
                return self

            @classmethod
            def from_arrays(
                cls,
                rotation: t.IlsAccuracy.FloatArray,
                translation: t.IlsAccuracy.FloatArray,
                scale: float = 1.0,
            ) -> FlextIlsAccuracyModels.IlsAccuracy.RigidTransform:
                """Build from a (3, 3) rotation and a (3,) translation."""
                rows = [
                    (float(row[0]), float(row[1]), float(row[2])) for row in rotation
                ]
                return cls(
                    rotation=(rows[0], rows[1], rows[2]),
                    translation=(
                        float(translation[0]),
                        float(translation[1]),
                        float(translation[2]),
                    ),
                    scale=float(scale),
                )

            @classmethod
            def identity(cls) -> FlextIlsAccuracyModels.IlsAccuracy.RigidTransform:
                """Identity transform."""
                return cls.from_arrays(np.eye(3), np.zeros(3))

            @classmethod
            def from_yaw(
                cls, yaw_rad: float, translation_xy: Sequence[float]
            ) -> FlextIlsAccuracyModels.IlsAccuracy.RigidTransform:
                """Planar rotation about z followed by a horizontal translation."""
                cos_yaw, sin_yaw = math.cos(yaw_rad), math.sin(yaw_rad)
                rotation = np.array([
                    [cos_yaw, -sin_yaw, 0.0],
                    [sin_yaw, cos_yaw, 0.0],
                    [0.0, 0.0, 1.0],
                ])
                return cls.from_arrays(
                    rotation,
                    np.array([translation_xy[0], translation_xy[1], 0.0]),
                )

            def matrix(self) -> t.IlsAccuracy.FloatArray:
                """Rotation as a (3, 3) array."""
                return np.array(self.rotation, dtype=np.float64)

            def vector(self) -> t.IlsAccuracy.FloatArray:
                """Translation as a (3,) array."""
                return np.array(self.translation, dtype=np.float64)

            @property
            def yaw_deg(self) -> float:
                """Rotation angle about z in degrees, in (-180, 180]."""
                return math.degrees(math.atan2(self.rotation[1][0], self.rotation[0][0]))

            def apply_points(
                self, points: t.IlsAccuracy.FloatArray
            ) -> t.IlsAccuracy.FloatArray:
                """Transform (n, 3) or (n, 2) points; 2-D points stay planar."""
                if points.shape[1] == 2:  # noqa: PLR2004
                    planar = self.scale * points @ self.matrix()[:2, :2].T
                    return planar + self.vector()[:2]
                return self.scale * points @ self.matrix().T + self.vector()

        class PointCloud2D(FrozenModel):
            """Planar point set, e.g. an occupancy map rasterised to points."""

            points: tuple[tuple[float, float], ...]

            def as_array(self) -> t.IlsAccuracy.FloatArray:
                """Points as an (n, 2) array."""
                return np.array(self.points, dtype=np.float64).reshape(-1, 2)

        class MapQualityScore(FrozenModel):
            """ICP fitness and residual of one map against another."""

            fitness: Annotated[float, Field(ge=0.0, le=1.0)]
            inlier_rmse: Annotated[float, Field(ge=0.0)]
            transform: FlextIlsAccuracyModels.IlsAccuracy.RigidTransform
            inlier_radius: Annotated[float, Field(gt=0.0)]
            iterations: Annotated[int, Field(ge=0)]
            distance_history: tuple[float, ...] = ()

        class ClusteringResult(FrozenModel):
            """Optimal 1-D clustering; cluster indices follow increasing centers."""

            k: Annotated[int, Field(ge=1)]
            assignments: dict[str, int]
            centers: tuple[float, ...]
            sse: Annotated[float, Field(ge=0.0)]
            clusters: tuple[tuple[float, ...], ...]

            @model_validator(mode="after")
            def _validate_clusters(self) -> Self:
                if len(self.centers) != self.k or len(self.clusters) != self.k:
                    msg = "centers and clusters must have k entries"
                    raise ValueError(msg)
                if any(
                    self.centers[i] < self.centers[i - 1] for i in range(1, self.k)
                ):
                    msg = "centers must be increasing"
                    raise ValueError(msg)
                return self

        class CategoryAssignment(FrozenModel):
            """One row of the categories report."""

            scenario_id: Annotated[str, Field(min_length=1)]
            mean_h95: Annotated[float, Field(ge=0.0)]
            class_label: Annotated[str, Field(min_length=1)]
            scheme_kind: c.IlsAccuracy.SchemeKind

        class CategoricalTest(FrozenModel):
            """Equality test; matching records go left."""

            kind: Literal["categorical"] = "categorical"
            value: str

            def goes_left(self, value: str | float) -> bool:
                """Whether a record with this value takes the left branch."""
                return value == self.value

        class ContinuousTest(FrozenModel):
            """Threshold test; values <= threshold go left."""

            kind: Literal["continuous"] = "continuous"
            threshold: float

            def goes_left(self, value: str | float) -> bool:
                """Whether a record with this value takes the left branch."""
                return float(value) <= self.threshold

        class TreeLeaf(FrozenModel):
            """Terminal node with its class and the training records it holds."""

            kind: Literal["leaf"] = "leaf"
            label: Annotated[str, Field(min_length=1)]
            support: Annotated[int, Field(ge=0)] = 0
            impure: bool = False
            class_counts: dict[str, int] = Field(default_factory=dict)
            observed: tuple[dict[str, str | float], ...] = ()

        class TreeSplit(FrozenModel):
            """Internal node testing one factor."""

            kind: Literal["split"] = "split"
            factor: Annotated[str, Field(min_length=1)]
            test: Annotated[
                FlextIlsAccuracyModels.IlsAccuracy.CategoricalTest
                | FlextIlsAccuracyModels.IlsAccuracy.ContinuousTest,
                Field(discriminator="kind"),
            ]
            right_values: tuple[str, ...] = ()
            gini_decrease: float = 0.0
            left: Annotated[
                FlextIlsAccuracyModels.IlsAccuracy.TreeLeaf
                | FlextIlsAccuracyModels.IlsAccuracy.TreeSplit,
                Field(discriminator="kind"),
            ]
            right: Annotated[
                FlextIlsAccuracyModels.IlsAccuracy.TreeLeaf
                | FlextIlsAccuracyModels.IlsAccuracy.TreeSplit,
                Field(discriminator="kind"),
            ]

        class DecisionTree(FrozenModel):
            """Binary classification tree over a factor schema."""

            format: Literal["flext-ils-accuracy/decision-tree"] = (
                "flext-ils-accuracy/decision-tree"
            )
            version: Literal[1] = 1
            factor_schema: FlextIlsAccuracyModels.IlsAccuracy.FactorSchema
            root: Annotated[
                FlextIlsAccuracyModels.IlsAccuracy.TreeLeaf
                | FlextIlsAccuracyModels.IlsAccuracy.TreeSplit,
                Field(discriminator="kind"),
            ]
            observed_ranges: dict[str, tuple[float, float]] = Field(
                default_factory=dict
            )

        class LabeledRecord(FrozenModel):
            """Scenario features with the class label to learn."""

            scenario_id: str = ""
            features: dict[str, str | float]
            label: Annotated[str, Field(min_length=1)]

        class Prediction(FrozenModel):
            """Class predicted for a feature assignment."""

            label: str
            path: str
            impure: bool = False
            extrapolation_flags: tuple[str, ...] = ()

        class Relevance(FrozenModel):
            """Factors that matter, and those that do not, for one leaf."""

            path: str
            label: str
            support: int = 0
            relevant: tuple[str, ...]
            irrelevant: tuple[str, ...]

        class FactorUsage(FrozenModel):
            """How often a factor shapes the tree."""

            factor: str
            split_count: int
            leaf_paths: int

        class RelevanceReport(FrozenModel):
            """Per-leaf relevance plus global factor usage."""

            leaves: tuple[FlextIlsAccuracyModels.IlsAccuracy.Relevance, ...]
            usage: tuple[FlextIlsAccuracyModels.IlsAccuracy.FactorUsage, ...]

        class SuggestedChange(FrozenModel):
            """Single-factor change that moves a scenario into a target class."""

            factor: str
            current: str | float | None
            proposed: str | float
            label: str

        class NoiseSpec(FrozenModel):
            """Estimate noise: Gaussian xy, constant bias, uniform-disc outliers."""

            sigma_xy: Annotated[float, Field(ge=0.0)]
            bias: tuple[float, float] = (0.0, 0.0)
            outlier_rate: Annotated[float, Field(ge=0.0, lt=1.0)] = 0.0
            outlier_scale: Annotated[float, Field(ge=0.0)] = 0.0

            @classmethod
            def for_h95(cls, h95: float) -> FlextIlsAccuracyModels.IlsAccuracy.NoiseSpec:
                """Isotropic Gaussian noise whose expected h95 is the given value."""
                return cls(sigma_xy=h95 / c.IlsAccuracy.RAYLEIGH_H95_FACTOR)

        class PlantedScenario(FrozenModel):
            """Scenario labelled by a known tree with its target accuracy."""

            scenario: FlextIlsAccuracyModels.IlsAccuracy.Scenario
            label: str
            target_h95: Annotated[float, Field(ge=0.0)]
            noise: FlextIlsAccuracyModels.IlsAccuracy.NoiseSpec

        class PlantedDataset(FrozenModel):
            """Ground truth of a simulated dataset."""

            seed: int
            preset: c.IlsAccuracy.SchemeKind | None = None
            tree: FlextIlsAccuracyModels.IlsAccuracy.DecisionTree
            class_value_ranges: dict[str, tuple[float, float]]
            scenarios: tuple[FlextIlsAccuracyModels.IlsAccuracy.PlantedScenario, ...]

        class ManifestExperiment(FrozenModel):
            """File references of one experiment inside a manifest."""

            estimate: Annotated[str, Field(min_length=1)]
            reference: Annotated[str, Field(min_length=1)]
            evaluation_times: tuple[float, ...] | str
            repetition: Annotated[int, Field(ge=1)] | None = None
            time_offset: float = 0.0

        class ManifestScenario(FrozenModel):
            """Scenario entry of a manifest with its experiments."""

            id: Annotated[str, Field(min_length=1)]
            assignment: dict[str, str | float]
            experiments: tuple[FlextIlsAccuracyModels.IlsAccuracy.ManifestExperiment, ...] = ()

        class ManifestAlignment(FrozenModel):
            """Calibration experiment used to align estimate and reference frames."""

            calibration_scenario: Annotated[str, Field(min_length=1)]
            calibration_repetition: Annotated[int, Field(ge=1)] = 1
            with_scale: bool = False

        class ScenarioManifest(FrozenModel):
            """Top-level manifest document."""

            model_config = ConfigDict(
                frozen=True, extra="forbid", allow_inf_nan=False, populate_by_name=True
            )

            factor_schema: FlextIlsAccuracyModels.IlsAccuracy.FactorSchema = Field(
                alias="schema"
            )
            performance_classes: (
                FlextIlsAccuracyModels.IlsAccuracy.PerformanceClassScheme | None
            ) = None
            repetitions: Annotated[int, Field(ge=1)] = c.IlsAccuracy.DEFAULT_REPETITIONS
            scenarios: tuple[FlextIlsAccuracyModels.IlsAccuracy.ManifestScenario, ...]
            alignment: FlextIlsAccuracyModels.IlsAccuracy.ManifestAlignment | None = None

        class LoadedManifest(FrozenModel):
            """Validated manifest with its base directory."""

            manifest: FlextIlsAccuracyModels.IlsAccuracy.ScenarioManifest
            base_dir: Path
            scenarios: tuple[FlextIlsAccuracyModels.IlsAccuracy.Scenario, ...]

            def resolve(self, reference: str) -> Path:
                """Path of a file referenced relative to the manifest."""
                path = Path(reference)
                return path if path.is_absolute() else self.base_dir / path

        class SimulationPlan(FrozenModel):
            """Planted-structure simulation request."""

            model_config = ConfigDict(
                frozen=True, extra="forbid", allow_inf_nan=False, populate_by_name=True
            )

            preset: c.IlsAccuracy.SchemeKind = c.IlsAccuracy.SchemeKind.APPLICATION
            factor_schema: FlextIlsAccuracyModels.IlsAccuracy.FactorSchema | None = (
                Field(default=None, alias="schema")
            )
            tree: FlextIlsAccuracyModels.IlsAccuracy.DecisionTree | None = None
            performance_classes: (
                FlextIlsAccuracyModels.IlsAccuracy.PerformanceClassScheme | None
            ) = None
            class_value_ranges: dict[str, tuple[float, float]] | None = None
            repetitions: Annotated[int, Field(ge=1)] = c.IlsAccuracy.DEFAULT_REPETITIONS
            evaluation_poses: Annotated[int, Field(ge=1)] = (
                c.IlsAccuracy.DEFAULT_EVALUATION_POSES
            )
            speed: Annotated[float, Field(gt=0.0)] = c.IlsAccuracy.DEFAULT_SPEED_MPS
            rate: Annotated[float, Field(gt=0.0)] = c.IlsAccuracy.DEFAULT_RATE_HZ
            outlier_rate: Annotated[float, Field(ge=0.0, lt=1.0)] = 0.0
            outlier_scale: Annotated[float, Field(ge=0.0)] = 0.0

        class RunConfig(FrozenModel):
            """Validated parameters of one CLI stage run."""

            manifest: Path | None = None
            plan: Path | None = None
            output_dir: Path
            percentile: Annotated[float, Field(gt=0.0, lt=1.0)] = (
                c.IlsAccuracy.DEFAULT_PERCENTILE
            )
            max_gap: Annotated[float, Field(gt=0.0)] = c.IlsAccuracy.DEFAULT_MAX_GAP_S
            scheme: c.IlsAccuracy.SchemeSelection = (
                c.IlsAccuracy.SchemeSelection.APPLICATION
            )
            k_max: Annotated[int, Field(ge=c.IlsAccuracy.MIN_K_MAX)] = (
                c.IlsAccuracy.DEFAULT_K_MAX
            )
            elbow_method: c.IlsAccuracy.ElbowMethod = c.IlsAccuracy.ElbowMethod.RELATIVE
            inlier_radius: Annotated[float, Field(gt=0.0)] = (
                c.IlsAccuracy.DEFAULT_INLIER_RADIUS_M
            )
            icp_max_iters: Annotated[int, Field(ge=1)] = c.IlsAccuracy.DEFAULT_ICP_MAX_ITERS
            yaw_step_deg: Annotated[float, Field(gt=0.0, le=180.0)] = (
                c.IlsAccuracy.DEFAULT_YAW_STEP_DEG
            )
            seed: Annotated[int, Field(ge=0)] = c.IlsAccuracy.DEFAULT_SEED
            strict: bool = False

        class StageReport(FrozenModel):
            """Outcome of one pipeline stage."""

            stage: str
            outputs: tuple[str, ...] = ()
            summary: dict[str, str | int | float] = Field(default_factory=dict)

            def merged(
                self, other: FlextIlsAccuracyModels.IlsAccuracy.StageReport
            ) -> FlextIlsAccuracyModels.IlsAccuracy.StageReport:
                """Combine two reports into one."""
                return self.model_copy(
                    update={
                        "outputs": (*self.outputs, *other.outputs),
                        "summary": {**self.summary, **other.summary},
                    }
                )


_NS = FlextIlsAccuracyModels.IlsAccuracy
for _model in (
    _NS.Trajectory,
    _NS.FactorSchema,
    _NS.ExperimentRecord,
    _NS.PerformanceClassScheme,
    _NS.MapQualityScore,
    _NS.TreeSplit,
    _NS.DecisionTree,
    _NS.RelevanceReport,
    _NS.PlantedScenario,
    _NS.PlantedDataset,
    _NS.ManifestScenario,
    _NS.ScenarioManifest,
    _NS.LoadedManifest,
    _NS.SimulationPlan,
):
    _model.model_rebuild()


m = FlextIlsAccuracyModels

__all__: list[str] = ["FlextIlsAccuracyModels", "m"]
