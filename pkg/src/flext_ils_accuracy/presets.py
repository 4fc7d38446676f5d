"""Factor schema, class tables and reference trees of the published warehouse study.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from flext_ils_accuracy import c, m, p, r
from flext_ils_accuracy.errors import MissingSchemeError

type _Node = m.IlsAccuracy.TreeLeaf | m.IlsAccuracy.TreeSplit


class FlextIlsAccuracyPresets:
    """Study presets: joint UWB/LiDAR schema, class schemes and decision trees."""

    ILS_FACTOR = "ILS"
    ENVIRONMENT = "Environment"
    EKF = "EKF"
    MAP_QUALITY = "MapQuality"
    FOV = "FoV"
    REFLECTOR = "Reflector"
    DYNAMICS = "Dynamics"

    @staticmethod
    def map_quality_levels() -> tuple[float, ...]:
        """Distinct map-quality scores of the map x environment table, ascending."""
        return tuple(sorted({score for _, _, score in c.IlsAccuracy.MAP_QUALITY_TABLE}))

    @staticmethod
    def map_quality(map_environment: str, evaluation_environment: str) -> float | None:
        """Map-quality score for a map recorded in one environment and used in another."""
        for recorded, evaluated, score in c.IlsAccuracy.MAP_QUALITY_TABLE:
            if (recorded, evaluated) == (map_environment, evaluation_environment):
                return score
        return None

    @classmethod
    def joint_schema(cls) -> m.IlsAccuracy.FactorSchema:
        """UWB and LiDAR factors joined on the ILS factor, in tie-break order."""
        categorical = m.IlsAccuracy.CategoricalFactor
        continuous = m.IlsAccuracy.ContinuousFactor
        return m.IlsAccuracy.FactorSchema(
            factors=(
                categorical(name=cls.ILS_FACTOR, values=("UWB", "LiDAR")),
                categorical(name=cls.ENVIRONMENT, values=("empty", "aisle")),
                categorical(name=cls.EKF, values=("on", "off")),
                continuous(
                    name=cls.MAP_QUALITY,
                    min=0.0,
                    max=1.0,
                    levels=cls.map_quality_levels(),
                ),
                continuous(
                    name=cls.FOV,
                    unit="deg",
                    min=0.0,
                    max=360.0,
                    levels=c.IlsAccuracy.FOV_LEVELS_DEG,
                ),
                categorical(name=cls.REFLECTOR, values=("on", "off")),
                categorical(name=cls.DYNAMICS, values=("yes", "no")),
            ),
            join_factor=c.IlsAccuracy.JOIN_FACTOR,
            groups={
                "UWB": (cls.ENVIRONMENT, cls.EKF, cls.DYNAMICS),
                "LiDAR": (cls.MAP_QUALITY, cls.FOV, cls.REFLECTOR, cls.DYNAMICS),
            },
        )

    @staticmethod
    def application_scheme() -> m.IlsAccuracy.PerformanceClassScheme:
        """Process-requirement classes A to D."""
        return m.IlsAccuracy.PerformanceClassScheme(
            kind=c.IlsAccuracy.SchemeKind.APPLICATION,
            classes=tuple(
                m.IlsAccuracy.PerformanceClass(label=label, lower=lower, upper=upper)
                for label, lower, upper in c.IlsAccuracy.APPLICATION_CLASSES
            ),
        )

    @staticmethod
    def technology_scheme() -> m.IlsAccuracy.PerformanceClassScheme:
        """System-capability classes I to V; V is open-ended."""
        return m.IlsAccuracy.PerformanceClassScheme(
            kind=c.IlsAccuracy.SchemeKind.TECHNOLOGY,
            classes=tuple(
                m.IlsAccuracy.PerformanceClass(label=label, lower=lower, upper=upper)
                for label, lower, upper in c.IlsAccuracy.TECHNOLOGY_CLASSES
            ),
        )

    @staticmethod
    def scheme(kind: c.IlsAccuracy.SchemeKind) -> m.IlsAccuracy.PerformanceClassScheme:
        """Published scheme of the given kind."""
        if kind == c.IlsAccuracy.SchemeKind.TECHNOLOGY:
            return FlextIlsAccuracyPresets.technology_scheme()
        return FlextIlsAccuracyPresets.application_scheme()

    @staticmethod
    def _leaf(label: str) -> m.IlsAccuracy.TreeLeaf:
        return m.IlsAccuracy.TreeLeaf(label=label)

    @staticmethod
    def _equals(
        factor: str, value: str, other: str, left: _Node, right: _Node
    ) -> m.IlsAccuracy.TreeSplit:
        return m.IlsAccuracy.TreeSplit(
            factor=factor,
            test=m.IlsAccuracy.CategoricalTest(value=value),
            right_values=(other,),
            left=left,
            right=right,
        )

    @staticmethod
    def _at_most(
        factor: str, threshold: float, left: _Node, right: _Node
    ) -> m.IlsAccuracy.TreeSplit:
        return m.IlsAccuracy.TreeSplit(
            factor=factor,
            test=m.IlsAccuracy.ContinuousTest(threshold=threshold),
            left=left,
            right=right,
        )

    @classmethod
    def _lidar_branch(cls, good: str, fair: str, *, dynamics: bool) -> _Node:
        """LiDAR subtree; with ``dynamics`` the low-quality reflector branch splits on Dynamics."""
        leaf, equals, at_most = cls._leaf, cls._equals, cls._at_most
        reflector_on: _Node = (
            equals(cls.DYNAMICS, "no", "yes", leaf(good), leaf(fair))
            if dynamics
            else leaf(good)
        )
        low_quality = at_most(
            cls.FOV,
            225.0,
            leaf(fair),
            equals(cls.REFLECTOR, "off", "on", leaf(fair), reflector_on),
        )
        high_quality = at_most(
            cls.FOV,
            225.0,
            equals(
                cls.REFLECTOR,
                "off",
                "on",
                at_most(cls.MAP_QUALITY, 0.915, leaf(fair), leaf(good)),
                leaf(good),
            ),
            leaf(good),
        )
        return at_most(cls.MAP_QUALITY, 0.675, low_quality, high_quality)

    @classmethod
    def _observed_ranges(cls) -> dict[str, tuple[float, float]]:
        levels = cls.map_quality_levels()
        fov = c.IlsAccuracy.FOV_LEVELS_DEG
        return {
            cls.MAP_QUALITY: (min(levels), max(levels)),
            cls.FOV: (min(fov), max(fov)),
        }

    @classmethod
    def application_tree(cls) -> m.IlsAccuracy.DecisionTree:
        """Reference tree over the application classes A to D."""
        leaf, equals = cls._leaf, cls._equals
        uwb = equals(
            cls.ENVIRONMENT,
            "aisle",
            "empty",
            equals(cls.EKF, "off", "on", leaf("D"), leaf("C")),
            leaf("C"),
        )
        return m.IlsAccuracy.DecisionTree(
            factor_schema=cls.joint_schema(),
            root=equals(
                cls.ILS_FACTOR,
                "LiDAR",
                "UWB",
                cls._lidar_branch("A", "B", dynamics=True),
                uwb,
            ),
            observed_ranges=cls._observed_ranges(),
        )

    @classmethod
    def technology_tree(cls) -> m.IlsAccuracy.DecisionTree:
        """Reference tree over the technology classes I to V."""
        leaf, equals = cls._leaf, cls._equals

        def dynamics_split() -> m.IlsAccuracy.TreeSplit:
            return equals(cls.DYNAMICS, "no", "yes", leaf("III"), leaf("IV"))

        uwb = equals(
            cls.ENVIRONMENT,
            "aisle",
            "empty",
            equals(cls.EKF, "off", "on", leaf("V"), dynamics_split()),
            equals(cls.EKF, "off", "on", dynamics_split(), leaf("III")),
        )
        return m.IlsAccuracy.DecisionTree(
            factor_schema=cls.joint_schema(),
            root=equals(
                cls.ILS_FACTOR,
                "LiDAR",
                "UWB",
                cls._lidar_branch("I", "II", dynamics=False),
                uwb,
            ),
            observed_ranges=cls._observed_ranges(),
        )

    @classmethod
    def tree(cls, kind: c.IlsAccuracy.SchemeKind) -> m.IlsAccuracy.DecisionTree:
        """Reference tree for the given scheme kind."""
        if kind == c.IlsAccuracy.SchemeKind.TECHNOLOGY:
            return cls.technology_tree()
        return cls.application_tree()

    @classmethod
    def simulation_plan(
        cls, kind: c.IlsAccuracy.SchemeKind | str
    ) -> p.Result[m.IlsAccuracy.SimulationPlan]:
        """Plan planting the reference tree of one scheme kind over the joint schema."""
        try:
            scheme_kind = c.IlsAccuracy.SchemeKind(kind)
        except ValueError:
            return r[m.IlsAccuracy.SimulationPlan].fail(
                str(MissingSchemeError(f"no preset named {kind!r}"))
            )
        return r[m.IlsAccuracy.SimulationPlan].ok(
            m.IlsAccuracy.SimulationPlan(
                preset=scheme_kind,
                factor_schema=cls.joint_schema(),
                tree=cls.tree(scheme_kind),
                performance_classes=cls.scheme(scheme_kind),
            )
        )


__all__: list[str] = ["FlextIlsAccuracyPresets"]
