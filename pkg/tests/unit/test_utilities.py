"""Tests for scenario enumeration, validation and error mapping helpers.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import pytest

from flext_ils_accuracy import m
from flext_ils_accuracy.presets import FlextIlsAccuracyPresets
from flext_tests import tm
from tests import c, u

_Scenarios = u.IlsAccuracy.Scenarios
_Errors = u.IlsAccuracy.Errors
_Numbers = u.IlsAccuracy.Numbers


class TestsFlextIlsAccuracyHelpers:
    """Scenarios, Errors and Numbers namespaces."""

    def test_full_factorial_follows_schema_order(self) -> None:
        scenarios = _Scenarios.full_factorial(FlextIlsAccuracyPresets.joint_schema())
        tm.ok(scenarios)
        first = scenarios.value[0]
        tm.that(first.id, eq="S01")
        tm.that(
            first.assignment,
            eq={"ILS": "UWB", "Environment": "empty", "EKF": "on", "Dynamics": "yes"},
        )
        last = scenarios.value[-1]
        tm.that(last.id, eq="S40")
        tm.that(
            last.assignment,
            eq={
                "ILS": "LiDAR",
                "MapQuality": 0.99,
                "FoV": 270.0,
                "Reflector": "off",
                "Dynamics": "no",
            },
        )

    def test_full_factorial_needs_levels(self) -> None:
        schema = m.IlsAccuracy.FactorSchema(
            factors=(m.IlsAccuracy.ContinuousFactor(name="FoV", min=0.0, max=360.0),)
        )
        result = _Scenarios.full_factorial(schema)
        tm.fail(result)
        tm.that(result.error or "", has="InvalidPlan")

    def test_validate_manifest_reports_every_violation(self) -> None:
        schema = FlextIlsAccuracyPresets.joint_schema()
        scenarios = [
            m.IlsAccuracy.Scenario(
                id="S1",
                assignment={"ILS": "UWB", "Environment": "empty", "EKF": "on", "Dynamics": "no"},
            ),
            m.IlsAccuracy.Scenario(
                id="S1",
                assignment={
                    "ILS": "UWB",
                    "Environment": "dock",
                    "EKF": "on",
                    "Dynamics": "no",
                    "FoV": 180.0,
                },
            ),
        ]
        result = _Scenarios.validate_manifest(schema, scenarios)
        tm.fail(result)
        for kind in ("DuplicateScenarioId", "ValueOutOfDomain", "UnknownFactor"):
            tm.that(result.error or "", has=kind)

    @pytest.mark.parametrize(
        ("message", "code"),
        [
            ("InconsistentLabels: two labels", c.IlsAccuracy.ExitCode.USAGE),
            ("InfeasibleRange: class A", c.IlsAccuracy.ExitCode.USAGE),
            ("SchemaError: manifest.json", c.IlsAccuracy.ExitCode.USAGE),
            ("MissingInputFile: a.csv", c.IlsAccuracy.ExitCode.DATA),
            ("DegenerateConfiguration: collinear", c.IlsAccuracy.ExitCode.DATA),
            ("", c.IlsAccuracy.ExitCode.DATA),
        ],
    )
    def test_exit_code_for(self, message: str, code: int) -> None:
        tm.that(_Errors.exit_code_for(message), eq=code)

    def test_error_kind_and_location(self) -> None:
        tm.that(_Errors.error_kind("OutOfRange: t=5 after end"), eq="OutOfRange")
        tm.that(_Errors.error_kind(None), eq="")
        tm.that(_Errors.location(("scenarios", 3, "assignment", "FoV")), eq="scenarios[3].assignment.FoV")
        tm.that(_Errors.location(()), eq="$")

    def test_numbers(self) -> None:
        tm.that(_Numbers.short(225.0), eq="225")
        tm.that(_Numbers.short(0.675), eq="0.675")
        tm.that(_Numbers.short(1.0 / 3.0), eq="0.333333")
        tm.that(_Numbers.feature("aisle"), eq="aisle")
        tm.that(_Numbers.feature(0.915), eq="0.915")
