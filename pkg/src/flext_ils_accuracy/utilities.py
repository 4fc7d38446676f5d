"""Scenario and error utilities for ILS accuracy operations.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

from flext_core import p, r, u

from flext_ils_accuracy.constants import c
from flext_ils_accuracy.errors import (
    DuplicateScenarioIdError,
    FlextIlsAccuracyError,
    InvalidPlanError,
    MissingFactorError,
    UnknownFactorError,
    ValueOutOfDomainError,
)
from flext_ils_accuracy.models import m
from flext_ils_accuracy.typings import t


class FlextIlsAccuracyUtilities(u):
    """Single unified utilities class for ILS accuracy operations."""

    class IlsAccuracy:
        """ILS accuracy utilities namespace."""

        class Scenarios:
            """Schema-driven scenario validation and enumeration."""

            @staticmethod
            def assignment_violations(
                schema: m.IlsAccuracy.FactorSchema, scenario: m.IlsAccuracy.Scenario
            ) -> list[FlextIlsAccuracyError]:
                """Every rule the scenario's assignment breaks, in schema order."""
                violations: list[FlextIlsAccuracyError] = []
                applicable = schema.applicable(scenario.assignment)
                for name in scenario.assignment:
                    if schema.factor(name) is None:
                        violations.append(
                            UnknownFactorError(
                                f"scenario {scenario.id} assigns undeclared factor {name}"
                            )
                        )
                    elif name not in applicable:
                        violations.append(
                            UnknownFactorError(
                                f"scenario {scenario.id} assigns factor {name} "
                                f"which does not apply to "
                                f"{schema.join_factor}={scenario.assignment.get(schema.join_factor or '')}"
                            )
                        )
                for factor in schema.factors:
                    if factor.name not in applicable:
                        continue
                    if factor.name not in scenario.assignment:
                        violations.append(
                            MissingFactorError(
                                f"scenario {scenario.id} omits factor {factor.name}"
                            )
                        )
                        continue
                    value = scenario.assignment[factor.name]
                    if not factor.contains(value):
                        violations.append(
                            ValueOutOfDomainError(
                                f"scenario {scenario.id} sets {factor.name}={value!r} "
                                f"outside its declared domain"
                            )
                        )
                return violations

            @staticmethod
            def validate_manifest(
                schema: m.IlsAccuracy.FactorSchema,
                scenarios: Sequence[m.IlsAccuracy.Scenario],
            ) -> p.Result[tuple[m.IlsAccuracy.Scenario, ...]]:
                """Check every scenario against the schema, reporting all violations."""
                violations: list[FlextIlsAccuracyError] = []
                seen: set[str] = set()
                for scenario in scenarios:
                    if scenario.id in seen:
                        violations.append(
                            DuplicateScenarioIdError(
                                f"scenario id {scenario.id} is used more than once"
                            )
                        )
                    seen.add(scenario.id)
                    violations.extend(
                        FlextIlsAccuracyUtilities.IlsAccuracy.Scenarios.assignment_violations(
                            schema, scenario
                        )
                    )
                if violations:
                    return r[tuple[m.IlsAccuracy.Scenario, ...]].fail(
                        "; ".join(str(item) for item in violations)
                    )
                return r[tuple[m.IlsAccuracy.Scenario, ...]].ok(tuple(scenarios))

            @staticmethod
            def factor_domain(
                factor: m.IlsAccuracy.CategoricalFactor
                | m.IlsAccuracy.ContinuousFactor,
            ) -> tuple[str | float, ...]:
                """Enumerable values of a factor; continuous factors need levels."""
                if isinstance(factor, m.IlsAccuracy.CategoricalFactor):
                    return factor.values
                if not factor.levels:
                    msg = f"continuous factor {factor.name} declares no levels to enumerate"
                    raise InvalidPlanError(msg)
                return factor.levels

            @staticmethod
            def full_factorial(
                schema: m.IlsAccuracy.FactorSchema,
            ) -> p.Result[tuple[m.IlsAccuracy.Scenario, ...]]:
                """Every scenario of the design, per join group, in schema order."""
                scenarios_ns = FlextIlsAccuracyUtilities.IlsAccuracy.Scenarios

                def _run_full_factorial() -> p.Result[tuple[m.IlsAccuracy.Scenario, ...]]:
                    assignments: list[dict[str, str | float]] = []
                    # (join value, applicable names); a schema without join is one group
                    groups: list[tuple[str | None, tuple[str, ...]]] = [(None, schema.names)]
                    join = (
                        schema.factor(schema.join_factor) if schema.join_factor else None
                    )
                    if isinstance(join, m.IlsAccuracy.CategoricalFactor):
                        groups = [
                            (value, schema.applicable({join.name: value}))
                            for value in join.values
                        ]
                    for join_value, names in groups:
                        domains: list[tuple[str | float, ...]] = []
                        for name in names:
                            factor = schema.factor(name)
                            if factor is None:
                                msg = f"factor {name} is not declared"
                                raise InvalidPlanError(msg)
                            if join_value is not None and name == schema.join_factor:
                                domains.append((join_value,))
                                continue
                            domains.append(scenarios_ns.factor_domain(factor))
                        assignments.extend(
                            dict(zip(names, combo, strict=True))
                            for combo in itertools.product(*domains)
                        )
                    width = max(2, len(str(len(assignments))))
                    return r[tuple[m.IlsAccuracy.Scenario, ...]].ok(
                        tuple(
                            m.IlsAccuracy.Scenario(
                                id=f"S{index:0{width}d}", assignment=assignment
                            )
                            for index, assignment in enumerate(assignments, start=1)
                        )
                    )

                try:
                    return _run_full_factorial()
                except FlextIlsAccuracyError as exc:
                    return r[tuple[m.IlsAccuracy.Scenario, ...]].fail(str(exc))

        class Errors:
            """Mapping of failed results to error kinds and exit codes."""

            @staticmethod
            def error_kind(message: str | None) -> str:
                """Kind prefix of a failure message produced by a domain error."""
                if not message:
                    return ""
                head, _, _ = message.partition(":")
                return head.strip()

            @staticmethod
            def exit_code_for(message: str | None) -> int:
                """Exit code for a failure: 2 for configuration, 3 for data."""
                kind = FlextIlsAccuracyUtilities.IlsAccuracy.Errors.error_kind(message)
                if kind in c.IlsAccuracy.CONFIG_ERROR_KINDS:
                    return c.IlsAccuracy.ExitCode.USAGE
                return c.IlsAccuracy.ExitCode.DATA

            @staticmethod
            def location(loc: Sequence[str | int]) -> str:
                """JSON path such as ``scenarios[3].assignment.FoV`` from a pydantic loc."""
                path = ""
                for part in loc:
                    if isinstance(part, int):
                        path += f"[{part}]"
                    else:
                        path += f".{part}" if path else part
                return path or "$"

        class Numbers:
            """Formatting helpers shared by report and tree rendering."""

            @staticmethod
            def short(value: float) -> str:
                """Compact human form of a number, e.g. 225 or 0.675."""
                if math.isfinite(value) and value == int(value):
                    return str(int(value))
                return format(value, ".6g")

            @staticmethod
            def feature(value: t.IlsAccuracy.FactorValue) -> str:
                """Factor value as rendered in reports."""
                if isinstance(value, str):
                    return value
                return FlextIlsAccuracyUtilities.IlsAccuracy.Numbers.short(value)


u = FlextIlsAccuracyUtilities

__all__: list[str] = ["FlextIlsAccuracyUtilities", "u"]
