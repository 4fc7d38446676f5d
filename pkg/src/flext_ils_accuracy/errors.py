"""Exceptions for flext-ils-accuracy.

Every error carries its kind; ``str(error)`` is ``"<Kind>: <message>"`` and is
the text placed in failed results.

Copyright (c) 2025 Flext. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from typing import ClassVar, override

from flext_core import e

from flext_ils_accuracy.constants import c


class FlextIlsAccuracyError(e.OperationError):
    """Base error raised by ILS accuracy operations."""

    kind: ClassVar[str] = c.IlsAccuracy.ErrorKind.SCHEMA_ERROR
    details: dict[str, str]

    def __init__(self, message: str, details: dict[str, str] | None = None) -> None:
        """Initialize error with message and optional location details."""
        reason = str(details) if details else ""
        super().__init__(message, reason=reason)
        self.details = details if details is not None else {}

    @override
    def __str__(self) -> str:
        """Return kind-prefixed representation of the error."""
        return f"{self.kind}: {self.message}"


class UnknownFactorError(FlextIlsAccuracyError):
    """Scenario assigns a factor the schema does not declare."""

    kind = c.IlsAccuracy.ErrorKind.UNKNOWN_FACTOR


class MissingFactorError(FlextIlsAccuracyError):
    """Scenario omits an applicable factor."""

    kind = c.IlsAccuracy.ErrorKind.MISSING_FACTOR


class ValueOutOfDomainError(FlextIlsAccuracyError):
    """Factor value outside its declared values or bounds."""

    kind = c.IlsAccuracy.ErrorKind.VALUE_OUT_OF_DOMAIN


class DuplicateScenarioIdError(FlextIlsAccuracyError):
    """Two scenarios share an id."""

    kind = c.IlsAccuracy.ErrorKind.DUPLICATE_SCENARIO_ID


class MalformedRowError(FlextIlsAccuracyError):
    """CSV row with missing or non-numeric fields."""

    kind = c.IlsAccuracy.ErrorKind.MALFORMED_ROW


class NonMonotoneTimestampError(FlextIlsAccuracyError):
    """Trajectory timestamps not strictly increasing."""

    kind = c.IlsAccuracy.ErrorKind.NON_MONOTONE_TIMESTAMP


class EmptyFileError(FlextIlsAccuracyError):
    """Input file holds no data rows."""

    kind = c.IlsAccuracy.ErrorKind.EMPTY_FILE


class SchemaError(FlextIlsAccuracyError):
    """Document does not match its expected structure."""

    kind = c.IlsAccuracy.ErrorKind.SCHEMA_ERROR


class OutOfRangeError(FlextIlsAccuracyError):
    """Query time outside the trajectory time span."""

    kind = c.IlsAccuracy.ErrorKind.OUT_OF_RANGE


class GapTooLargeError(FlextIlsAccuracyError):
    """Bracketing samples further apart than the allowed gap."""

    kind = c.IlsAccuracy.ErrorKind.GAP_TOO_LARGE


class EmptyEvaluationSetError(FlextIlsAccuracyError):
    """Experiment declares no evaluation times."""

    kind = c.IlsAccuracy.ErrorKind.EMPTY_EVALUATION_SET


class DegenerateConfigurationError(FlextIlsAccuracyError):
    """Point configuration does not determine a unique transform."""

    kind = c.IlsAccuracy.ErrorKind.DEGENERATE_CONFIGURATION


class EmptyInputError(FlextIlsAccuracyError):
    """Operation received no values."""

    kind = c.IlsAccuracy.ErrorKind.EMPTY_INPUT


class MissingRepetitionsError(FlextIlsAccuracyError):
    """Scenario has fewer repetitions than declared."""

    kind = c.IlsAccuracy.ErrorKind.MISSING_REPETITIONS


class TooFewCurvesError(FlextIlsAccuracyError):
    """Repeatability needs at least two curves."""

    kind = c.IlsAccuracy.ErrorKind.TOO_FEW_CURVES


class InvalidKError(FlextIlsAccuracyError):
    """Cluster count outside 1..n or k_max below 3."""

    kind = c.IlsAccuracy.ErrorKind.INVALID_K


class UnknownCategoricalValueError(FlextIlsAccuracyError):
    """Prediction input uses a value the schema does not declare."""

    kind = c.IlsAccuracy.ErrorKind.UNKNOWN_CATEGORICAL_VALUE


class InvalidPlanError(FlextIlsAccuracyError):
    """Simulation plan inconsistent with its schema."""

    kind = c.IlsAccuracy.ErrorKind.INVALID_PLAN


class InfeasibleRangeError(FlextIlsAccuracyError):
    """Class value range cannot hold a planted value."""

    kind = c.IlsAccuracy.ErrorKind.INFEASIBLE_RANGE


class TooFewPosesError(FlextIlsAccuracyError):
    """Interpolation needs at least two poses."""

    kind = c.IlsAccuracy.ErrorKind.TOO_FEW_POSES


class InvalidQuantileError(FlextIlsAccuracyError):
    """Quantile outside the open interval (0, 1)."""

    kind = c.IlsAccuracy.ErrorKind.INVALID_QUANTILE


class InvalidLabelsError(FlextIlsAccuracyError):
    """Label list does not match the cluster count."""

    kind = c.IlsAccuracy.ErrorKind.INVALID_LABELS


class InconsistentLabelsError(FlextIlsAccuracyError):
    """Identical feature vectors carry different labels."""

    kind = c.IlsAccuracy.ErrorKind.INCONSISTENT_LABELS


class MissingInputFileError(FlextIlsAccuracyError):
    """Referenced input file does not exist."""

    kind = c.IlsAccuracy.ErrorKind.MISSING_INPUT_FILE


class MissingSchemeError(FlextIlsAccuracyError):
    """Application categorization without a performance class scheme."""

    kind = c.IlsAccuracy.ErrorKind.MISSING_SCHEME


__all__: list[str] = [
    "DegenerateConfigurationError",
    "DuplicateScenarioIdError",
    "EmptyEvaluationSetError",
    "EmptyFileError",
    "EmptyInputError",
    "FlextIlsAccuracyError",
    "GapTooLargeError",
    "InconsistentLabelsError",
    "InfeasibleRangeError",
    "InvalidKError",
    "InvalidLabelsError",
    "InvalidPlanError",
    "InvalidQuantileError",
    "MalformedRowError",
    "MissingFactorError",
    "MissingInputFileError",
    "MissingRepetitionsError",
    "MissingSchemeError",
    "NonMonotoneTimestampError",
    "OutOfRangeError",
    "SchemaError",
    "TooFewCurvesError",
    "TooFewPosesError",
    "UnknownCategoricalValueError",
    "UnknownFactorError",
    "ValueOutOfDomainError",
]
