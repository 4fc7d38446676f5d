"""FLEXT ILS Accuracy Constants - defaults, report layouts and class tables.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import math
from enum import StrEnum, unique
from typing import Final

from flext_core import c


class FlextIlsAccuracyConstants(c):
    """Indoor localization accuracy constants following flext-core patterns."""

    class IlsAccuracy:
        """ILS accuracy domain constants namespace."""

        ENCODING: Final[str] = "utf-8"
        LINE_TERMINATOR: Final[str] = "\n"

        DEFAULT_PERCENTILE: Final[float] = 0.95
        MEDIAN_PERCENTILE: Final[float] = 0.5
        DEFAULT_MAX_GAP_S: Final[float] = 0.1
        DEFAULT_REPETITIONS: Final[int] = 3
        DEFAULT_EVALUATION_POSES: Final[int] = 33
        DEFAULT_SPEED_MPS: Final[float] = 0.3
        DEFAULT_RATE_HZ: Final[float] = 10.0
        DEFAULT_INLIER_RADIUS_M: Final[float] = 0.1
        DEFAULT_ICP_MAX_ITERS: Final[int] = 50
        DEFAULT_YAW_STEP_DEG: Final[float] = 1.0
        DEFAULT_K_MAX: Final[int] = 8
        MIN_K_MAX: Final[int] = 3
        DEFAULT_SEED: Final[int] = 0
        DEFAULT_OUTPUT_DIR: Final[str] = "./ils-accuracy-output"

        QUATERNION_NORM_TOL: Final[float] = 1e-9
        ROTATION_TOL: Final[float] = 1e-9
        MEAN_TOL: Final[float] = 1e-12
        RANK_TOL: Final[float] = 1e-10
        SAME_THRESHOLD_TOL: Final[float] = 0.01
        MIN_REGISTRATION_POINTS: Final[int] = 3
        MIN_INTERPOLATION_POSES: Final[int] = 2
        MIN_REPEATABILITY_CURVES: Final[int] = 2

        # h95 of a 2-D isotropic Gaussian error is sigma * sqrt(-2 ln(0.05))
        RAYLEIGH_H95_FACTOR: Final[float] = math.sqrt(-2.0 * math.log(0.05))

        OVERFLOW_LABEL: Final[str] = "unclassified"
        JOIN_FACTOR: Final[str] = "ILS"
        TREE_FORMAT: Final[str] = "flext-ils-accuracy/decision-tree"
        TREE_FORMAT_VERSION: Final[int] = 1
        LEFT: Final[str] = "L"
        RIGHT: Final[str] = "R"

        TECHNOLOGY_LABELS: Final[tuple[str, ...]] = (
            "I",
            "II",
            "III",
            "IV",
            "V",
            "VI",
            "VII",
            "VIII",
            "IX",
            "X",
        )

        TRAJECTORY_COLUMNS: Final[tuple[str, ...]] = ("t", "x", "y", "z")
        QUATERNION_COLUMNS: Final[tuple[str, ...]] = ("qw", "qx", "qy", "qz")
        POINT_CLOUD_COLUMNS: Final[tuple[str, ...]] = ("x", "y")
        EXPERIMENT_REPORT_COLUMNS: Final[tuple[str, ...]] = (
            "scenario_id",
            "repetition",
            "n_samples",
            "h95",
            "median",
            "mean",
        )
        SCENARIO_REPORT_COLUMNS: Final[tuple[str, ...]] = (
            "scenario_id",
            "percentile",
            "n_repetitions",
            "per_repetition",
            "mean_h95",
            "repeatability",
        )
        CATEGORY_REPORT_COLUMNS: Final[tuple[str, ...]] = (
            "scenario_id",
            "mean_h95",
            "class_label",
            "scheme_kind",
        )
        CATEGORIES_BY_SCHEME_COLUMNS: Final[tuple[str, ...]] = (
            "scenario_id",
            "mean_h95",
            "application",
            "technology",
        )
        CDF_COLUMNS: Final[tuple[str, ...]] = ("error", "fraction")
        PER_REPETITION_SEPARATOR: Final[str] = ";"

        EXPERIMENTS_REPORT: Final[str] = "experiments.csv"
        SCENARIOS_REPORT: Final[str] = "scenarios.csv"
        CATEGORIES_REPORT: Final[str] = "categories.csv"
        CATEGORIES_BY_SCHEME_REPORT: Final[str] = "categories_by_scheme.csv"
        CDF_DIR: Final[str] = "cdf"
        ALIGNMENT_REPORT: Final[str] = "alignment.json"
        CLUSTERING_REPORT: Final[str] = "clustering.json"
        MAP_QUALITY_REPORT: Final[str] = "map_quality.json"
        SIMULATED_MANIFEST: Final[str] = "manifest.json"
        PLANTED_REPORT: Final[str] = "planted.json"
        TRAJECTORY_DIR: Final[str] = "trajectories"
        SCHEME_REPORT: Final[str] = "scheme_{kind}.json"
        TREE_REPORT: Final[str] = "tree_{kind}.{suffix}"
        RELEVANCE_REPORT: Final[str] = "relevance_{kind}.json"
        TREE_SUFFIXES: Final[dict[str, str]] = {"json": "json", "dot": "dot", "text": "txt"}

        # (label, lower, upper) rows of the published application classes.
        APPLICATION_CLASSES: Final[tuple[tuple[str, float, float], ...]] = (
            ("A", 0.0, 0.05),
            ("B", 0.05, 0.1),
            ("C", 0.1, 0.5),
            ("D", 0.5, 1.0),
        )
        # Last row is open-ended; row IV reads 0.394 <= h95 < 0.493.
        TECHNOLOGY_CLASSES: Final[tuple[tuple[str, float, float | None], ...]] = (
            ("I", 0.0, 0.056),
            ("II", 0.056, 0.209),
            ("III", 0.209, 0.394),
            ("IV", 0.394, 0.493),
            ("V", 0.493, None),
        )
        # Map quality per (map recording environment, evaluation environment).
        MAP_QUALITY_TABLE: Final[tuple[tuple[str, str, float], ...]] = (
            ("empty", "empty", 0.99),
            ("empty", "aisle", 0.81),
            ("aisle", "empty", 0.84),
            ("aisle", "aisle", 0.54),
        )
        FOV_LEVELS_DEG: Final[tuple[float, ...]] = (180.0, 270.0)

        # Two rectangles sharing their centre edge; starts and ends at the centre.
        DEFAULT_PATH: Final[tuple[tuple[float, float], ...]] = (
            (0.0, 0.0),
            (0.0, 1.5),
            (3.0, 1.5),
            (3.0, -1.5),
            (0.0, -1.5),
            (-3.0, -1.5),
            (-3.0, 1.5),
            (0.0, 1.5),
            (0.0, 0.0),
        )
        # Planted h95 targets fall in this band of their class interval.
        TARGET_BAND: Final[tuple[float, float]] = (0.45, 0.55)
        OPEN_CLASS_CAP_FACTOR: Final[float] = 1.25
        DEFAULT_OPEN_CLASS_CAP_M: Final[float] = 1.0

        @unique
        class FactorKind(StrEnum):
            """Experimental factor kinds."""

            CATEGORICAL = "categorical"
            CONTINUOUS = "continuous"

        @unique
        class SchemeKind(StrEnum):
            """Origin of a performance class scheme."""

            APPLICATION = "application"
            TECHNOLOGY = "technology"

        @unique
        class SchemeSelection(StrEnum):
            """Which schemes a categorize run produces."""

            APPLICATION = "application"
            TECHNOLOGY = "technology"
            BOTH = "both"

        @unique
        class TreeFormat(StrEnum):
            """Decision tree rendering formats."""

            DOT = "dot"
            TEXT = "text"
            JSON = "json"

        @unique
        class ElbowMethod(StrEnum):
            """Elbow score variants over the SSE curve."""

            RELATIVE = "relative"
            RAW = "raw"

        @unique
        class ErrorKind(StrEnum):
            """Error kinds carried by every raised domain error."""

            UNKNOWN_FACTOR = "UnknownFactor"
            MISSING_FACTOR = "MissingFactor"
            VALUE_OUT_OF_DOMAIN = "ValueOutOfDomain"
            DUPLICATE_SCENARIO_ID = "DuplicateScenarioId"
            MALFORMED_ROW = "MalformedRow"
            NON_MONOTONE_TIMESTAMP = "NonMonotoneTimestamp"
            EMPTY_FILE = "EmptyFile"
            SCHEMA_ERROR = "SchemaError"
            OUT_OF_RANGE = "OutOfRange"
            GAP_TOO_LARGE = "GapTooLarge"
            EMPTY_EVALUATION_SET = "EmptyEvaluationSet"
            DEGENERATE_CONFIGURATION = "DegenerateConfiguration"
            EMPTY_INPUT = "EmptyInput"
            MISSING_REPETITIONS = "MissingRepetitions"
            TOO_FEW_CURVES = "TooFewCurves"
            INVALID_K = "InvalidK"
            UNKNOWN_CATEGORICAL_VALUE = "UnknownCategoricalValue"
            INVALID_PLAN = "InvalidPlan"
            INFEASIBLE_RANGE = "InfeasibleRange"
            TOO_FEW_POSES = "TooFewPoses"
            INVALID_QUANTILE = "InvalidQuantile"
            INVALID_LABELS = "InvalidLabels"
            INCONSISTENT_LABELS = "InconsistentLabels"
            MISSING_INPUT_FILE = "MissingInputFile"
            MISSING_SCHEME = "MissingScheme"

        class ExitCode:
            """Process exit codes of the command line."""

            OK: Final[int] = 0
            USAGE: Final[int] = 2
            DATA: Final[int] = 3

        CONFIG_ERROR_KINDS: Final[frozenset[str]] = frozenset({
            ErrorKind.UNKNOWN_FACTOR,
            ErrorKind.MISSING_FACTOR,
            ErrorKind.VALUE_OUT_OF_DOMAIN,
            ErrorKind.DUPLICATE_SCENARIO_ID,
            ErrorKind.SCHEMA_ERROR,
            ErrorKind.INVALID_PLAN,
            ErrorKind.INFEASIBLE_RANGE,
            ErrorKind.INVALID_K,
            ErrorKind.INVALID_QUANTILE,
            ErrorKind.INVALID_LABELS,
            ErrorKind.INCONSISTENT_LABELS,
            ErrorKind.MISSING_SCHEME,
        })


c = FlextIlsAccuracyConstants

__all__: list[str] = ["FlextIlsAccuracyConstants", "c"]
