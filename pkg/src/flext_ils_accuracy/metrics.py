"""Horizontal error metrics, empirical CDFs and scenario aggregation.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

import numpy as np

from flext_ils_accuracy import c, m, p, r, t, u
from flext_ils_accuracy.errors import (
    EmptyInputError,
    FlextIlsAccuracyError,
    InvalidQuantileError,
    MissingRepetitionsError,
    TooFewCurvesError,
)

logger = u.fetch_logger(__name__)


class FlextIlsAccuracyMetrics:
    """Accuracy metrics over synchronised estimate/reference samples."""

    @staticmethod
    def horizontal_errors(
        pairs: Sequence[m.IlsAccuracy.SyncedSamplePair],
    ) -> tuple[m.IlsAccuracy.ErrorSample, ...]:
        """Euclidean x-y distance of every pair; height is ignored."""
        return tuple(
            m.IlsAccuracy.ErrorSample(
                t=pair.t,
                horizontal_error=math.hypot(
                    pair.estimate_xy[0] - pair.reference_xy[0],
                    pair.estimate_xy[1] - pair.reference_xy[1],
                ),
            )
            for pair in pairs
        )

    @staticmethod
    def quantile(values: t.IlsAccuracy.FloatArray, q: float) -> float:
        """Linear interpolation between closest ranks, rank = q * (n - 1)."""
        if values.size == 0:
            msg = "cannot take a percentile of no values"
            raise EmptyInputError(msg)
        if not 0.0 <= q <= 1.0:
            msg = f"quantile {q} outside [0, 1]"
            raise InvalidQuantileError(msg)
        ordered = np.sort(values)
        rank = q * (ordered.size - 1)
        lower = math.floor(rank)
        upper = min(lower + 1, ordered.size - 1)
        fraction = rank - lower
        return float(ordered[lower] + fraction * (ordered[upper] - ordered[lower]))

    @staticmethod
    def percentile(values: Sequence[float], q: float) -> p.Result[float]:
        """Percentile of the values at fraction q."""
        try:
            return r[float].ok(
                FlextIlsAccuracyMetrics.quantile(np.asarray(values, dtype=np.float64), q)
            )
        except FlextIlsAccuracyError as exc:
            return r[float].fail(str(exc))

    @staticmethod
    def cdf(values: Sequence[float]) -> p.Result[m.IlsAccuracy.CdfCurve]:
        """Empirical CDF with duplicate errors collapsed into one step."""
        if not values:
            return r[m.IlsAccuracy.CdfCurve].fail(
                str(EmptyInputError("cannot build a CDF of no values"))
            )
        distinct, counts = np.unique(np.asarray(values, dtype=np.float64), return_counts=True)
        fractions = np.cumsum(counts) / len(values)
        fractions[-1] = 1.0
        return r[m.IlsAccuracy.CdfCurve].ok(
            m.IlsAccuracy.CdfCurve(
                points=tuple(
                    (float(error), float(fraction))
                    for error, fraction in zip(distinct, fractions, strict=True)
                )
            )
        )

    @staticmethod
    def cdf_read(curve: m.IlsAccuracy.CdfCurve, fraction: float) -> float:
        """Smallest error whose cumulative fraction reaches the given fraction."""
        for error, step_fraction in curve.points:
            if step_fraction >= fraction:
                return error
        return curve.points[-1][0]

    @staticmethod
    def summarize_experiment(
        scenario_id: str,
        repetition: int,
        samples: Sequence[m.IlsAccuracy.ErrorSample],
        percentile: float = c.IlsAccuracy.DEFAULT_PERCENTILE,
    ) -> p.Result[m.IlsAccuracy.ExperimentMetrics]:
        """Sample count, h95, median, mean and the configured percentile."""
        try:
            errors = np.array([sample.horizontal_error for sample in samples])
            quantile = FlextIlsAccuracyMetrics.quantile
            metrics = m.IlsAccuracy.ExperimentMetrics(
                scenario_id=scenario_id,
                repetition=repetition,
                n_samples=errors.size,
                h95=quantile(errors, c.IlsAccuracy.DEFAULT_PERCENTILE),
                median=quantile(errors, c.IlsAccuracy.MEDIAN_PERCENTILE),
                mean=float(np.mean(errors)),
                percentile=percentile,
                value=quantile(errors, percentile),
            )
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.ExperimentMetrics].fail(str(exc))
        logger.debug(
            "Experiment summarized",
            scenario_id=scenario_id,
            repetition=repetition,
            n_samples=metrics.n_samples,
            h95=metrics.h95,
        )
        return r[m.IlsAccuracy.ExperimentMetrics].ok(metrics)

    @staticmethod
    def repeatability(curves: Sequence[m.IlsAccuracy.CdfCurve]) -> p.Result[float]:
        """Largest supremum distance between any two step CDFs."""
        if len(curves) < c.IlsAccuracy.MIN_REPEATABILITY_CURVES:
            return r[float].fail(
                str(
                    TooFewCurvesError(
                        f"repeatability needs at least "
                        f"{c.IlsAccuracy.MIN_REPEATABILITY_CURVES} curves, got {len(curves)}"
                    )
                )
            )
        worst = 0.0
        for first, second in itertools.combinations(curves, 2):
            jumps = sorted({error for error, _ in (*first.points, *second.points)})
            distance = max(
                abs(first.fraction_at(error) - second.fraction_at(error))
                for error in jumps
            )
            worst = max(worst, distance)
        return r[float].ok(worst)

    @staticmethod
    def aggregate_scenario(
        records: Sequence[m.IlsAccuracy.ExperimentMetrics],
        curves: Sequence[m.IlsAccuracy.CdfCurve] = (),
        expected_repetitions: int | None = None,
    ) -> p.Result[m.IlsAccuracy.ScenarioMetrics]:
        """Mean of the repetitions' percentile values for one scenario.

        Fewer repetitions than expected is logged, not rejected; no
        repetition at all fails with MissingRepetitions.
        """
        if not records:
            return r[m.IlsAccuracy.ScenarioMetrics].fail(
                str(MissingRepetitionsError("scenario has no repetitions"))
            )
        scenario_id = records[0].scenario_id
        if expected_repetitions is not None and len(records) < expected_repetitions:
            logger.warning(
                "Scenario has fewer repetitions than declared",
                scenario_id=scenario_id,
                found=len(records),
                expected=expected_repetitions,
            )
        ordered = sorted(records, key=lambda record: record.repetition)
        values = tuple(record.value for record in ordered)
        repeatability: float | None = None
        if len(curves) >= c.IlsAccuracy.MIN_REPEATABILITY_CURVES:
            repeatability = FlextIlsAccuracyMetrics.repeatability(curves).value
        metrics = m.IlsAccuracy.ScenarioMetrics(
            scenario_id=scenario_id,
            per_repetition_h95=values,
            mean_h95=float(np.mean(values)),
            percentile=ordered[0].percentile,
            repeatability=repeatability,
        )
        logger.info(
            "Scenario aggregated",
            scenario_id=scenario_id,
            repetitions=len(values),
            mean_h95=metrics.mean_h95,
        )
        return r[m.IlsAccuracy.ScenarioMetrics].ok(metrics)


__all__: list[str] = ["FlextIlsAccuracyMetrics"]
