"""Tests for error metrics, CDFs and scenario aggregation.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from flext_ils_accuracy import m
from flext_ils_accuracy.metrics import FlextIlsAccuracyMetrics
from flext_tests import tm


def _pair(
    estimate: tuple[float, float], reference: tuple[float, float], t: float = 0.0
) -> m.IlsAccuracy.SyncedSamplePair:
    return m.IlsAccuracy.SyncedSamplePair(
        t=t, estimate_xy=estimate, reference_xy=reference
    )


def _experiment(scenario_id: str, repetition: int, value: float) -> m.IlsAccuracy.ExperimentMetrics:
    return m.IlsAccuracy.ExperimentMetrics(
        scenario_id=scenario_id,
        repetition=repetition,
        n_samples=10,
        h95=value,
        median=value,
        mean=value,
        percentile=0.95,
        value=value,
    )


class TestsFlextIlsAccuracyMetrics:
    """Horizontal errors, percentiles, CDFs, repeatability and aggregation."""

    def test_horizontal_errors(self) -> None:
        pairs = [
            _pair((1.0, 2.0), (4.0, 6.0)),
            _pair((3.0, 3.0), (3.0, 3.0)),
            m.IlsAccuracy.SyncedSamplePair(
                t=0.0,
                estimate_xy=(0.0, 0.0),
                reference_xy=(0.0, 0.0),
                estimate_z=10.0,
            ),
        ]
        errors = FlextIlsAccuracyMetrics.horizontal_errors(pairs)
        tm.that([sample.horizontal_error for sample in errors], eq=[5.0, 0.0, 0.0])

    def test_horizontal_errors_ignore_common_planar_motion(
        self, rng: np.random.Generator
    ) -> None:
        estimates = rng.uniform(-5.0, 5.0, (20, 2))
        references = rng.uniform(-5.0, 5.0, (20, 2))
        transform = m.IlsAccuracy.RigidTransform.from_yaw(0.7, (3.0, -1.5))
        before = FlextIlsAccuracyMetrics.horizontal_errors([
            _pair(tuple(e), tuple(ref)) for e, ref in zip(estimates, references, strict=True)
        ])
        moved_estimates = transform.apply_points(estimates)
        moved_references = transform.apply_points(references)
        after = FlextIlsAccuracyMetrics.horizontal_errors([
            _pair(tuple(e), tuple(ref))
            for e, ref in zip(moved_estimates, moved_references, strict=True)
        ])
        for first, second in zip(before, after, strict=True):
            assert second.horizontal_error == pytest.approx(first.horizontal_error, abs=1e-12)

    @pytest.mark.parametrize(
        ("values", "q", "expected"),
        [
            ((0.0, 10.0), 0.5, 5.0),
            ((1.0, 2.0, 3.0, 4.0, 5.0), 0.95, 4.8),
            ((5.0, 1.0, 4.0, 2.0, 3.0), 0.95, 4.8),
            ((0.7,), 0.3, 0.7),
            ((0.7,), 1.0, 0.7),
            ((2.0, 9.0), 0.0, 2.0),
        ],
    )
    def test_percentile_examples(
        self, values: tuple[float, ...], q: float, expected: float
    ) -> None:
        result = FlextIlsAccuracyMetrics.percentile(values, q)
        tm.ok(result)
        assert result.value == pytest.approx(expected)

    def test_percentile_is_monotone_and_bounded(self, rng: np.random.Generator) -> None:
        values = rng.exponential(0.1, 50).tolist()
        results = [
            FlextIlsAccuracyMetrics.percentile(values, q).value
            for q in np.linspace(0.0, 1.0, 21)
        ]
        assert all(a <= b for a, b in itertools.pairwise(results))
        tm.that(results[0], eq=min(values))
        tm.that(results[-1], eq=max(values))

    def test_percentile_errors(self) -> None:
        empty = FlextIlsAccuracyMetrics.percentile([], 0.5)
        tm.fail(empty)
        tm.that(empty.error or "", has="EmptyInput")
        invalid = FlextIlsAccuracyMetrics.percentile([1.0], 1.5)
        tm.fail(invalid)
        tm.that(invalid.error or "", has="InvalidQuantile")

    def test_cdf_examples(self) -> None:
        pair = FlextIlsAccuracyMetrics.cdf([2.0, 1.0])
        tm.ok(pair)
        tm.that(pair.value.points, eq=((1.0, 0.5), (2.0, 1.0)))
        constant = FlextIlsAccuracyMetrics.cdf([3.0, 3.0, 3.0])
        tm.ok(constant)
        tm.that(constant.value.points, eq=((3.0, 1.0),))
        thirds = FlextIlsAccuracyMetrics.cdf([0.1, 0.2, 0.3])
        tm.ok(thirds)
        tm.that(thirds.value.points[-1][1], eq=1.0)
        empty = FlextIlsAccuracyMetrics.cdf([])
        tm.fail(empty)
        tm.that(empty.error or "", has="EmptyInput")

    def test_cdf_read_off_agrees_with_percentile(self, rng: np.random.Generator) -> None:
        values = rng.rayleigh(0.02, 100)
        ordered = np.sort(values)
        curve = FlextIlsAccuracyMetrics.cdf(values.tolist()).value
        read = FlextIlsAccuracyMetrics.cdf_read(curve, 0.95)
        quantile = FlextIlsAccuracyMetrics.percentile(values.tolist(), 0.95).value
        tm.that(read, eq=float(ordered[94]))
        assert ordered[94] <= quantile <= ordered[95]

    def test_repeatability(self, rng: np.random.Generator) -> None:
        cdf = FlextIlsAccuracyMetrics.cdf
        low = cdf([1.0, 2.0]).value
        high = cdf([3.0, 4.0]).value
        tm.that(FlextIlsAccuracyMetrics.repeatability([low, low]).value, eq=0.0)
        tm.that(FlextIlsAccuracyMetrics.repeatability([low, high]).value, eq=1.0)
        same_source = [cdf(rng.rayleigh(0.02, 1000).tolist()).value for _ in range(3)]
        distance = FlextIlsAccuracyMetrics.repeatability(same_source)
        tm.ok(distance)
        assert distance.value < 0.1
        single = FlextIlsAccuracyMetrics.repeatability([low])
        tm.fail(single)
        tm.that(single.error or "", has="TooFewCurves")

    def test_summarize_experiment(self) -> None:
        samples = [
            m.IlsAccuracy.ErrorSample(t=float(i), horizontal_error=float(i))
            for i in range(1, 6)
        ]
        result = FlextIlsAccuracyMetrics.summarize_experiment("S1", 2, samples, 0.5)
        tm.ok(result)
        tm.that(result.value.n_samples, eq=5)
        assert result.value.h95 == pytest.approx(4.8)
        tm.that(result.value.median, eq=3.0)
        tm.that(result.value.mean, eq=3.0)
        tm.that(result.value.value, eq=3.0)
        empty = FlextIlsAccuracyMetrics.summarize_experiment("S1", 1, [])
        tm.fail(empty)

    def test_aggregate_scenario(self) -> None:
        records = [_experiment("S1", rep, value) for rep, value in ((3, 0.06), (1, 0.04), (2, 0.05))]
        result = FlextIlsAccuracyMetrics.aggregate_scenario(records, expected_repetitions=3)
        tm.ok(result)
        tm.that(result.value.per_repetition_h95, eq=(0.04, 0.05, 0.06))
        assert result.value.mean_h95 == pytest.approx(0.05)
        assert result.value.repeatability is None
        single = FlextIlsAccuracyMetrics.aggregate_scenario(
            [_experiment("S2", 1, 0.2)], expected_repetitions=3
        )
        tm.ok(single)
        tm.that(single.value.mean_h95, eq=0.2)
        missing = FlextIlsAccuracyMetrics.aggregate_scenario([])
        tm.fail(missing)
        tm.that(missing.error or "", has="MissingRepetitions")

    def test_aggregate_reports_repeatability_of_curves(self) -> None:
        curves = [
            FlextIlsAccuracyMetrics.cdf([0.1, 0.2]).value,
            FlextIlsAccuracyMetrics.cdf([0.1, 0.3]).value,
        ]
        result = FlextIlsAccuracyMetrics.aggregate_scenario(
            [_experiment("S1", 1, 0.2), _experiment("S1", 2, 0.3)], curves
        )
        tm.ok(result)
        tm.that(result.value.repeatability, eq=0.5)
        assert math.isclose(result.value.mean_h95, 0.25)
