"""Performance classes: fixed application thresholds and clustered technology classes.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from flext_ils_accuracy import c, m, p, r, t, u
from flext_ils_accuracy.errors import (
    FlextIlsAccuracyError,
    InvalidKError,
    InvalidLabelsError,
)

logger = u.fetch_logger(__name__)


class FlextIlsAccuracyCategorize:
    """Scenario categorization by h95 value."""

    @staticmethod
    def classify_application(
        metrics: m.IlsAccuracy.ScenarioMetrics,
        scheme: m.IlsAccuracy.PerformanceClassScheme,
    ) -> m.IlsAccuracy.ScenarioMetrics:
        """Scenario metrics labelled with the class containing ``mean_h95``."""
        return metrics.model_copy(update={"class_label": scheme.classify(metrics.mean_h95)})

    @staticmethod
    def _segment_cost(
        prefix: t.IlsAccuracy.FloatArray,
        prefix_sq: t.IlsAccuracy.FloatArray,
        begin: int,
        end: int,
    ) -> float:
        """SSE of ordered[begin:end] from cumulative sums."""
        size = end - begin
        total = prefix[end] - prefix[begin]
        return max(float(prefix_sq[end] - prefix_sq[begin] - total * total / size), 0.0)

    @staticmethod
    def kmeans_1d_exact(
        values: Sequence[float],
        k: int,
        ids: Sequence[str] | None = None,
    ) -> p.Result[m.IlsAccuracy.ClusteringResult]:
        """SSE-optimal partition of the values into k contiguous groups.

        Dynamic programming over the sorted values with cumulative-sum
        segment costs; ties keep the earliest split so the result is
        deterministic. Equal values share a cluster whenever k does not
        exceed the number of distinct values. Assignments are keyed by
        ``ids`` (default: the value's index as a string).
        """

        def _run_kmeans() -> p.Result[m.IlsAccuracy.ClusteringResult]:
            count = len(values)
            if not 1 <= k <= count:
                msg = f"k={k} must satisfy 1 <= k <= {count}"
                raise InvalidKError(msg)
            keys = list(ids) if ids is not None else [str(i) for i in range(count)]
            if len(keys) != count:
                msg = f"{len(keys)} ids given for {count} values"
                raise InvalidKError(msg)
            order = np.argsort(np.asarray(values, dtype=np.float64), kind="stable")
            ordered = np.asarray(values, dtype=np.float64)[order]
            prefix = np.concatenate(([0.0], np.cumsum(ordered)))
            prefix_sq = np.concatenate(([0.0], np.cumsum(ordered**2)))
            segment_cost = FlextIlsAccuracyCategorize._segment_cost
            distinct = int(np.unique(ordered).size)
            # a split before position i is allowed unless it separates equal values
            splittable = [True] * (count + 1)
            if k <= distinct:
                for position in range(1, count):
                    splittable[position] = ordered[position - 1] < ordered[position]
            # cost[j][i]: best SSE of the first i values in j clusters
            cost = np.full((k + 1, count + 1), math.inf)
            start = np.zeros((k + 1, count + 1), dtype=np.int64)
            cost[0][0] = 0.0
            for clusters in range(1, k + 1):
                for end in range(clusters, count + 1):
                    if not splittable[end]:
                        continue
                    for begin in range(clusters - 1, end):
                        if cost[clusters - 1][begin] == math.inf:
                            continue
                        candidate = cost[clusters - 1][begin] + segment_cost(
                            prefix, prefix_sq, begin, end
                        )
                        if candidate < cost[clusters][end]:
                            cost[clusters][end] = candidate
                            start[clusters][end] = begin
            bounds: list[tuple[int, int]] = []
            end = count
            for clusters in range(k, 0, -1):
                begin = int(start[clusters][end])
                bounds.append((begin, end))
                end = begin
            bounds.reverse()
            assignments: dict[str, int] = {}
            clusters_out: list[tuple[float, ...]] = []
            centers: list[float] = []
            sse = 0.0
            for index, (begin, end_index) in enumerate(bounds):
                segment = ordered[begin:end_index]
                clusters_out.append(tuple(float(value) for value in segment))
                centers.append(float(segment.mean()))
                sse += float(np.sum((segment - segment.mean()) ** 2))
                for position in order[begin:end_index]:
                    assignments[keys[int(position)]] = index
            return r[m.IlsAccuracy.ClusteringResult].ok(
                m.IlsAccuracy.ClusteringResult(
                    k=k,
                    assignments=assignments,
                    centers=tuple(centers),
                    sse=sse,
                    clusters=tuple(clusters_out),
                )
            )

        try:
            return _run_kmeans()
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.ClusteringResult].fail(str(exc))

    @staticmethod
    def sse_curve(values: Sequence[float], k_max: int) -> p.Result[tuple[float, ...]]:
        """SSE(k) for k = 1..k_max."""
        curve: list[float] = []
        for k in range(1, k_max + 1):
            result = FlextIlsAccuracyCategorize.kmeans_1d_exact(values, k)
            if not result.success:
                return r[tuple[float, ...]].fail(result.error or "")
            curve.append(result.value.sse)
        return r[tuple[float, ...]].ok(tuple(curve))

    @staticmethod
    def _elbow_score(
        sse: Sequence[float], k: int, method: c.IlsAccuracy.ElbowMethod
    ) -> float:
        before, here, after = sse[k - 2], sse[k - 1], sse[k]
        second_difference = before - 2.0 * here + after
        if method == c.IlsAccuracy.ElbowMethod.RAW:
            return second_difference
        if here == 0.0:
            return math.inf if before > 0.0 else 0.0
        return second_difference / here

    @staticmethod
    def elbow_from_sse(
        sse: Sequence[float],
        method: c.IlsAccuracy.ElbowMethod = c.IlsAccuracy.ElbowMethod.RELATIVE,
    ) -> p.Result[int]:
        """k in [2, len(sse) - 1] with the largest elbow score; ties to smaller k."""
        if len(sse) < c.IlsAccuracy.MIN_K_MAX:
            return r[int].fail(
                str(
                    InvalidKError(
                        f"elbow needs SSE for k up to at least {c.IlsAccuracy.MIN_K_MAX}, got {len(sse)}"
                    )
                )
            )
        best_k = 2
        best_score = -math.inf
        for k in range(2, len(sse)):
            score = FlextIlsAccuracyCategorize._elbow_score(sse, k, method)
            if score > best_score:
                best_k, best_score = k, score
        return r[int].ok(best_k)

    @staticmethod
    def elbow_select_k(
        values: Sequence[float],
        k_max: int = c.IlsAccuracy.DEFAULT_K_MAX,
        method: c.IlsAccuracy.ElbowMethod = c.IlsAccuracy.ElbowMethod.RELATIVE,
    ) -> p.Result[int]:
        """Cluster count at the elbow of the SSE curve.

        ``k_max`` is clamped to ``len(values) - 1`` with a warning when the
        data is too small for it. The result never exceeds the number of
        distinct values.
        """
        if k_max < c.IlsAccuracy.MIN_K_MAX:
            return r[int].fail(
                str(InvalidKError(f"k_max={k_max} must be at least {c.IlsAccuracy.MIN_K_MAX}"))
            )
        effective = k_max
        if len(values) <= k_max:
            effective = len(values) - 1
            if effective < c.IlsAccuracy.MIN_K_MAX:
                return r[int].fail(
                    str(
                        InvalidKError(
                            f"{len(values)} values are too few for an elbow search"
                        )
                    )
                )
            logger.warning("k_max clamped to the data size", k_max=k_max, effective=effective)
        curve = FlextIlsAccuracyCategorize.sse_curve(values, effective)
        if not curve.success:
            return r[int].fail(curve.error or "")
        elbow = FlextIlsAccuracyCategorize.elbow_from_sse(curve.value, method)
        if not elbow.success:
            return elbow
        distinct = len(set(values))
        if elbow.value > distinct:
            logger.warning(
                "Elbow capped at the number of distinct values",
                elbow=elbow.value,
                distinct=distinct,
            )
            return r[int].ok(distinct)
        return elbow

    @staticmethod
    def scheme_from_clusters(
        result: m.IlsAccuracy.ClusteringResult,
        labels: Sequence[str],
        kind: c.IlsAccuracy.SchemeKind = c.IlsAccuracy.SchemeKind.TECHNOLOGY,
    ) -> p.Result[m.IlsAccuracy.PerformanceClassScheme]:
        """Class i spans [min of cluster i, min of cluster i+1); the last is open-ended.

        Clusters whose lower bounds coincide collapse into one class under
        the label of the last of them, the class their shared minimum
        falls into.
        """
        if len(labels) != result.k:
            return r[m.IlsAccuracy.PerformanceClassScheme].fail(
                str(InvalidLabelsError(f"{len(labels)} labels given for {result.k} clusters"))
            )
        bounds: list[tuple[str, float]] = []
        for index, label in enumerate(labels):
            lower = 0.0 if index == 0 else min(result.clusters[index], default=0.0)
            if bounds and lower <= bounds[-1][1]:
                bounds[-1] = (label, bounds[-1][1])
                continue
            bounds.append((label, lower))
        if len(bounds) < result.k:
            logger.warning(
                "Clusters with coinciding minima merged",
                k=result.k,
                classes=len(bounds),
            )
        classes = [
            m.IlsAccuracy.PerformanceClass(
                label=label,
                lower=lower,
                upper=bounds[index + 1][1] if index + 1 < len(bounds) else None,
            )
            for index, (label, lower) in enumerate(bounds)
        ]
        try:
            scheme = m.IlsAccuracy.PerformanceClassScheme(kind=kind, classes=tuple(classes))
        except ValueError as exc:
            return r[m.IlsAccuracy.PerformanceClassScheme].fail(
                str(InvalidLabelsError(f"clusters do not form a valid scheme: {exc}"))
            )
        return r[m.IlsAccuracy.PerformanceClassScheme].ok(scheme)

    @staticmethod
    def categorize_technology(
        scenarios: Sequence[m.IlsAccuracy.ScenarioMetrics],
        k_max: int = c.IlsAccuracy.DEFAULT_K_MAX,
        method: c.IlsAccuracy.ElbowMethod = c.IlsAccuracy.ElbowMethod.RELATIVE,
    ) -> p.Result[tuple[m.IlsAccuracy.PerformanceClassScheme, m.IlsAccuracy.ClusteringResult]]:
        """Elbow, then clustering, then a roman-numeral scheme over the scenario values."""
        result_type = tuple[m.IlsAccuracy.PerformanceClassScheme, m.IlsAccuracy.ClusteringResult]
        values = [item.mean_h95 for item in scenarios]
        chosen = FlextIlsAccuracyCategorize.elbow_select_k(values, k_max, method)
        if not chosen.success:
            return r[result_type].fail(chosen.error or "")
        k = chosen.value
        if k > len(c.IlsAccuracy.TECHNOLOGY_LABELS):
            return r[result_type].fail(
                str(InvalidKError(f"no labels for {k} technology classes"))
            )
        clustering = FlextIlsAccuracyCategorize.kmeans_1d_exact(
            values, k, ids=[item.scenario_id for item in scenarios]
        )
        if not clustering.success:
            return r[result_type].fail(clustering.error or "")
        scheme = FlextIlsAccuracyCategorize.scheme_from_clusters(
            clustering.value, c.IlsAccuracy.TECHNOLOGY_LABELS[:k]
        )
        if not scheme.success:
            return r[result_type].fail(scheme.error or "")
        logger.info(
            "Technology classes derived",
            k=k,
            sse=clustering.value.sse,
            boundaries=[item.lower for item in scheme.value.classes[1:]],
        )
        return r[result_type].ok((scheme.value, clustering.value))


__all__: list[str] = ["FlextIlsAccuracyCategorize"]
