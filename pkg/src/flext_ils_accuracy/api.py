"""FLEXT service orchestrator for ILS accuracy analytics.

Each stage reads its inputs from disk and writes its reports under the run's
output directory, so stages compose through files exactly as they do in
process.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping, Sequence
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from flext_ils_accuracy import c, m, p, r, u
from flext_ils_accuracy.align import FlextIlsAccuracyAlign
from flext_ils_accuracy.categorize import FlextIlsAccuracyCategorize
from flext_ils_accuracy.dtree import FlextIlsAccuracyDecisionTree
from flext_ils_accuracy.errors import (
    InvalidPlanError,
    MissingRepetitionsError,
    MissingSchemeError,
    SchemaError,
)
from flext_ils_accuracy.ingest import FlextIlsAccuracyIngest
from flext_ils_accuracy.metrics import FlextIlsAccuracyMetrics
from flext_ils_accuracy.presets import FlextIlsAccuracyPresets
from flext_ils_accuracy.synthgen import FlextIlsAccuracySynthGen
from flext_ils_accuracy.writer import FlextIlsAccuracyReportWriter

logger = u.fetch_logger(__name__)

type _Row = Mapping[str, str | int | float]


class FlextIlsAccuracyService:
    """Pipeline stages: evaluate, categorize, learn, map quality and simulate."""

    def __init__(self, config: m.IlsAccuracy.RunConfig) -> None:
        """Bind the service to one validated run configuration."""
        self.config = config

    @property
    def output_dir(self) -> Path:
        """Directory receiving every report of the run."""
        return self.config.output_dir

    def _relative(self, path: Path) -> str:
        return path.relative_to(self.output_dir).as_posix()

    def _manifest(self, stage: str) -> p.Result[m.IlsAccuracy.LoadedManifest]:
        if self.config.manifest is None:
            return r[m.IlsAccuracy.LoadedManifest].fail(
                str(SchemaError(f"{stage} needs a scenario manifest"))
            )
        return FlextIlsAccuracyIngest.parse_scenario_manifest(self.config.manifest)

    def _write_rows(
        self, name: str, columns: Sequence[str], rows: Sequence[_Row]
    ) -> p.Result[str]:
        path = self.output_dir / name
        written = FlextIlsAccuracyReportWriter.write_rows(path, columns, rows)
        if not written.success:
            return r[str].fail(written.error or "")
        return r[str].ok(self._relative(path))

    def _write_document(self, name: str, text: str) -> p.Result[str]:
        path = self.output_dir / name
        written = FlextIlsAccuracyReportWriter.write_document(path, text)
        if not written.success:
            return r[str].fail(written.error or "")
        return r[str].ok(self._relative(path))

    def _calibration(
        self, loaded: m.IlsAccuracy.LoadedManifest
    ) -> p.Result[m.IlsAccuracy.RigidTransform | None]:
        """Transform fitted on the manifest's calibration experiment, if any."""
        result_type = m.IlsAccuracy.RigidTransform | None
        alignment = loaded.manifest.alignment
        if alignment is None:
            return r[result_type].ok(None)
        for scenario_id, repetition, experiment in FlextIlsAccuracyIngest.iter_experiments(
            loaded
        ):
            if (scenario_id, repetition) != (
                alignment.calibration_scenario,
                alignment.calibration_repetition,
            ):
                continue
            record = FlextIlsAccuracyIngest.load_experiment(
                loaded, scenario_id, repetition, experiment
            )
            if not record.success:
                return r[result_type].fail(record.error or "")
            pairs = FlextIlsAccuracyIngest.sync_pairs(record.value, self.config.max_gap)
            if not pairs.success:
                return r[result_type].fail(pairs.error or "")
            transform = FlextIlsAccuracyAlign.fit_calibration(
                pairs.value, with_scale=alignment.with_scale
            )
            if not transform.success:
                return r[result_type].fail(transform.error or "")
            logger.info(
                "Calibration fitted",
                scenario_id=scenario_id,
                repetition=repetition,
                yaw_deg=transform.value.yaw_deg,
                scale=transform.value.scale,
            )
            return r[result_type].ok(transform.value)
        return r[result_type].fail(
            str(
                SchemaError(
                    f"alignment: scenario {alignment.calibration_scenario} has no "
                    f"repetition {alignment.calibration_repetition}"
                )
            )
        )

    def evaluate(self) -> p.Result[m.IlsAccuracy.StageReport]:
        """Per-experiment metrics, CDFs and per-scenario aggregates."""
        result_type = m.IlsAccuracy.StageReport
        loaded = self._manifest("evaluate")
        if not loaded.success:
            return r[result_type].fail(loaded.error or "")
        manifest = loaded.value
        outputs: list[str] = []
        transform = self._calibration(manifest)
        if not transform.success:
            return r[result_type].fail(transform.error or "")
        if transform.value is not None:
            written = self._write_document(
                c.IlsAccuracy.ALIGNMENT_REPORT,
                transform.value.model_dump_json(indent=2) + "\n",
            )
            if not written.success:
                return r[result_type].fail(written.error or "")
            outputs.append(written.value)
        per_scenario: defaultdict[str, list[m.IlsAccuracy.ExperimentMetrics]] = (
            defaultdict(list)
        )
        curves: defaultdict[str, list[m.IlsAccuracy.CdfCurve]] = defaultdict(list)
        experiment_rows: list[_Row] = []
        for scenario_id, repetition, experiment in FlextIlsAccuracyIngest.iter_experiments(
            manifest
        ):
            record = FlextIlsAccuracyIngest.load_experiment(
                manifest, scenario_id, repetition, experiment
            )
            if not record.success:
                return r[result_type].fail(record.error or "")
            experiment_record = record.value
            if transform.value is not None:
                experiment_record = experiment_record.model_copy(
                    update={
                        "estimate": FlextIlsAccuracyAlign.apply_transform(
                            transform.value, experiment_record.estimate
                        )
                    }
                )
            pairs = FlextIlsAccuracyIngest.sync_pairs(
                experiment_record, self.config.max_gap
            )
            if not pairs.success:
                return r[result_type].fail(
                    f"{pairs.error} (scenario {scenario_id}, repetition {repetition})"
                )
            samples = FlextIlsAccuracyMetrics.horizontal_errors(pairs.value)
            summary = FlextIlsAccuracyMetrics.summarize_experiment(
                scenario_id, repetition, samples, self.config.percentile
            )
            if not summary.success:
                return r[result_type].fail(summary.error or "")
            curve = FlextIlsAccuracyMetrics.cdf([
                sample.horizontal_error for sample in samples
            ])
            if not curve.success:
                return r[result_type].fail(curve.error or "")
            per_scenario[scenario_id].append(summary.value)
            curves[scenario_id].append(curve.value)
            experiment_rows.append(
                summary.value.model_dump(
                    include={"scenario_id", "repetition", "n_samples", "h95", "median", "mean"}
                )
            )
            cdf_path = (
                self.output_dir / c.IlsAccuracy.CDF_DIR / f"{scenario_id}_r{repetition}.csv"
            )
            points = np.array(curve.value.points, dtype=np.float64)
            written_cdf = FlextIlsAccuracyReportWriter.write_columns(
                cdf_path,
                dict(zip(c.IlsAccuracy.CDF_COLUMNS, points.T, strict=True)),
            )
            if not written_cdf.success:
                return r[result_type].fail(written_cdf.error or "")
            outputs.append(self._relative(cdf_path))
        scenario_rows: list[_Row] = []
        for scenario in manifest.scenarios:
            if not per_scenario[scenario.id]:
                return r[result_type].fail(
                    str(
                        MissingRepetitionsError(
                            f"scenario {scenario.id} has no experiments"
                        )
                    )
                )
            aggregate = FlextIlsAccuracyMetrics.aggregate_scenario(
                per_scenario[scenario.id],
                curves[scenario.id],
                expected_repetitions=manifest.manifest.repetitions,
            )
            if not aggregate.success:
                return r[result_type].fail(aggregate.error or "")
            metrics = aggregate.value
            scenario_rows.append({
                "scenario_id": metrics.scenario_id,
                "percentile": metrics.percentile,
                "n_repetitions": len(metrics.per_repetition_h95),
                "per_repetition": c.IlsAccuracy.PER_REPETITION_SEPARATOR.join(
                    repr(value) for value in metrics.per_repetition_h95
                ),
                "mean_h95": metrics.mean_h95,
                "repeatability": ""
                if metrics.repeatability is None
                else metrics.repeatability,
            })
        for name, columns, rows in (
            (
                c.IlsAccuracy.EXPERIMENTS_REPORT,
                c.IlsAccuracy.EXPERIMENT_REPORT_COLUMNS,
                experiment_rows,
            ),
            (
                c.IlsAccuracy.SCENARIOS_REPORT,
                c.IlsAccuracy.SCENARIO_REPORT_COLUMNS,
                scenario_rows,
            ),
        ):
            written = self._write_rows(name, columns, rows)
            if not written.success:
                return r[result_type].fail(written.error or "")
            outputs.append(written.value)
        logger.info(
            "Evaluation finished",
            experiments=len(experiment_rows),
            scenarios=len(scenario_rows),
            output_dir=str(self.output_dir),
        )
        return r[result_type].ok(
            m.IlsAccuracy.StageReport(
                stage="evaluate",
                outputs=tuple(outputs),
                summary={
                    "experiments": len(experiment_rows),
                    "scenarios": len(scenario_rows),
                },
            )
        )

    def _selected_kinds(self) -> tuple[c.IlsAccuracy.SchemeKind, ...]:
        selection = self.config.scheme
        if selection == c.IlsAccuracy.SchemeSelection.BOTH:
            return (
                c.IlsAccuracy.SchemeKind.APPLICATION,
                c.IlsAccuracy.SchemeKind.TECHNOLOGY,
            )
        return (c.IlsAccuracy.SchemeKind(selection.value),)

    def _application_scheme(self) -> p.Result[m.IlsAccuracy.PerformanceClassScheme]:
        result_type = m.IlsAccuracy.PerformanceClassScheme
        loaded = self._manifest("application categorization")
        if not loaded.success:
            return r[result_type].fail(loaded.error or "")
        scheme = loaded.value.manifest.performance_classes
        if scheme is None:
            return r[result_type].fail(
                str(
                    MissingSchemeError(
                        "application categorization needs performance_classes "
                        "in the manifest"
                    )
                )
            )
        return r[result_type].ok(scheme)

    def categorize(self) -> p.Result[m.IlsAccuracy.StageReport]:
        """Label every scenario with the selected class schemes."""
        result_type = m.IlsAccuracy.StageReport
        scenarios = FlextIlsAccuracyIngest.read_scenario_report(
            self.output_dir / c.IlsAccuracy.SCENARIOS_REPORT
        )
        if not scenarios.success:
            return r[result_type].fail(scenarios.error or "")
        outputs: list[str] = []
        summary: dict[str, str | int | float] = {}
        labels: dict[c.IlsAccuracy.SchemeKind, dict[str, str]] = {}
        for kind in self._selected_kinds():
            if kind == c.IlsAccuracy.SchemeKind.APPLICATION:
                scheme = self._application_scheme()
                if not scheme.success:
                    return r[result_type].fail(scheme.error or "")
                chosen = scheme.value
            else:
                derived = FlextIlsAccuracyCategorize.categorize_technology(
                    scenarios.value, self.config.k_max, self.config.elbow_method
                )
                if not derived.success:
                    return r[result_type].fail(derived.error or "")
                chosen, clustering = derived.value
                written = self._write_document(
                    c.IlsAccuracy.CLUSTERING_REPORT,
                    clustering.model_dump_json(indent=2) + "\n",
                )
                if not written.success:
                    return r[result_type].fail(written.error or "")
                outputs.append(written.value)
                summary["technology_k"] = clustering.k
            written = self._write_document(
                c.IlsAccuracy.SCHEME_REPORT.format(kind=kind.value),
                chosen.model_dump_json(indent=2) + "\n",
            )
            if not written.success:
                return r[result_type].fail(written.error or "")
            outputs.append(written.value)
            labels[kind] = {
                item.scenario_id: chosen.classify(item.mean_h95)
                for item in scenarios.value
            }
            summary[f"{kind.value}_classes"] = len(set(labels[kind].values()))
        rows: list[_Row] = [
            {
                "scenario_id": item.scenario_id,
                "mean_h95": item.mean_h95,
                "class_label": labels[kind][item.scenario_id],
                "scheme_kind": kind.value,
            }
            for kind in labels
            for item in scenarios.value
        ]
        written = self._write_rows(
            c.IlsAccuracy.CATEGORIES_REPORT, c.IlsAccuracy.CATEGORY_REPORT_COLUMNS, rows
        )
        if not written.success:
            return r[result_type].fail(written.error or "")
        outputs.append(written.value)
        if len(labels) > 1:
            side_by_side: list[_Row] = [
                {
                    "scenario_id": item.scenario_id,
                    "mean_h95": item.mean_h95,
                    **{kind.value: labels[kind][item.scenario_id] for kind in labels},
                }
                for item in scenarios.value
            ]
            written = self._write_rows(
                c.IlsAccuracy.CATEGORIES_BY_SCHEME_REPORT,
                c.IlsAccuracy.CATEGORIES_BY_SCHEME_COLUMNS,
                side_by_side,
            )
            if not written.success:
                return r[result_type].fail(written.error or "")
            outputs.append(written.value)
        logger.info(
            "Categorization finished",
            schemes=[kind.value for kind in labels],
            scenarios=len(scenarios.value),
        )
        return r[result_type].ok(
            m.IlsAccuracy.StageReport(
                stage="categorize", outputs=tuple(outputs), summary=summary
            )
        )

    def learn(self) -> p.Result[m.IlsAccuracy.StageReport]:
        """One decision tree and relevance report per labelled scheme."""
        result_type = m.IlsAccuracy.StageReport
        loaded = self._manifest("learn")
        if not loaded.success:
            return r[result_type].fail(loaded.error or "")
        categories = FlextIlsAccuracyIngest.read_category_report(
            self.output_dir / c.IlsAccuracy.CATEGORIES_REPORT
        )
        if not categories.success:
            return r[result_type].fail(categories.error or "")
        assignments = {item.id: item.assignment for item in loaded.value.scenarios}
        schema = loaded.value.manifest.factor_schema
        outputs: list[str] = []
        summary: dict[str, str | int | float] = {}
        for kind in self._selected_kinds():
            rows = [item for item in categories.value if item.scheme_kind == kind]
            if not rows:
                return r[result_type].fail(
                    str(
                        MissingSchemeError(
                            f"{c.IlsAccuracy.CATEGORIES_REPORT} holds no "
                            f"{kind.value} labels; run categorize first"
                        )
                    )
                )
            unknown = [item.scenario_id for item in rows if item.scenario_id not in assignments]
            if unknown:
                return r[result_type].fail(
                    str(
                        SchemaError(
                            f"categories name scenario(s) missing from the manifest: "
                            f"{', '.join(unknown)}"
                        )
                    )
                )
            records = [
                m.IlsAccuracy.LabeledRecord(
                    scenario_id=item.scenario_id,
                    features=assignments[item.scenario_id],
                    label=item.class_label,
                )
                for item in rows
            ]
            tree = FlextIlsAccuracyDecisionTree.learn_tree(
                records, schema, strict=self.config.strict
            )
            if not tree.success:
                return r[result_type].fail(tree.error or "")
            for fmt in c.IlsAccuracy.TreeFormat:
                written = self._write_document(
                    c.IlsAccuracy.TREE_REPORT.format(
                        kind=kind.value, suffix=c.IlsAccuracy.TREE_SUFFIXES[fmt.value]
                    ),
                    FlextIlsAccuracyDecisionTree.render(tree.value, fmt),
                )
                if not written.success:
                    return r[result_type].fail(written.error or "")
                outputs.append(written.value)
            relevance = FlextIlsAccuracyDecisionTree.relevance_report(tree.value)
            written = self._write_document(
                c.IlsAccuracy.RELEVANCE_REPORT.format(kind=kind.value),
                relevance.model_dump_json(indent=2) + "\n",
            )
            if not written.success:
                return r[result_type].fail(written.error or "")
            outputs.append(written.value)
            leaves = FlextIlsAccuracyDecisionTree.leaves(tree.value)
            summary[f"{kind.value}_leaves"] = len(leaves)
            summary[f"{kind.value}_impure_leaves"] = sum(
                1 for _, leaf in leaves if leaf.impure
            )
        logger.info(
            "Learning finished",
            schemes=[kind.value for kind in self._selected_kinds()],
        )
        return r[result_type].ok(
            m.IlsAccuracy.StageReport(stage="learn", outputs=tuple(outputs), summary=summary)
        )

    def map_quality(
        self, map_a: Path | str, map_b: Path | str
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """ICP fitness of map A registered onto map B."""
        result_type = m.IlsAccuracy.StageReport
        source = FlextIlsAccuracyIngest.parse_point_cloud_csv(map_a)
        if not source.success:
            return r[result_type].fail(source.error or "")
        target = FlextIlsAccuracyIngest.parse_point_cloud_csv(map_b)
        if not target.success:
            return r[result_type].fail(target.error or "")
        score = FlextIlsAccuracyAlign.icp_fitness(
            source.value,
            target.value,
            self.config.inlier_radius,
            self.config.icp_max_iters,
            self.config.yaw_step_deg,
        )
        if not score.success:
            return r[result_type].fail(score.error or "")
        written = self._write_document(
            c.IlsAccuracy.MAP_QUALITY_REPORT, score.value.model_dump_json(indent=2) + "\n"
        )
        if not written.success:
            return r[result_type].fail(written.error or "")
        transform = score.value.transform
        return r[result_type].ok(
            m.IlsAccuracy.StageReport(
                stage="map-quality",
                outputs=(written.value,),
                summary={
                    "fitness": score.value.fitness,
                    "inlier_rmse": score.value.inlier_rmse,
                    "yaw_deg": transform.yaw_deg,
                    "tx": transform.translation[0],
                    "ty": transform.translation[1],
                    "iterations": score.value.iterations,
                },
            )
        )

    def _plan(
        self, preset: c.IlsAccuracy.SchemeKind | str | None
    ) -> p.Result[m.IlsAccuracy.SimulationPlan]:
        result_type = m.IlsAccuracy.SimulationPlan
        if self.config.plan is None:
            return FlextIlsAccuracyPresets.simulation_plan(
                preset or c.IlsAccuracy.SchemeKind.APPLICATION
            )
        plan_path = self.config.plan
        try:
            text = plan_path.read_text(encoding=c.IlsAccuracy.ENCODING)
        except (OSError, UnicodeDecodeError) as exc:
            return r[result_type].fail(
                str(InvalidPlanError(f"{plan_path}: unreadable ({exc})"))
            )
        try:
            return r[result_type].ok(m.IlsAccuracy.SimulationPlan.model_validate_json(text))
        except ValidationError as exc:
            problems = "; ".join(
                f"{u.IlsAccuracy.Errors.location(error['loc'])}: {error['msg']}"
                for error in exc.errors()
            )
            return r[result_type].fail(str(InvalidPlanError(f"{plan_path}: {problems}")))

    def simulate(
        self,
        preset: c.IlsAccuracy.SchemeKind | str | None = None,
        overrides: Mapping[str, int | float] | None = None,
    ) -> p.Result[m.IlsAccuracy.StageReport]:
        """Synthetic dataset planted from the plan file or a preset."""
        result_type = m.IlsAccuracy.StageReport
        plan = self._plan(preset)
        if not plan.success:
            return r[result_type].fail(plan.error or "")
        chosen = plan.value
        if overrides:
            try:
                chosen = m.IlsAccuracy.SimulationPlan.model_validate({
                    **chosen.model_dump(),
                    **overrides,
                })
            except ValidationError as exc:
                problems = "; ".join(
                    f"{u.IlsAccuracy.Errors.location(error['loc'])}: {error['msg']}"
                    for error in exc.errors()
                )
                return r[result_type].fail(str(InvalidPlanError(problems)))
        manifest_path = FlextIlsAccuracySynthGen.simulate(
            chosen, self.output_dir, self.config.seed
        )
        if not manifest_path.success:
            return r[result_type].fail(manifest_path.error or "")
        written = FlextIlsAccuracyIngest.parse_scenario_manifest(manifest_path.value)
        if not written.success:
            return r[result_type].fail(written.error or "")
        scenarios = len(written.value.scenarios)
        return r[result_type].ok(
            m.IlsAccuracy.StageReport(
                stage="simulate",
                outputs=(
                    self._relative(manifest_path.value),
                    c.IlsAccuracy.PLANTED_REPORT,
                ),
                summary={
                    "seed": self.config.seed,
                    "scenarios": scenarios,
                    "experiments": scenarios * chosen.repetitions,
                },
            )
        )

    def report(self) -> p.Result[m.IlsAccuracy.StageReport]:
        """Evaluate, categorize and learn in one run."""
        result_type = m.IlsAccuracy.StageReport
        combined = m.IlsAccuracy.StageReport(stage="report")
        for stage in (self.evaluate, self.categorize, self.learn):
            outcome = stage()
            if not outcome.success:
                return r[result_type].fail(outcome.error or "")
            combined = combined.merged(outcome.value)
        return r[result_type].ok(combined)


ils_accuracy = FlextIlsAccuracyService

__all__: list[str] = ["FlextIlsAccuracyService", "ils_accuracy"]
