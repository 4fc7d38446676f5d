"""Tests for decision tree learning, prediction, relevance and rendering.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

from flext_ils_accuracy import m
from flext_ils_accuracy.dtree import FlextIlsAccuracyDecisionTree
from flext_ils_accuracy.presets import FlextIlsAccuracyPresets
from flext_tests import tm
from tests import c

_Tree = FlextIlsAccuracyDecisionTree


def _xor_schema() -> m.IlsAccuracy.FactorSchema:
    return m.IlsAccuracy.FactorSchema(
        factors=(
            m.IlsAccuracy.CategoricalFactor(name="Alpha", values=("a0", "a1")),
            m.IlsAccuracy.CategoricalFactor(name="Beta", values=("b0", "b1")),
        )
    )


def _record(alpha: str, beta: str, label: str) -> m.IlsAccuracy.LabeledRecord:
    return m.IlsAccuracy.LabeledRecord(
        scenario_id=f"{alpha}{beta}", features={"Alpha": alpha, "Beta": beta}, label=label
    )


_UWB_AISLE_OFF: dict[str, str | float] = {
    "ILS": "UWB",
    "Environment": "aisle",
    "EKF": "off",
    "Dynamics": "yes",
}


class TestsFlextIlsAccuracyDecisionTree:
    """Gini learner and tree queries."""

    def test_xor_needs_both_factors(self) -> None:
        records = [
            _record("a0", "b0", "x"),
            _record("a0", "b1", "y"),
            _record("a1", "b0", "y"),
            _record("a1", "b1", "x"),
        ]
        result = _Tree.learn_tree(records, _xor_schema())
        tm.ok(result)
        tree = result.value
        root = tree.root
        assert isinstance(root, m.IlsAccuracy.TreeSplit)
        tm.that(root.factor, eq="Alpha")
        tm.that(len(_Tree.leaves(tree)), eq=4)
        for record in records:
            tm.that(_Tree.predict(tree, record.features).value.label, eq=record.label)

    def test_pure_records_give_single_leaf(self) -> None:
        records = [_record("a0", "b0", "x"), _record("a1", "b1", "x")]
        result = _Tree.learn_tree(records, _xor_schema())
        tm.ok(result)
        assert isinstance(result.value.root, m.IlsAccuracy.TreeLeaf)
        tm.that(result.value.root.support, eq=2)

    def test_contradicting_labels(self) -> None:
        records = [_record("a0", "b0", "y"), _record("a0", "b0", "x"), _record("a1", "b0", "x")]
        strict = _Tree.learn_tree(records, _xor_schema(), strict=True)
        tm.fail(strict)
        tm.that(strict.error or "", has="InconsistentLabels")
        tm.that(strict.error or "", has="Alpha=a0, Beta=b0")
        lenient = _Tree.learn_tree(records, _xor_schema())
        tm.ok(lenient)
        prediction = _Tree.predict(lenient.value, {"Alpha": "a0", "Beta": "b0"})
        tm.ok(prediction)
        assert prediction.value.impure
        tm.that(prediction.value.label, eq="x")

    def test_learn_rejects_bad_records(self) -> None:
        empty = _Tree.learn_tree([], _xor_schema())
        tm.fail(empty)
        tm.that(empty.error or "", has="EmptyInput")
        unknown = _Tree.learn_tree([_record("a2", "b0", "x")], _xor_schema())
        tm.fail(unknown)
        tm.that(unknown.error or "", has="ValueOutOfDomain")

    def test_predict_failures(self) -> None:
        tree = FlextIlsAccuracyPresets.application_tree()
        unknown_value = _Tree.predict(tree, {**_UWB_AISLE_OFF, "ILS": "GPS"})
        tm.fail(unknown_value)
        tm.that(unknown_value.error or "", has="UnknownCategoricalValue")
        unknown_factor = _Tree.predict(tree, {**_UWB_AISLE_OFF, "Colour": "red"})
        tm.fail(unknown_factor)
        tm.that(unknown_factor.error or "", has="UnknownFactor")
        missing = _Tree.predict(tree, {"ILS": "LiDAR", "FoV": 270.0})
        tm.fail(missing)
        tm.that(missing.error or "", has="MissingFactor")
        tm.that(missing.error or "", has="MapQuality")

    def test_predict_path_and_extrapolation(self) -> None:
        tree = FlextIlsAccuracyPresets.application_tree()
        inside = _Tree.predict(tree, _UWB_AISLE_OFF)
        tm.ok(inside)
        tm.that(inside.value.label, eq="D")
        tm.that(inside.value.path, eq="RLL")
        tm.that(inside.value.extrapolation_flags, eq=())
        outside = _Tree.predict(
            tree,
            {"ILS": "LiDAR", "MapQuality": 0.3, "FoV": 360.0, "Reflector": "on", "Dynamics": "no"},
        )
        tm.ok(outside)
        tm.that(outside.value.label, eq="A")
        tm.that(outside.value.extrapolation_flags, eq=("MapQuality", "FoV"))

    def test_relevance(self) -> None:
        tree = FlextIlsAccuracyPresets.application_tree()
        empty_uwb = _Tree.relevance(tree, "RR")
        tm.that(empty_uwb.label, eq="C")
        tm.that(empty_uwb.relevant, eq=("ILS", "Environment"))
        tm.that(empty_uwb.irrelevant, eq=("EKF", "Dynamics"))
        report = _Tree.relevance_report(tree)
        tm.that(len(report.leaves), eq=c.IlsAccuracy.Tests.APPLICATION_LEAVES)
        usage = {item.factor: item.split_count for item in report.usage}
        tm.that(
            usage,
            eq={
                "ILS": 1,
                "Environment": 1,
                "EKF": 1,
                "MapQuality": 2,
                "FoV": 2,
                "Reflector": 2,
                "Dynamics": 1,
            },
        )

    def test_relevance_of_learned_leaf_uses_observed_factors(self) -> None:
        reference = FlextIlsAccuracyPresets.application_tree()
        records = [
            m.IlsAccuracy.LabeledRecord(
                scenario_id=f"U{index}",
                features={
                    "ILS": "UWB",
                    "Environment": environment,
                    "EKF": ekf,
                    "Dynamics": dynamics,
                },
                label=_Tree.predict(
                    reference,
                    {"ILS": "UWB", "Environment": environment, "EKF": ekf, "Dynamics": dynamics},
                ).value.label,
            )
            for index, (environment, ekf, dynamics) in enumerate(
                (env, ekf, dyn)
                for env in ("empty", "aisle")
                for ekf in ("on", "off")
                for dyn in ("yes", "no")
            )
        ]
        learned = _Tree.learn_tree(records, reference.factor_schema)
        tm.ok(learned)
        paths = {leaf.label: path for path, leaf in _Tree.leaves(learned.value)}
        relevance = _Tree.relevance(learned.value, paths["D"])
        tm.that(relevance.relevant, eq=("Environment", "EKF"))
        tm.that(relevance.irrelevant, eq=("ILS", "Dynamics"))

    def test_paths_to_label(self) -> None:
        tree = FlextIlsAccuracyPresets.application_tree()
        tm.that(
            _Tree.paths_to_label(tree, "D"),
            eq=(("ILS = UWB", "Environment = aisle", "EKF = off"),),
        )
        tm.that(len(_Tree.paths_to_label(tree, "A")), eq=4)
        tm.that(_Tree.paths_to_label(tree, "Z"), eq=())

    def test_suggest_changes(self) -> None:
        tree = FlextIlsAccuracyPresets.application_tree()
        result = _Tree.suggest_changes(tree, _UWB_AISLE_OFF, ["C"])
        tm.ok(result)
        tm.that(
            [(item.factor, item.proposed, item.label) for item in result.value],
            eq=[("Environment", "empty", "C"), ("EKF", "on", "C")],
        )
        none = _Tree.suggest_changes(tree, _UWB_AISLE_OFF, ["A"])
        tm.ok(none)
        tm.that(none.value, eq=())

    def test_render_formats(self) -> None:
        tree = FlextIlsAccuracyPresets.application_tree()
        dot = _Tree.render(tree, c.IlsAccuracy.TreeFormat.DOT)
        tm.that(dot, has="digraph DecisionTree {")
        tm.that(dot.count("shape=box"), eq=c.IlsAccuracy.Tests.APPLICATION_SPLITS)
        tm.that(dot.count("shape=ellipse"), eq=c.IlsAccuracy.Tests.APPLICATION_LEAVES)
        tm.that(dot, has='[label="> 225"]')
        text = _Tree.render(tree, c.IlsAccuracy.TreeFormat.TEXT)
        tm.that(text, has="|--- ILS = LiDAR")
        tm.that(text, has="class: D (n=0)")
        loaded = _Tree.load_tree(_Tree.render(tree, c.IlsAccuracy.TreeFormat.JSON))
        tm.ok(loaded)
        tm.that(loaded.value.model_dump(), eq=tree.model_dump())

    def test_load_tree_rejects_invalid_document(self) -> None:
        result = _Tree.load_tree('{"format": "other"}')
        tm.fail(result)
        tm.that(result.error or "", has="SchemaError")
