"""Decision tree learning over scenario factors, prediction, relevance and rendering.

Trees are grown to purity with the Gini criterion. Candidate scores are
compared as exact fractions so ties resolve by schema factor order, then by
the smaller threshold or lexicographically smaller category value.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from fractions import Fraction

from pydantic import ValidationError

from flext_ils_accuracy import c, m, p, r, t, u
from flext_ils_accuracy.errors import (
    EmptyInputError,
    FlextIlsAccuracyError,
    InconsistentLabelsError,
    MissingFactorError,
    SchemaError,
    UnknownCategoricalValueError,
    UnknownFactorError,
    ValueOutOfDomainError,
)

logger = u.fetch_logger(__name__)

type _Node = m.IlsAccuracy.TreeLeaf | m.IlsAccuracy.TreeSplit
type _Test = m.IlsAccuracy.CategoricalTest | m.IlsAccuracy.ContinuousTest


class FlextIlsAccuracyDecisionTree:
    """Pure-leaf binary classification trees over a factor schema."""

    class _Candidate:
        """Best split found so far at a node."""

        __slots__ = ("factor", "left", "right", "right_values", "score", "test")

        def __init__(
            self,
            factor: str,
            test: _Test,
            right_values: tuple[str, ...],
            score: Fraction,
            left: list[m.IlsAccuracy.LabeledRecord],
            right: list[m.IlsAccuracy.LabeledRecord],
        ) -> None:
            self.factor = factor
            self.test = test
            self.right_values = right_values
            self.score = score
            self.left = left
            self.right = right

    @staticmethod
    def _feature_key(
        schema: m.IlsAccuracy.FactorSchema, features: t.IlsAccuracy.Assignment
    ) -> tuple[tuple[str, str], ...]:
        return tuple(
            (name, u.IlsAccuracy.Numbers.feature(features[name]))
            for name in schema.names
            if name in features
        )

    @staticmethod
    def _purity_sum(records: Sequence[m.IlsAccuracy.LabeledRecord]) -> Fraction:
        """Sum of squared class counts over the node size."""
        counts = Counter(record.label for record in records)
        return Fraction(sum(count * count for count in counts.values()), len(records))

    @staticmethod
    def _gini(records: Sequence[m.IlsAccuracy.LabeledRecord]) -> Fraction:
        size = len(records)
        counts = Counter(record.label for record in records)
        return 1 - sum(Fraction(count * count, size * size) for count in counts.values())

    @staticmethod
    def _candidate_tests(
        factor: m.IlsAccuracy.CategoricalFactor | m.IlsAccuracy.ContinuousFactor,
        records: Sequence[m.IlsAccuracy.LabeledRecord],
    ) -> Iterator[tuple[_Test, tuple[str, ...]]]:
        values = [record.features[factor.name] for record in records]
        if isinstance(factor, m.IlsAccuracy.CategoricalFactor):
            distinct = sorted({str(value) for value in values})
            for value in distinct:
                yield (
                    m.IlsAccuracy.CategoricalTest(value=value),
                    tuple(other for other in distinct if other != value),
                )
            return
        levels = sorted({float(value) for value in values})
        for lower, upper in zip(levels, levels[1:], strict=False):
            yield m.IlsAccuracy.ContinuousTest(threshold=(lower + upper) / 2.0), ()

    @staticmethod
    def _leaf(
        schema: m.IlsAccuracy.FactorSchema,
        records: Sequence[m.IlsAccuracy.LabeledRecord],
        *,
        impure: bool,
    ) -> m.IlsAccuracy.TreeLeaf:
        counts = Counter(record.label for record in records)
        label = min(counts, key=lambda item: (-counts[item], item))
        key_of = FlextIlsAccuracyDecisionTree._feature_key
        observed: dict[tuple[tuple[str, str], ...], dict[str, str | float]] = {}
        for record in records:
            ordered = {
                name: record.features[name]
                for name in schema.names
                if name in record.features
            }
            observed.setdefault(key_of(schema, ordered), ordered)
        return m.IlsAccuracy.TreeLeaf(
            label=label,
            support=len(records),
            impure=impure,
            class_counts=dict(sorted(counts.items())),
            observed=tuple(observed[key] for key in sorted(observed)),
        )

    @staticmethod
    def _grow(
        schema: m.IlsAccuracy.FactorSchema,
        records: list[m.IlsAccuracy.LabeledRecord],
    ) -> _Node:
        tree_ns = FlextIlsAccuracyDecisionTree
        if len({record.label for record in records}) == 1:
            return tree_ns._leaf(schema, records, impure=False)
        best: FlextIlsAccuracyDecisionTree._Candidate | None = None
        for factor in schema.factors:
            if not all(factor.name in record.features for record in records):
                continue
            for test, right_values in tree_ns._candidate_tests(factor, records):
                left = [record for record in records if test.goes_left(record.features[factor.name])]
                right = [record for record in records if not test.goes_left(record.features[factor.name])]
                if not left or not right:
                    continue
                score = tree_ns._purity_sum(left) + tree_ns._purity_sum(right)
                if best is None or score > best.score:
                    best = tree_ns._Candidate(factor.name, test, right_values, score, left, right)
        if best is None:
            leaf = tree_ns._leaf(schema, records, impure=True)
            logger.warning(
                "Impure leaf: identical factors carry different labels",
                label=leaf.label,
                class_counts=leaf.class_counts,
            )
            return leaf
        size = len(records)
        children_gini = Fraction(len(best.left), size) * tree_ns._gini(best.left) + Fraction(
            len(best.right), size
        ) * tree_ns._gini(best.right)
        return m.IlsAccuracy.TreeSplit(
            factor=best.factor,
            test=best.test,
            right_values=best.right_values,
            gini_decrease=float(tree_ns._gini(records) - children_gini),
            left=tree_ns._grow(schema, best.left),
            right=tree_ns._grow(schema, best.right),
        )

    @staticmethod
    def _check_records(
        schema: m.IlsAccuracy.FactorSchema,
        records: Sequence[m.IlsAccuracy.LabeledRecord],
        *,
        strict: bool,
    ) -> None:
        if not records:
            msg = "cannot learn a tree from no records"
            raise EmptyInputError(msg)
        messages: list[str] = []
        for index, record in enumerate(records):
            scenario = m.IlsAccuracy.Scenario(
                id=record.scenario_id or f"record {index}", assignment=record.features
            )
            messages.extend(
                str(item)
                for item in u.IlsAccuracy.Scenarios.assignment_violations(schema, scenario)
            )
        if messages:
            raise SchemaError("; ".join(messages))
        if not strict:
            return
        labels: dict[tuple[tuple[str, str], ...], set[str]] = {}
        for record in records:
            key = FlextIlsAccuracyDecisionTree._feature_key(schema, record.features)
            labels.setdefault(key, set()).add(record.label)
        conflicts = [
            ", ".join(f"{name}={value}" for name, value in key)
            for key, found in labels.items()
            if len(found) > 1
        ]
        if conflicts:
            msg = f"identical factors with different labels: {' | '.join(conflicts)}"
            raise InconsistentLabelsError(msg)

    @staticmethod
    def learn_tree(
        records: Sequence[m.IlsAccuracy.LabeledRecord],
        schema: m.IlsAccuracy.FactorSchema,
        *,
        strict: bool = False,
    ) -> p.Result[m.IlsAccuracy.DecisionTree]:
        """Grow a tree until every leaf is pure or no split separates its records.

        With ``strict`` set, identical factor combinations carrying different
        labels fail with InconsistentLabels instead of producing impure leaves.
        """
        try:
            FlextIlsAccuracyDecisionTree._check_records(schema, records, strict=strict)
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.DecisionTree].fail(str(exc))
        root = FlextIlsAccuracyDecisionTree._grow(schema, list(records))
        observed_ranges: dict[str, tuple[float, float]] = {}
        for factor in schema.factors:
            if isinstance(factor, m.IlsAccuracy.ContinuousFactor):
                seen = [
                    float(record.features[factor.name])
                    for record in records
                    if factor.name in record.features
                ]
                if seen:
                    observed_ranges[factor.name] = (min(seen), max(seen))
        tree = m.IlsAccuracy.DecisionTree(
            factor_schema=schema, root=root, observed_ranges=observed_ranges
        )
        logger.info(
            "Decision tree learned",
            records=len(records),
            leaves=len(FlextIlsAccuracyDecisionTree.leaves(tree)),
        )
        return r[m.IlsAccuracy.DecisionTree].ok(tree)

    @staticmethod
    def _check_features(
        schema: m.IlsAccuracy.FactorSchema, features: t.IlsAccuracy.Assignment
    ) -> None:
        for name, value in features.items():
            factor = schema.factor(name)
            if factor is None:
                msg = f"factor {name} is not declared by the tree's schema"
                raise UnknownFactorError(msg)
            if isinstance(factor, m.IlsAccuracy.CategoricalFactor):
                if not factor.contains(value):
                    msg = f"{name}={value!r} is not one of {', '.join(factor.values)}"
                    raise UnknownCategoricalValueError(msg)
            elif isinstance(value, str):
                msg = f"{name} needs a number, got {value!r}"
                raise ValueOutOfDomainError(msg)

    @staticmethod
    def predict(
        tree: m.IlsAccuracy.DecisionTree, features: t.IlsAccuracy.Assignment
    ) -> p.Result[m.IlsAccuracy.Prediction]:
        """Route the features to a leaf; flag continuous values outside training ranges."""

        def _run_predict() -> p.Result[m.IlsAccuracy.Prediction]:
            FlextIlsAccuracyDecisionTree._check_features(tree.factor_schema, features)
            node: _Node = tree.root
            path = ""
            while isinstance(node, m.IlsAccuracy.TreeSplit):
                if node.factor not in features:
                    msg = f"factor {node.factor} is tested on path {path or 'root'} but not given"
                    raise MissingFactorError(msg)
                if node.test.goes_left(features[node.factor]):
                    node, path = node.left, path + c.IlsAccuracy.LEFT
                else:
                    node, path = node.right, path + c.IlsAccuracy.RIGHT
            flags = tuple(
                name
                for name in tree.factor_schema.names
                if name in tree.observed_ranges
                and name in features
                and not (
                    tree.observed_ranges[name][0]
                    <= float(features[name])
                    <= tree.observed_ranges[name][1]
                )
            )
            if flags:
                logger.warning(
                    "Prediction extrapolates beyond training ranges",
                    factors=list(flags),
                    label=node.label,
                )
            return r[m.IlsAccuracy.Prediction].ok(
                m.IlsAccuracy.Prediction(
                    label=node.label,
                    path=path,
                    impure=node.impure,
                    extrapolation_flags=flags,
                )
            )

        try:
            return _run_predict()
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.Prediction].fail(str(exc))

    @staticmethod
    def _walk(node: _Node, path: str) -> Iterator[tuple[str, _Node]]:
        yield path, node
        if isinstance(node, m.IlsAccuracy.TreeSplit):
            yield from FlextIlsAccuracyDecisionTree._walk(node.left, path + c.IlsAccuracy.LEFT)
            yield from FlextIlsAccuracyDecisionTree._walk(node.right, path + c.IlsAccuracy.RIGHT)

    @staticmethod
    def leaves(tree: m.IlsAccuracy.DecisionTree) -> tuple[tuple[str, m.IlsAccuracy.TreeLeaf], ...]:
        """Every leaf with its L/R path, left subtree first."""
        return tuple(
            (path, node)
            for path, node in FlextIlsAccuracyDecisionTree._walk(tree.root, "")
            if isinstance(node, m.IlsAccuracy.TreeLeaf)
        )

    @staticmethod
    def splits(tree: m.IlsAccuracy.DecisionTree) -> tuple[tuple[str, m.IlsAccuracy.TreeSplit], ...]:
        """Every internal node with its L/R path, in preorder."""
        return tuple(
            (path, node)
            for path, node in FlextIlsAccuracyDecisionTree._walk(tree.root, "")
            if isinstance(node, m.IlsAccuracy.TreeSplit)
        )

    @staticmethod
    def _path_nodes(
        tree: m.IlsAccuracy.DecisionTree, path: str
    ) -> tuple[list[tuple[m.IlsAccuracy.TreeSplit, bool]], _Node]:
        """Splits along the path with the branch taken, and the node reached."""
        node: _Node = tree.root
        steps: list[tuple[m.IlsAccuracy.TreeSplit, bool]] = []
        for step in path:
            if not isinstance(node, m.IlsAccuracy.TreeSplit) or step not in {
                c.IlsAccuracy.LEFT,
                c.IlsAccuracy.RIGHT,
            }:
                msg = f"path {path!r} does not lead through the tree"
                raise ValueError(msg)
            went_left = step == c.IlsAccuracy.LEFT
            steps.append((node, went_left))
            node = node.left if went_left else node.right
        return steps, node

    @staticmethod
    def condition(split: m.IlsAccuracy.TreeSplit, *, left: bool) -> str:
        """Human form of one branch, e.g. ``FoV > 225`` or ``ILS = UWB``."""
        test = split.test
        if isinstance(test, m.IlsAccuracy.ContinuousTest):
            operator = "≤" if left else ">"
            return f"{split.factor} {operator} {u.IlsAccuracy.Numbers.short(test.threshold)}"
        if left:
            return f"{split.factor} = {test.value}"
        if split.right_values:
            return f"{split.factor} = {', '.join(split.right_values)}"
        return f"{split.factor} ≠ {test.value}"

    @staticmethod
    def relevance(tree: m.IlsAccuracy.DecisionTree, path: str) -> m.IlsAccuracy.Relevance:
        """Factors tested on the way to a leaf and the applicable ones that are not.

        Applicable factors come from the leaf's training records; for trees
        without records they follow the join value fixed on the path.
        """
        schema = tree.factor_schema
        steps, node = FlextIlsAccuracyDecisionTree._path_nodes(tree, path)
        if not isinstance(node, m.IlsAccuracy.TreeLeaf):
            msg = f"path {path!r} ends at an internal node"
            raise ValueError(msg)
        relevant: list[str] = []
        join_value: str | None = None
        for split, went_left in steps:
            if split.factor not in relevant:
                relevant.append(split.factor)
            if split.factor == schema.join_factor and isinstance(
                split.test, m.IlsAccuracy.CategoricalTest
            ):
                if went_left:
                    join_value = split.test.value
                elif len(split.right_values) == 1:
                    join_value = split.right_values[0]
        if node.observed:
            present = {name for record in node.observed for name in record}
            applicable = tuple(name for name in schema.names if name in present)
        elif join_value is not None:
            applicable = schema.applicable({schema.join_factor or "": join_value})
        else:
            applicable = schema.names
        return m.IlsAccuracy.Relevance(
            path=path,
            label=node.label,
            support=node.support,
            relevant=tuple(relevant),
            irrelevant=tuple(name for name in applicable if name not in relevant),
        )

    @staticmethod
    def relevance_report(tree: m.IlsAccuracy.DecisionTree) -> m.IlsAccuracy.RelevanceReport:
        """Relevance of every leaf plus how often each factor is used."""
        tree_ns = FlextIlsAccuracyDecisionTree
        leaves = tuple(tree_ns.relevance(tree, path) for path, _ in tree_ns.leaves(tree))
        split_counts = Counter(split.factor for _, split in tree_ns.splits(tree))
        usage = tuple(
            m.IlsAccuracy.FactorUsage(
                factor=name,
                split_count=split_counts[name],
                leaf_paths=sum(1 for leaf in leaves if name in leaf.relevant),
            )
            for name in tree.factor_schema.names
        )
        return m.IlsAccuracy.RelevanceReport(leaves=leaves, usage=usage)

    @staticmethod
    def paths_to_label(
        tree: m.IlsAccuracy.DecisionTree, label: str
    ) -> tuple[tuple[str, ...], ...]:
        """Branch conditions of every path ending in the given class."""
        tree_ns = FlextIlsAccuracyDecisionTree
        found: list[tuple[str, ...]] = []
        for path, leaf in tree_ns.leaves(tree):
            if leaf.label != label:
                continue
            steps, _ = tree_ns._path_nodes(tree, path)
            found.append(tuple(tree_ns.condition(split, left=left) for split, left in steps))
        return tuple(found)

    @staticmethod
    def _candidate_values(
        tree: m.IlsAccuracy.DecisionTree,
        factor: m.IlsAccuracy.CategoricalFactor | m.IlsAccuracy.ContinuousFactor,
    ) -> tuple[str | float, ...]:
        if isinstance(factor, m.IlsAccuracy.CategoricalFactor):
            return factor.values
        seen = sorted({
            float(record[factor.name])
            for _, leaf in FlextIlsAccuracyDecisionTree.leaves(tree)
            for record in leaf.observed
            if factor.name in record
        })
        return tuple(seen) if seen else factor.levels

    @staticmethod
    def suggest_changes(
        tree: m.IlsAccuracy.DecisionTree,
        features: t.IlsAccuracy.Assignment,
        targets: Sequence[str],
    ) -> p.Result[tuple[m.IlsAccuracy.SuggestedChange, ...]]:
        """Single-factor changes over known values that move the features into a target class."""
        tree_ns = FlextIlsAccuracyDecisionTree
        current = tree_ns.predict(tree, features)
        if not current.success:
            return r[tuple[m.IlsAccuracy.SuggestedChange, ...]].fail(current.error or "")
        changes: list[m.IlsAccuracy.SuggestedChange] = []
        for factor in tree.factor_schema.factors:
            if factor.name not in features:
                continue
            for value in tree_ns._candidate_values(tree, factor):
                if value == features[factor.name]:
                    continue
                changed = tree_ns.predict(tree, {**features, factor.name: value})
                if (
                    changed.success
                    and changed.value.label in targets
                    and changed.value.label != current.value.label
                ):
                    changes.append(
                        m.IlsAccuracy.SuggestedChange(
                            factor=factor.name,
                            current=features[factor.name],
                            proposed=value,
                            label=changed.value.label,
                        )
                    )
        return r[tuple[m.IlsAccuracy.SuggestedChange, ...]].ok(tuple(changes))

    @staticmethod
    def same_structure(
        first: m.IlsAccuracy.DecisionTree,
        second: m.IlsAccuracy.DecisionTree,
        threshold_tolerance: float = c.IlsAccuracy.SAME_THRESHOLD_TOL,
    ) -> bool:
        """Whether both trees test the same factors in the same places with the same leaf labels."""

        def _same(a: _Node, b: _Node) -> bool:
            if isinstance(a, m.IlsAccuracy.TreeLeaf) or isinstance(b, m.IlsAccuracy.TreeLeaf):
                return (
                    isinstance(a, m.IlsAccuracy.TreeLeaf)
                    and isinstance(b, m.IlsAccuracy.TreeLeaf)
                    and a.label == b.label
                )
            if a.factor != b.factor:
                return False
            if isinstance(a.test, m.IlsAccuracy.ContinuousTest):
                if not isinstance(b.test, m.IlsAccuracy.ContinuousTest):
                    return False
                if abs(a.test.threshold - b.test.threshold) > threshold_tolerance:
                    return False
            elif (
                not isinstance(b.test, m.IlsAccuracy.CategoricalTest)
                or a.test.value != b.test.value
            ):
                return False
            return _same(a.left, b.left) and _same(a.right, b.right)

        return _same(first.root, second.root)

    @staticmethod
    def _dot_escape(text: str) -> str:
        return text.replace("\\", "\\\\").replace('"', '\\"')

    @staticmethod
    def _render_dot(tree: m.IlsAccuracy.DecisionTree) -> str:
        tree_ns = FlextIlsAccuracyDecisionTree
        escape = tree_ns._dot_escape
        ids = {
            path: f"n{index}"
            for index, (path, _) in enumerate(tree_ns._walk(tree.root, ""))
        }
        lines = ["digraph DecisionTree {", '  node [fontname="Helvetica"];']
        edges: list[str] = []
        for path, node in tree_ns._walk(tree.root, ""):
            if isinstance(node, m.IlsAccuracy.TreeLeaf):
                label = f"{escape(node.label)}\\nn={node.support}"
                if node.impure:
                    label += "\\n(impure)"
                lines.append(f'  {ids[path]} [label="{label}", shape=ellipse];')
                continue
            lines.append(f'  {ids[path]} [label="{escape(node.factor)}", shape=box];')
            for suffix, left in ((c.IlsAccuracy.LEFT, True), (c.IlsAccuracy.RIGHT, False)):
                condition = tree_ns.condition(node, left=left)
                edge_label = condition.removeprefix(node.factor).strip()
                edges.append(
                    f'  {ids[path]} -> {ids[path + suffix]} [label="{escape(edge_label)}"];'
                )
        lines.extend(edges)
        lines.append("}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def _render_text(tree: m.IlsAccuracy.DecisionTree) -> str:
        tree_ns = FlextIlsAccuracyDecisionTree
        lines: list[str] = []

        def _leaf_line(leaf: m.IlsAccuracy.TreeLeaf) -> str:
            text = f"class: {leaf.label} (n={leaf.support})"
            return f"{text} impure" if leaf.impure else text

        def _emit(node: _Node, depth: int) -> None:
            indent = "|   " * depth + "|--- "
            if isinstance(node, m.IlsAccuracy.TreeLeaf):
                lines.append(indent + _leaf_line(node))
                return
            lines.append(indent + tree_ns.condition(node, left=True))
            _emit(node.left, depth + 1)
            lines.append(indent + tree_ns.condition(node, left=False))
            _emit(node.right, depth + 1)

        _emit(tree.root, 0)
        return "\n".join(lines) + "\n"

    @staticmethod
    def render(
        tree: m.IlsAccuracy.DecisionTree,
        fmt: c.IlsAccuracy.TreeFormat = c.IlsAccuracy.TreeFormat.DOT,
    ) -> str:
        """Tree as Graphviz DOT, an indented outline, or JSON."""
        match fmt:
            case c.IlsAccuracy.TreeFormat.DOT:
                return FlextIlsAccuracyDecisionTree._render_dot(tree)
            case c.IlsAccuracy.TreeFormat.TEXT:
                return FlextIlsAccuracyDecisionTree._render_text(tree)
            case _:
                return tree.model_dump_json(indent=2) + "\n"

    @staticmethod
    def load_tree(text: str) -> p.Result[m.IlsAccuracy.DecisionTree]:
        """Tree from its JSON rendering."""
        try:
            return r[m.IlsAccuracy.DecisionTree].ok(
                m.IlsAccuracy.DecisionTree.model_validate_json(text)
            )
        except ValidationError as exc:
            problems = "; ".join(
                f"{u.IlsAccuracy.Errors.location(error['loc'])}: {error['msg']}"
                for error in exc.errors()
            )
            return r[m.IlsAccuracy.DecisionTree].fail(
                str(SchemaError(f"invalid decision tree document: {problems}"))
            )


__all__: list[str] = ["FlextIlsAccuracyDecisionTree"]
