# AUTO-GENERATED FILE. Regenerate with: make gen
"""Tests package."""

from __future__ import annotations

from typing import TYPE_CHECKING

from flext_core.lazy import (
    build_lazy_import_map,
    install_lazy_exports,
    merge_lazy_imports,
)

if TYPE_CHECKING:
    from flext_tests import (
        d as d,
        e as e,
        h as h,
        r as r,
        td as td,
        tf as tf,
        tk as tk,
        tm as tm,
        tv as tv,
        x as x,
    )
    from tests.constants import (
        TestsFlextIlsAccuracyConstants as TestsFlextIlsAccuracyConstants,
        c as c,
    )
    from tests.models import (
        TestsFlextIlsAccuracyModels as TestsFlextIlsAccuracyModels,
        m as m,
    )
    from tests.protocols import (
        TestsFlextIlsAccuracyProtocols as TestsFlextIlsAccuracyProtocols,
        p,
    )
    from tests.settings import (
        TestsFlextIlsAccuracySettings as TestsFlextIlsAccuracySettings,
    )
    from tests.typings import (
        TestsFlextIlsAccuracyTypes as TestsFlextIlsAccuracyTypes,
        t as t,
    )
    from tests.unit.test_align import (
        TestsFlextIlsAccuracyAlign as TestsFlextIlsAccuracyAlign,
    )
    from tests.unit.test_categorize import (
        TestsFlextIlsAccuracyCategorize as TestsFlextIlsAccuracyCategorize,
    )
    from tests.unit.test_cli import (
        TestsFlextIlsAccuracyCli as TestsFlextIlsAccuracyCli,
    )
    from tests.unit.test_dtree import (
        TestsFlextIlsAccuracyDecisionTree as TestsFlextIlsAccuracyDecisionTree,
    )
    from tests.unit.test_ingest import (
        TestsFlextIlsAccuracyIngest as TestsFlextIlsAccuracyIngest,
    )
    from tests.unit.test_metrics import (
        TestsFlextIlsAccuracyMetrics as TestsFlextIlsAccuracyMetrics,
    )
    from tests.unit.test_models import (
        TestsFlextIlsAccuracyDomainModels as TestsFlextIlsAccuracyDomainModels,
    )
    from tests.unit.test_presets import (
        TestsFlextIlsAccuracyPresets as TestsFlextIlsAccuracyPresets,
    )
    from tests.unit.test_settings import (
        TestsFlextIlsAccuracyConfig as TestsFlextIlsAccuracyConfig,
    )
    from tests.unit.test_synthgen import (
        TestsFlextIlsAccuracySynthGen as TestsFlextIlsAccuracySynthGen,
    )
    from tests.unit.test_utilities import (
        TestsFlextIlsAccuracyHelpers as TestsFlextIlsAccuracyHelpers,
    )
    from tests.unit.test_writer import (
        TestsFlextIlsAccuracyWriter as TestsFlextIlsAccuracyWriter,
    )
    from tests.utilities import (
        TestsFlextIlsAccuracyUtilities as TestsFlextIlsAccuracyUtilities,
        u,
    )
_LAZY_IMPORTS = merge_lazy_imports(
    (".unit",),
    build_lazy_import_map({
        ".conftest": ("conftest",),
        ".constants": ("TestsFlextIlsAccuracyConstants", "c"),
        ".models": ("TestsFlextIlsAccuracyModels", "m"),
        ".protocols": ("TestsFlextIlsAccuracyProtocols", "p"),
        ".settings": ("TestsFlextIlsAccuracySettings",),
        ".typings": ("TestsFlextIlsAccuracyTypes", "t"),
        ".unit": ("unit",),
        ".unit.test_align": ("TestsFlextIlsAccuracyAlign",),
        ".unit.test_categorize": ("TestsFlextIlsAccuracyCategorize",),
        ".unit.test_cli": ("TestsFlextIlsAccuracyCli",),
        ".unit.test_dtree": ("TestsFlextIlsAccuracyDecisionTree",),
        ".unit.test_ingest": ("TestsFlextIlsAccuracyIngest",),
        ".unit.test_metrics": ("TestsFlextIlsAccuracyMetrics",),
        ".unit.test_models": ("TestsFlextIlsAccuracyDomainModels",),
        ".unit.test_presets": ("TestsFlextIlsAccuracyPresets",),
        ".unit.test_settings": ("TestsFlextIlsAccuracyConfig",),
        ".unit.test_synthgen": ("TestsFlextIlsAccuracySynthGen",),
        ".unit.test_utilities": ("TestsFlextIlsAccuracyHelpers",),
        ".unit.test_writer": ("TestsFlextIlsAccuracyWriter",),
        ".utilities": ("TestsFlextIlsAccuracyUtilities", "u"),
        "flext_tests": ("d", "e", "h", "r", "td", "tf", "tk", "tm", "tv", "x"),
    }),
    exclude_names=(
        "cleanup_submodule_namespace",
        "install_lazy_exports",
        "lazy_getattr",
        "logger",
        "merge_lazy_imports",
        "output",
        "output_reporting",
        "pytest_addoption",
        "pytest_collect_file",
        "pytest_collection_modifyitems",
        "pytest_configure",
        "pytest_runtest_setup",
        "pytest_runtest_teardown",
        "pytest_sessionfinish",
        "pytest_sessionstart",
        "pytest_terminal_summary",
        "pytest_warning_recorded",
    ),
    module_name=__name__,
)


install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, publish_all=False)
