# AUTO-GENERATED FILE. Regenerate with: make gen
"""Unit package."""

from __future__ import annotations

from flext_core.lazy import build_lazy_import_map, install_lazy_exports

_LAZY_IMPORTS = build_lazy_import_map({
    ".test_align": ("TestsFlextIlsAccuracyAlign",),
    ".test_categorize": ("TestsFlextIlsAccuracyCategorize",),
    ".test_cli": ("TestsFlextIlsAccuracyCli",),
    ".test_dtree": ("TestsFlextIlsAccuracyDecisionTree",),
    ".test_ingest": ("TestsFlextIlsAccuracyIngest",),
    ".test_metrics": ("TestsFlextIlsAccuracyMetrics",),
    ".test_models": ("TestsFlextIlsAccuracyDomainModels",),
    ".test_presets": ("TestsFlextIlsAccuracyPresets",),
    ".test_settings": ("TestsFlextIlsAccuracyConfig",),
    ".test_synthgen": ("TestsFlextIlsAccuracySynthGen",),
    ".test_utilities": ("TestsFlextIlsAccuracyHelpers",),
    ".test_writer": ("TestsFlextIlsAccuracyWriter",),
    "flext_tests": (
        "c",
        "d",
        "e",
        "h",
        "m",
        "p",
        "r",
        "s",
        "t",
        "td",
        "tf",
        "tk",
        "tm",
        "tv",
        "u",
        "x",
    ),
})


install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, publish_all=False)
