# @generated AUTO-GENERATED FILE. Regenerate with: make gen
"""Flext ILS Accuracy package."""

from __future__ import annotations

from typing import TYPE_CHECKING

from flext_core.lazy import build_lazy_import_map, install_lazy_exports

from .__version__ import __author__ as __author__
from .__version__ import __author_email__ as __author_email__
from .__version__ import __description__ as __description__
from .__version__ import __license__ as __license__
from .__version__ import __title__ as __title__
from .__version__ import __url__ as __url__
from .__version__ import __version__ as __version__
from .__version__ import __version_info__ as __version_info__

if TYPE_CHECKING:
    from flext_core import e as e
    from flext_core import r as r

    from ._settings import FlextIlsAccuracySettings as FlextIlsAccuracySettings
    from ._settings import settings as settings
    from .align import FlextIlsAccuracyAlign as FlextIlsAccuracyAlign
    from .api import FlextIlsAccuracyService as FlextIlsAccuracyService
    from .api import ils_accuracy as ils_accuracy
    from .categorize import FlextIlsAccuracyCategorize as FlextIlsAccuracyCategorize
    from .cli import FlextIlsAccuracyCli as FlextIlsAccuracyCli
    from .cli import main as main
    from .constants import FlextIlsAccuracyConstants as FlextIlsAccuracyConstants

    c: type[FlextIlsAccuracyConstants]
    from .dtree import FlextIlsAccuracyDecisionTree as FlextIlsAccuracyDecisionTree
    from .ingest import FlextIlsAccuracyIngest as FlextIlsAccuracyIngest
    from .metrics import FlextIlsAccuracyMetrics as FlextIlsAccuracyMetrics
    from .models import FlextIlsAccuracyModels as FlextIlsAccuracyModels

    m: type[FlextIlsAccuracyModels]
    from .presets import FlextIlsAccuracyPresets as FlextIlsAccuracyPresets
    from .protocols import FlextIlsAccuracyProtocols as FlextIlsAccuracyProtocols

    p: type[FlextIlsAccuracyProtocols]
    from .synthgen import FlextIlsAccuracySynthGen as FlextIlsAccuracySynthGen
    from .typings import FlextIlsAccuracyTypes as FlextIlsAccuracyTypes

    t: type[FlextIlsAccuracyTypes]
    from .utilities import FlextIlsAccuracyUtilities as FlextIlsAccuracyUtilities

    u: type[FlextIlsAccuracyUtilities]
    from .writer import FlextIlsAccuracyReportWriter as FlextIlsAccuracyReportWriter

_LAZY_MODULES: dict[str, tuple[str, ...]] = {
    "._settings": ("FlextIlsAccuracySettings", "settings"),
    ".align": ("FlextIlsAccuracyAlign",),
    ".api": ("FlextIlsAccuracyService", "ils_accuracy"),
    ".categorize": ("FlextIlsAccuracyCategorize",),
    ".cli": ("FlextIlsAccuracyCli", "main"),
    ".constants": ("FlextIlsAccuracyConstants", "c"),
    ".dtree": ("FlextIlsAccuracyDecisionTree",),
    ".ingest": ("FlextIlsAccuracyIngest",),
    ".metrics": ("FlextIlsAccuracyMetrics",),
    ".models": ("FlextIlsAccuracyModels", "m"),
    ".presets": ("FlextIlsAccuracyPresets",),
    ".protocols": ("FlextIlsAccuracyProtocols", "p"),
    ".synthgen": ("FlextIlsAccuracySynthGen",),
    ".typings": ("FlextIlsAccuracyTypes", "t"),
    ".utilities": ("FlextIlsAccuracyUtilities", "u"),
    ".writer": ("FlextIlsAccuracyReportWriter",),
    "flext_core": ("e", "r"),
}


_LAZY_ALIAS_GROUPS: dict[str, tuple[tuple[str, str], ...]] = {}


_LAZY_IMPORTS = build_lazy_import_map(
    _LAZY_MODULES, alias_groups=_LAZY_ALIAS_GROUPS, sort_keys=False
)

_PUBLIC_EXPORTS: tuple[str, ...] = (
    "FlextIlsAccuracyAlign",
    "FlextIlsAccuracyCategorize",
    "FlextIlsAccuracyCli",
    "FlextIlsAccuracyConstants",
    "FlextIlsAccuracyDecisionTree",
    "FlextIlsAccuracyIngest",
    "FlextIlsAccuracyMetrics",
    "FlextIlsAccuracyModels",
    "FlextIlsAccuracyPresets",
    "FlextIlsAccuracyProtocols",
    "FlextIlsAccuracyReportWriter",
    "FlextIlsAccuracyService",
    "FlextIlsAccuracySettings",
    "FlextIlsAccuracySynthGen",
    "FlextIlsAccuracyTypes",
    "FlextIlsAccuracyUtilities",
    "__author__",
    "__author_email__",
    "__description__",
    "__license__",
    "__title__",
    "__url__",
    "__version__",
    "__version_info__",
    "c",
    "e",
    "ils_accuracy",
    "m",
    "main",
    "p",
    "r",
    "settings",
    "t",
    "u",
)

__all__: tuple[str, ...] = tuple(_PUBLIC_EXPORTS)

install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, public_exports=__all__)
