"""Runtime settings for flext-ils-accuracy tests."""

from __future__ import annotations

from flext_ils_accuracy import FlextIlsAccuracySettings
from flext_tests import FlextTestsSettings


class TestsFlextIlsAccuracySettings(FlextIlsAccuracySettings, FlextTestsSettings):
    """ILS accuracy settings extended with the shared test namespace."""


__all__: list[str] = ["TestsFlextIlsAccuracySettings"]
