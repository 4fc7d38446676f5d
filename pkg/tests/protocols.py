"""Test protocol definitions for flext-ils-accuracy.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from flext_ils_accuracy import FlextIlsAccuracyProtocols
from flext_tests import FlextTestsProtocols


class TestsFlextIlsAccuracyProtocols(FlextTestsProtocols, FlextIlsAccuracyProtocols):
    """Test protocols combined with ``p.IlsAccuracy.*``."""


p = TestsFlextIlsAccuracyProtocols

__all__: list[str] = ["TestsFlextIlsAccuracyProtocols", "p"]
