"""ILS accuracy protocols for the FLEXT ecosystem.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Protocol, runtime_checkable

from flext_core import p


class FlextIlsAccuracyProtocols(p):
    """ILS accuracy protocols facade composed over flext-core protocols."""

    class IlsAccuracy:
        """ILS accuracy protocol namespace."""

        @runtime_checkable
        class ReportSink(Protocol):
            """Row-oriented report destination used by the pipeline stages."""

            @property
            def record_count(self) -> int:
                """Number of rows accepted so far."""
                ...

            def write_record(
                self, record: Mapping[str, str | int | float]
            ) -> p.Result[bool]:
                """Buffer one report row."""
                ...

            def close(self) -> p.Result[bool]:
                """Flush buffered rows to the destination."""
                ...


p = FlextIlsAccuracyProtocols
__all__: list[str] = ["FlextIlsAccuracyProtocols", "p"]
