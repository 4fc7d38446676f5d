"""FLEXT ILS Accuracy Types - numeric array and factor value aliases.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np
import numpy.typing as npt
from flext_core import t


class FlextIlsAccuracyTypes(t):
    """MRO facade adding the ILS accuracy type namespace to flext-core types."""

    class IlsAccuracy:
        """ILS accuracy domain type aliases."""

        type FloatArray = npt.NDArray[np.float64]
        type FactorValue = str | float
        type Assignment = Mapping[str, str | float]
        type Point2D = tuple[float, float]
        type ValueRange = tuple[float, float]


t = FlextIlsAccuracyTypes

__all__: list[str] = ["FlextIlsAccuracyTypes", "t"]
