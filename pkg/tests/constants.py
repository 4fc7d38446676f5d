"""Test constants for flext-ils-accuracy.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from typing import Final

from flext_ils_accuracy import FlextIlsAccuracyConstants
from flext_tests import FlextTestsConstants


class TestsFlextIlsAccuracyConstants(FlextTestsConstants, FlextIlsAccuracyConstants):
    """Test constants for flext-ils-accuracy."""

    class IlsAccuracy(FlextIlsAccuracyConstants.IlsAccuracy):
        """ILS accuracy domain test constants namespace."""

        class Tests(FlextTestsConstants.Tests):
            """Fixture values and oracle tolerances."""

            RAYLEIGH_SIGMA: Final[float] = 0.0204
            RAYLEIGH_RATE_HZ: Final[float] = 200.0
            RAYLEIGH_EVALUATIONS: Final[int] = 10_000
            RAYLEIGH_REL_TOL: Final[float] = 0.05
            UMEYAMA_TRIALS: Final[int] = 1000
            UMEYAMA_TOL: Final[float] = 1e-9
            UMEYAMA_NOISY_TRIALS: Final[int] = 20
            UMEYAMA_NOISE_SIGMA: Final[float] = 0.01
            KMEANS_TRIALS: Final[int] = 500
            ELBOW_TRIALS: Final[int] = 100
            ICP_TRIALS: Final[int] = 50
            ICP_POINTS: Final[int] = 200
            ICP_MIN_FITNESS: Final[float] = 0.99
            FACTORIAL_SCENARIOS: Final[int] = 40
            LIDAR_SCENARIOS: Final[int] = 32
            UWB_SCENARIOS: Final[int] = 8
            APPLICATION_SPLITS: Final[int] = 10
            APPLICATION_LEAVES: Final[int] = 11
            SEED: Final[int] = 7
            # (h95, expected application class) on both sides of every boundary
            APPLICATION_BOUNDARIES: Final[tuple[tuple[float, str], ...]] = (
                (0.0, "A"),
                (0.049, "A"),
                (0.05, "B"),
                (0.099, "B"),
                (0.1, "C"),
                (0.3, "C"),
                (0.499, "C"),
                (0.5, "D"),
                (0.999, "D"),
                (1.0, "unclassified"),
                (1.2, "unclassified"),
            )


c = TestsFlextIlsAccuracyConstants

__all__: list[str] = ["TestsFlextIlsAccuracyConstants", "c"]
