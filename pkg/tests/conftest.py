"""Pytest configuration for FLEXT ILS Accuracy tests.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator shared by property tests."""
    return np.random.default_rng(20240917)
