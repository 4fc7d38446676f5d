"""Tests for namespaced settings.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

import pytest

from flext_ils_accuracy import FlextIlsAccuracySettings
from flext_tests import tm
from tests import c
from tests.settings import TestsFlextIlsAccuracySettings


class TestsFlextIlsAccuracyConfig:
    """``settings.IlsAccuracy.*`` defaults and domain validation."""

    def test_defaults(self) -> None:
        settings = FlextIlsAccuracySettings.model_validate({"IlsAccuracy": {}})
        ils = settings.IlsAccuracy
        tm.that(ils.percentile, eq=c.IlsAccuracy.DEFAULT_PERCENTILE)
        tm.that(ils.max_gap, eq=c.IlsAccuracy.DEFAULT_MAX_GAP_S)
        tm.that(ils.k_max, eq=c.IlsAccuracy.DEFAULT_K_MAX)
        tm.that(ils.scheme, eq=c.IlsAccuracy.SchemeSelection.APPLICATION)
        tm.that(ils.elbow_method, eq=c.IlsAccuracy.ElbowMethod.RELATIVE)
        assert not ils.strict

    def test_custom_values(self) -> None:
        settings = TestsFlextIlsAccuracySettings.model_validate({
            "IlsAccuracy": {"percentile": 0.5, "scheme": "both", "seed": 11}
        })
        tm.that(settings.IlsAccuracy.percentile, eq=0.5)
        tm.that(settings.IlsAccuracy.scheme, eq=c.IlsAccuracy.SchemeSelection.BOTH)
        tm.that(settings.IlsAccuracy.seed, eq=11)

    @pytest.mark.parametrize(
        ("values", "message"),
        [
            ({"percentile": 1.0}, "percentile must lie in"),
            ({"k_max": 2}, "k_max must be at least 3"),
            ({"inlier_radius": 0.0}, "inlier_radius must be positive"),
            ({"output_dir": "  "}, "output_dir cannot be empty"),
        ],
    )
    def test_domain_validation(self, values: dict[str, object], message: str) -> None:
        with pytest.raises(c.ValidationError, match=message):
            FlextIlsAccuracySettings.model_validate({"IlsAccuracy": values})
