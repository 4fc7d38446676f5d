"""Settings for flext-ils-accuracy, namespaced under ``settings.IlsAccuracy``.

Universal fields via MRO; project fields in the ``IlsAccuracy`` group with
simple scalar types (env-settable, e.g.
``FLEXT_ILS_ACCURACY_ILSACCURACY__PERCENTILE=0.5``).

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Annotated, Self

from flext_core import FlextSettings
from pydantic import BaseModel, Field, model_validator
from pydantic_settings import SettingsConfigDict

from flext_ils_accuracy.constants import c


class FlextIlsAccuracySettings(FlextSettings):
    """ILS accuracy settings; fields under ``settings.IlsAccuracy.*``."""

    model_config = SettingsConfigDict(
        env_prefix="FLEXT_ILS_ACCURACY_", env_nested_delimiter="__", extra="ignore"
    )

    class _IlsAccuracy(BaseModel):
        """Namespaced ILS accuracy settings."""

        output_dir: Annotated[
            str,
            Field(
                default=c.IlsAccuracy.DEFAULT_OUTPUT_DIR,
                description="Directory receiving every report",
            ),
        ]
        percentile: Annotated[
            float,
            Field(
                default=c.IlsAccuracy.DEFAULT_PERCENTILE,
                description="Quantile of the horizontal error driving categorization",
            ),
        ]
        max_gap: Annotated[
            float,
            Field(
                default=c.IlsAccuracy.DEFAULT_MAX_GAP_S,
                description="Largest sample gap (s) bridged by interpolation",
            ),
        ]
        scheme: Annotated[
            c.IlsAccuracy.SchemeSelection,
            Field(
                default=c.IlsAccuracy.SchemeSelection.APPLICATION,
                description="Performance class schemes to produce",
            ),
        ]
        k_max: Annotated[
            int,
            Field(
                default=c.IlsAccuracy.DEFAULT_K_MAX,
                description="Largest cluster count examined by the elbow search",
            ),
        ]
        elbow_method: Annotated[
            c.IlsAccuracy.ElbowMethod,
            Field(
                default=c.IlsAccuracy.ElbowMethod.RELATIVE,
                description="Elbow score over the SSE curve",
            ),
        ]
        inlier_radius: Annotated[
            float,
            Field(
                default=c.IlsAccuracy.DEFAULT_INLIER_RADIUS_M,
                description="ICP inlier radius (m) for map quality",
            ),
        ]
        icp_max_iters: Annotated[
            int,
            Field(
                default=c.IlsAccuracy.DEFAULT_ICP_MAX_ITERS,
                ge=1,
                description="ICP iteration cap",
            ),
        ]
        yaw_step_deg: Annotated[
            float,
            Field(
                default=c.IlsAccuracy.DEFAULT_YAW_STEP_DEG,
                description="Yaw sweep step (deg) of the global registration",
            ),
        ]
        seed: Annotated[
            int,
            Field(default=c.IlsAccuracy.DEFAULT_SEED, description="Simulation seed"),
        ]
        strict: Annotated[
            bool,
            Field(
                default=False,
                description="Reject inconsistent labels instead of emitting impure leaves",
            ),
        ]
        repetitions: Annotated[
            int,
            Field(
                default=c.IlsAccuracy.DEFAULT_REPETITIONS,
                ge=1,
                description="Repetitions per simulated scenario",
            ),
        ]
        evaluation_poses: Annotated[
            int,
            Field(
                default=c.IlsAccuracy.DEFAULT_EVALUATION_POSES,
                ge=1,
                description="Evaluation poses per simulated experiment",
            ),
        ]
        speed: Annotated[
            float,
            Field(
                default=c.IlsAccuracy.DEFAULT_SPEED_MPS,
                description="Simulated platform speed (m/s)",
            ),
        ]
        rate: Annotated[
            float,
            Field(
                default=c.IlsAccuracy.DEFAULT_RATE_HZ,
                description="Simulated sample rate (Hz)",
            ),
        ]

        @model_validator(mode="after")
        def _validate_domain_rules(self) -> Self:
            """Enforce numeric ranges at construction."""
            if not 0.0 < self.percentile < 1.0:
                msg = "percentile must lie in (0, 1)"
                raise ValueError(msg)
            if self.k_max < c.IlsAccuracy.MIN_K_MAX:
                msg = f"k_max must be at least {c.IlsAccuracy.MIN_K_MAX}"
                raise ValueError(msg)
            for name in ("max_gap", "inlier_radius", "yaw_step_deg", "speed", "rate"):
                if getattr(self, name) <= 0.0:
                    msg = f"{name} must be positive"
                    raise ValueError(msg)
            if not self.output_dir.strip():
                msg = "output_dir cannot be empty"
                raise ValueError(msg)
            return self

    if TYPE_CHECKING:
        IlsAccuracy: _IlsAccuracy
    else:
        IlsAccuracy: _IlsAccuracy = Field(
            default_factory=_IlsAccuracy, description="Namespaced ILS accuracy settings."
        )


settings: FlextIlsAccuracySettings = FlextIlsAccuracySettings.fetch_global()
"""Pre-instantiated project settings singleton: ``from flext_ils_accuracy import settings``."""

__all__: list[str] = ["FlextIlsAccuracySettings", "settings"]
