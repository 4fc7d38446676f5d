"""Frame alignment and map-quality registration.

Copyright (c) 2025 Flext. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.transform import Rotation

from flext_ils_accuracy import c, m, p, r, t, u
from flext_ils_accuracy.errors import (
    DegenerateConfigurationError,
    FlextIlsAccuracyError,
)

logger = u.fetch_logger(__name__)


class FlextIlsAccuracyAlign:
    """Least-squares similarity alignment, yaw sweep registration and ICP."""

    @staticmethod
    def solve_umeyama(
        src: t.IlsAccuracy.FloatArray,
        dst: t.IlsAccuracy.FloatArray,
        *,
        with_scale: bool,
    ) -> tuple[t.IlsAccuracy.FloatArray, t.IlsAccuracy.FloatArray, float]:
        """Rotation, translation and scale minimising sum |dst - (s R src + t)|^2.

        Works in any dimension; raises when the cross-covariance has rank
        below dim - 1, where the rotation is not unique.
        """
        if src.shape != dst.shape:
            msg = f"point sets differ in shape: {src.shape} vs {dst.shape}"
            raise DegenerateConfigurationError(msg)
        count, dim = src.shape
        if count < c.IlsAccuracy.MIN_REGISTRATION_POINTS:
            msg = f"need at least {c.IlsAccuracy.MIN_REGISTRATION_POINTS} correspondences, got {count}"
            raise DegenerateConfigurationError(msg)
        src_mean = src.mean(axis=0)
        dst_mean = dst.mean(axis=0)
        src_centered = src - src_mean
        dst_centered = dst - dst_mean
        src_var = float(np.mean(np.sum(src_centered**2, axis=1)))
        covariance = dst_centered.T @ src_centered / count
        left, singular, right_t = np.linalg.svd(covariance)
        top = float(singular[0])
        rank = int(np.sum(singular > c.IlsAccuracy.RANK_TOL * top)) if top > 0.0 else 0
        if rank < dim - 1 or src_var == 0.0:
            msg = (
                f"cross-covariance rank {rank} < {dim - 1}: points are "
                f"coincident or collinear"
            )
            raise DegenerateConfigurationError(msg)
        sign = np.eye(dim)
        if np.linalg.det(left) * np.linalg.det(right_t) < 0.0:
            sign[-1, -1] = -1.0
        rotation = left @ sign @ right_t
        scale = float(np.trace(np.diag(singular) @ sign) / src_var) if with_scale else 1.0
        translation = dst_mean - scale * rotation @ src_mean
        return rotation, translation, scale

    @staticmethod
    def umeyama_align(
        src_points: Sequence[Sequence[float]] | t.IlsAccuracy.FloatArray,
        dst_points: Sequence[Sequence[float]] | t.IlsAccuracy.FloatArray,
        *,
        with_scale: bool = False,
    ) -> p.Result[m.IlsAccuracy.RigidTransform]:
        """Similarity transform mapping paired 3-D source points onto destination points."""
        try:
            src = np.asarray(src_points, dtype=np.float64).reshape(-1, 3)
            dst = np.asarray(dst_points, dtype=np.float64).reshape(-1, 3)
            rotation, translation, scale = FlextIlsAccuracyAlign.solve_umeyama(
                src, dst, with_scale=with_scale
            )
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.RigidTransform].fail(str(exc))
        except ValueError as exc:
            return r[m.IlsAccuracy.RigidTransform].fail(
                str(DegenerateConfigurationError(f"invalid point arrays: {exc}"))
            )
        return r[m.IlsAccuracy.RigidTransform].ok(
            m.IlsAccuracy.RigidTransform.from_arrays(rotation, translation, scale)
        )

    @staticmethod
    def residual_rmse(
        transform: m.IlsAccuracy.RigidTransform,
        src_points: t.IlsAccuracy.FloatArray,
        dst_points: t.IlsAccuracy.FloatArray,
    ) -> float:
        """Root-mean-square distance between transformed source and destination."""
        moved = transform.apply_points(src_points)
        return float(np.sqrt(np.mean(np.sum((moved - dst_points) ** 2, axis=1))))

    @staticmethod
    def fit_calibration(
        pairs: Sequence[m.IlsAccuracy.SyncedSamplePair], *, with_scale: bool = False
    ) -> p.Result[m.IlsAccuracy.RigidTransform]:
        """Transform taking estimate coordinates into the reference frame."""
        src = [(*pair.estimate_xy, pair.estimate_z) for pair in pairs]
        dst = [(*pair.reference_xy, pair.reference_z) for pair in pairs]
        return FlextIlsAccuracyAlign.umeyama_align(src, dst, with_scale=with_scale)

    @staticmethod
    def apply_transform(
        transform: m.IlsAccuracy.RigidTransform, trajectory: m.IlsAccuracy.Trajectory
    ) -> m.IlsAccuracy.Trajectory:
        """Trajectory with every pose mapped through the transform."""
        positions = transform.apply_points(trajectory.positions())
        quaternions = trajectory.quaternions()
        if quaternions is not None:
            rotated = Rotation.from_matrix(transform.matrix()) * Rotation.from_quat(
                quaternions[:, [1, 2, 3, 0]]
            )
            quaternions = rotated.as_quat()[:, [3, 0, 1, 2]]
            quaternions /= np.linalg.norm(quaternions, axis=1)[:, np.newaxis]
        return m.IlsAccuracy.Trajectory.from_arrays(
            trajectory.source_id, trajectory.times(), positions, quaternions
        )

    @staticmethod
    def invert(transform: m.IlsAccuracy.RigidTransform) -> m.IlsAccuracy.RigidTransform:
        """Inverse similarity transform."""
        rotation_t = transform.matrix().T
        scale = 1.0 / transform.scale
        translation = -scale * rotation_t @ transform.vector()
        return m.IlsAccuracy.RigidTransform.from_arrays(rotation_t, translation, scale)

    @staticmethod
    def _cloud_array(cloud: m.IlsAccuracy.PointCloud2D, role: str) -> t.IlsAccuracy.FloatArray:
        points = cloud.as_array()
        if points.shape[0] < c.IlsAccuracy.MIN_REGISTRATION_POINTS:
            msg = f"{role} cloud has {points.shape[0]} points, need at least {c.IlsAccuracy.MIN_REGISTRATION_POINTS}"
            raise DegenerateConfigurationError(msg)
        if float(np.ptp(points, axis=0).max()) == 0.0:
            msg = f"{role} cloud points all coincide"
            raise DegenerateConfigurationError(msg)
        return points

    @staticmethod
    def sweep_yaw(
        src: t.IlsAccuracy.FloatArray,
        dst: t.IlsAccuracy.FloatArray,
        yaw_step_deg: float,
    ) -> m.IlsAccuracy.RigidTransform:
        """Centroid match plus the yaw minimising mean nearest-neighbour distance."""
        src_mean = src.mean(axis=0)
        dst_mean = dst.mean(axis=0)
        tree = cKDTree(dst - dst_mean)
        yaws = np.deg2rad(np.arange(0.0, 360.0, yaw_step_deg))
        cos_yaw, sin_yaw = np.cos(yaws), np.sin(yaws)
        centered = src - src_mean
        rotated = np.stack(
            [
                cos_yaw[:, np.newaxis] * centered[:, 0]
                - sin_yaw[:, np.newaxis] * centered[:, 1],
                sin_yaw[:, np.newaxis] * centered[:, 0]
                + cos_yaw[:, np.newaxis] * centered[:, 1],
            ],
            axis=-1,
        )
        distances, _ = tree.query(rotated.reshape(-1, 2))
        cost = distances.reshape(yaws.size, -1).mean(axis=1)
        best = int(np.argmin(cost))
        yaw = float(yaws[best])
        rotation = np.array([
            [math.cos(yaw), -math.sin(yaw)],
            [math.sin(yaw), math.cos(yaw)],
        ])
        return m.IlsAccuracy.RigidTransform.from_yaw(yaw, dst_mean - rotation @ src_mean)

    @staticmethod
    def global_register(
        src: m.IlsAccuracy.PointCloud2D,
        dst: m.IlsAccuracy.PointCloud2D,
        yaw_step_deg: float = c.IlsAccuracy.DEFAULT_YAW_STEP_DEG,
    ) -> p.Result[m.IlsAccuracy.RigidTransform]:
        """Coarse planar registration of src onto dst."""
        try:
            src_points = FlextIlsAccuracyAlign._cloud_array(src, "source")
            dst_points = FlextIlsAccuracyAlign._cloud_array(dst, "destination")
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.RigidTransform].fail(str(exc))
        return r[m.IlsAccuracy.RigidTransform].ok(
            FlextIlsAccuracyAlign.sweep_yaw(src_points, dst_points, yaw_step_deg)
        )

    @staticmethod
    def icp_fitness(
        src: m.IlsAccuracy.PointCloud2D,
        dst: m.IlsAccuracy.PointCloud2D,
        inlier_radius: float = c.IlsAccuracy.DEFAULT_INLIER_RADIUS_M,
        max_iters: int = c.IlsAccuracy.DEFAULT_ICP_MAX_ITERS,
        yaw_step_deg: float = c.IlsAccuracy.DEFAULT_YAW_STEP_DEG,
    ) -> p.Result[m.IlsAccuracy.MapQualityScore]:
        """Fraction of src points within ``inlier_radius`` of dst after ICP.

        Point-to-point ICP from the global registration; stops once the
        correspondence set is stable, the mean distance would grow, or
        ``max_iters`` is reached.
        """
        try:
            src_points = FlextIlsAccuracyAlign._cloud_array(src, "source")
            dst_points = FlextIlsAccuracyAlign._cloud_array(dst, "destination")
        except FlextIlsAccuracyError as exc:
            return r[m.IlsAccuracy.MapQualityScore].fail(str(exc))
        start = FlextIlsAccuracyAlign.sweep_yaw(src_points, dst_points, yaw_step_deg)
        rotation = start.matrix()[:2, :2]
        translation = start.vector()[:2]
        tree = cKDTree(dst_points)
        distances, indices = tree.query(src_points @ rotation.T + translation)
        history = [float(distances.mean())]
        iterations = 0
        for _ in range(max_iters):
            try:
                step_rotation, step_translation, _ = FlextIlsAccuracyAlign.solve_umeyama(
                    src_points, dst_points[indices], with_scale=False
                )
            except DegenerateConfigurationError:
                break
            step_distances, step_indices = tree.query(
                src_points @ step_rotation.T + step_translation
            )
            step_mean = float(step_distances.mean())
            if step_mean > history[-1]:
                break
            rotation, translation = step_rotation, step_translation
            distances = step_distances
            history.append(step_mean)
            iterations += 1
            stable = bool(np.array_equal(step_indices, indices))
            indices = step_indices
            if stable:
                break
        inliers = distances <= inlier_radius
        fitness = float(np.mean(inliers))
        inlier_rmse = (
            float(np.sqrt(np.mean(distances[inliers] ** 2))) if inliers.any() else 0.0
        )
        transform = m.IlsAccuracy.RigidTransform.from_yaw(
            math.atan2(rotation[1, 0], rotation[0, 0]), translation
        )
        logger.info(
            "Map quality computed",
            fitness=fitness,
            inlier_rmse=inlier_rmse,
            iterations=iterations,
            yaw_deg=transform.yaw_deg,
        )
        return r[m.IlsAccuracy.MapQualityScore].ok(
            m.IlsAccuracy.MapQualityScore(
                fitness=fitness,
                inlier_rmse=inlier_rmse,
                transform=transform,
                inlier_radius=inlier_radius,
                iterations=iterations,
                distance_history=tuple(history),
            )
        )


__all__: list[str] = ["FlextIlsAccuracyAlign"]
