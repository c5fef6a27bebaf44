"""Matern-style cluster sampling of ground users on the tangent plane.

Cluster parents form a Poisson process over a circular cell; each parent
carries a fixed number of daughter users placed uniformly on a disk around
it. Sampling is driven by a caller-supplied numpy Generator so that runs
are reproducible bit for bit, and daughters falling outside the cell are
kept (the serving geometry, not the cell boundary, decides relevance).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import PlanarPoint

_CSV_HEADER = "cluster_id,user_id,x_m,y_m"


@dataclass(frozen=True)
class CellModel:
    """Cell-level cluster process description.

    Attributes:
        r_cell: Cell radius in metres (> 0).
        lambda_c: Parent intensity in parents per square metre (> 0).
        rho: Cluster disk radius in metres (> 0, at most r_cell).
        n: Number of users per cluster (>= 1).
    """

    r_cell: float
    lambda_c: float
    rho: float
    n: int

    def __post_init__(self) -> None:
        if not (self.r_cell > 0.0 and math.isfinite(self.r_cell)):
            raise ValueError(f"cell radius must be positive, got {self.r_cell}")
        if not (self.lambda_c > 0.0 and math.isfinite(self.lambda_c)):
            raise ValueError(f"parent intensity must be positive, got {self.lambda_c}")
        if not (0.0 < self.rho <= self.r_cell):
            raise ValueError(
                f"cluster radius must lie in (0, r_cell], got {self.rho} "
                f"with r_cell {self.r_cell}"
            )
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"users per cluster must be a positive integer, got {self.n}")


@dataclass(frozen=True)
class ClusterSample:
    """One sampled cluster: its centre and an (N, 2) array of user positions."""

    center: PlanarPoint
    users: np.ndarray

    def __post_init__(self) -> None:
        if self.users.ndim != 2 or self.users.shape[1] != 2 or self.users.shape[0] < 1:
            raise ValueError(f"users must be a nonempty (N, 2) array, got {self.users.shape}")


def _disk_offsets(rho: float, count: int, rng: np.random.Generator) -> np.ndarray:
    # Uniform area law: radius = rho * sqrt(U1), angle = 2 * pi * U2.
    radii = rho * np.sqrt(rng.random(count))
    angles = 2.0 * math.pi * rng.random(count)
    return np.column_stack((radii * np.cos(angles), radii * np.sin(angles)))


def sample_uniform_disk(
    center: PlanarPoint, rho: float, n: int, rng: np.random.Generator
) -> ClusterSample:
    """Sample one cluster of n users uniform on the disk of radius rho.

    Args:
        center: Cluster centre on the tangent plane.
        rho: Disk radius in metres (> 0).
        n: Number of users (>= 1).
        rng: Source of randomness; identical generator state reproduces the
            sample bit for bit.
    """
    if not (rho > 0.0 and math.isfinite(rho)):
        raise ValueError(f"disk radius must be positive, got {rho}")
    if int(n) != n or n < 1:
        raise ValueError(f"user count must be a positive integer, got {n}")
    users = _disk_offsets(rho, int(n), rng) + np.array([center.x, center.y])
    return ClusterSample(center, users)


def sample_cell(model: CellModel, rng: np.random.Generator) -> list[ClusterSample]:
    """Sample one cell realisation.

    The number of parents is Poisson with mean lambda_c * pi * r_cell^2;
    parents are uniform on the cell disk and each carries model.n daughter
    users uniform on its own disk of radius model.rho. Daughters are kept
    even when they land outside the cell.
    """
    mean_parents = model.lambda_c * math.pi * model.r_cell**2
    n_parents = int(rng.poisson(mean_parents))
    centres = _disk_offsets(model.r_cell, n_parents, rng)
    return [
        sample_uniform_disk(PlanarPoint(float(cx), float(cy)), model.rho, model.n, rng)
        for cx, cy in centres
    ]


def distances_to_point(sample: ClusterSample, q: PlanarPoint) -> np.ndarray:
    """Euclidean distances from every user of the cluster to the point q."""
    return np.hypot(sample.users[:, 0] - q.x, sample.users[:, 1] - q.y)


def dump_clusters_csv(clusters: list[ClusterSample], path) -> None:
    """Write sampled users as CSV rows cluster_id,user_id,x_m,y_m."""
    lines = [_CSV_HEADER]
    for cluster_id, cluster in enumerate(clusters):
        for user_id, (x, y) in enumerate(cluster.users):
            lines.append(f"{cluster_id},{user_id},{x:.9g},{y:.9g}")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
