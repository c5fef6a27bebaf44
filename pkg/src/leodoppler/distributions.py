"""Closed-form distribution of the Doppler magnitude over a user cluster.

Users are uniform on a planar disk of radius rho whose centre sits at
planar distance r_hat from the sub-satellite point. The distance M from a
uniform point of the disk to the sub-satellite point has a piecewise
closed-form law (a disk-and-circle lens area). The Doppler magnitude of a
user at distance z is x = A * z / sqrt(h^2 + z^2), a strictly increasing
map, so the magnitude law follows from the distance law by a change of
variables. Order statistics over N independent users and the closed
overhead special case (r_hat = 0) come with it.

All functions accept scalars or ndarrays for the evaluation point and are
strict about SI units (metres, hertz).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import SatelliteConfig, angular_velocity_ecf, clamp_unit, orbital_radius

_QUANTILE_TOL_HZ = 1e-6


@dataclass(frozen=True)
class DiskDistanceDistribution:
    """Distance from a uniform point in a disk to a fixed external point.

    Attributes:
        radius: Disk radius in metres (> 0).
        offset: Distance of the fixed point from the disk centre, metres (>= 0).
    """

    radius: float
    offset: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"disk radius must be positive, got {self.radius}")
        if not (self.offset >= 0.0 and math.isfinite(self.offset)):
            raise ValueError(f"offset must be nonnegative, got {self.offset}")


def _eval_points(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _scalar_or_array(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def disk_distance_cdf(r, d: DiskDistanceDistribution):
    """CDF of the distance to the fixed point, evaluated at r.

    Piecewise: (r / R)^2 while the circle of radius r around the fixed
    point lies inside the disk, a lens-area ratio while the two circles
    intersect, 0 below the reachable range and 1 above it. Breakpoints
    belong to the closed branch on their left.
    """
    rr, scalar = _eval_points(r)
    if np.any(rr < 0.0):
        raise ValueError("distance must be nonnegative")
    R, off = d.radius, d.offset
    out = np.zeros_like(rr)
    hi = R + off
    out[rr > hi] = 1.0
    if off < R:
        inner = rr <= R - off
        out[inner] = (rr[inner] / R) ** 2
    lens = (rr > abs(R - off)) & (rr <= hi)
    if np.any(lens):
        rl = rr[lens]
        theta = np.arccos(clamp_unit((rl**2 + off**2 - R**2) / (2.0 * off * rl)))
        phi = np.arccos(clamp_unit((R**2 + off**2 - rl**2) / (2.0 * off * R)))
        out[lens] = (rl**2 / (math.pi * R**2)) * (theta - 0.5 * np.sin(2.0 * theta)) + (
            phi - 0.5 * np.sin(2.0 * phi)
        ) / math.pi
    return _scalar_or_array(out, scalar)


def disk_distance_pdf(r, d: DiskDistanceDistribution):
    """Density of the distance to the fixed point, evaluated at r."""
    rr, scalar = _eval_points(r)
    if np.any(rr < 0.0):
        raise ValueError("distance must be nonnegative")
    R, off = d.radius, d.offset
    out = np.zeros_like(rr)
    if off < R:
        inner = rr <= R - off
        out[inner] = 2.0 * rr[inner] / R**2
    lens = (rr > abs(R - off)) & (rr <= R + off)
    if np.any(lens):
        rl = rr[lens]
        theta = np.arccos(clamp_unit((rl**2 + off**2 - R**2) / (2.0 * off * rl)))
        out[lens] = 2.0 * rl * theta / (math.pi * R**2)
    return _scalar_or_array(out, scalar)


def param_A(cfg: SatelliteConfig) -> float:
    """Doppler scale A = f_c * r_o * omega_F / c in Hz.

    The magnitude of any user's shift approaches A as the slant path
    flattens; every supported magnitude stays strictly below it.
    """
    return cfg.f_c * orbital_radius(cfg) * angular_velocity_ecf(cfg) / cfg.c


@dataclass(frozen=True)
class DopplerMagnitudeDistribution:
    """Law of the Doppler magnitude for one uniformly placed cluster user.

    Attributes:
        a: Doppler scale A in Hz (> 0).
        h: Satellite altitude in metres (> 0).
        rho: Cluster disk radius in metres (> 0).
        r_hat: Planar distance of the sub-satellite point from the cluster
            centre, metres (>= 0). Canonical parameter; construction from a
            slant range converts to it.
    """

    a: float
    h: float
    rho: float
    r_hat: float

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and math.isfinite(self.a)):
            raise ValueError(f"Doppler scale must be positive, got {self.a}")
        if not (self.h > 0.0 and math.isfinite(self.h)):
            raise ValueError(f"altitude must be positive, got {self.h}")
        if not (self.rho > 0.0 and math.isfinite(self.rho)):
            raise ValueError(f"cluster radius must be positive, got {self.rho}")
        if not (self.r_hat >= 0.0 and math.isfinite(self.r_hat)):
            raise ValueError(f"centre offset must be nonnegative, got {self.r_hat}")

    @classmethod
    def for_satellite(
        cls, cfg: SatelliteConfig, rho: float, r_hat: float
    ) -> "DopplerMagnitudeDistribution":
        """Build from a satellite description and planar centre offset."""
        return cls(param_A(cfg), cfg.h, rho, r_hat)

    @classmethod
    def from_slant_range(
        cls, cfg: SatelliteConfig, rho: float, s_t: float
    ) -> "DopplerMagnitudeDistribution":
        """Build from the slant range to the cluster centre.

        The planar offset is recovered as sqrt(s_t^2 - h^2); s_t must be at
        least the altitude.
        """
        if s_t < cfg.h:
            raise ValueError(
                f"slant range {s_t} m is shorter than the altitude {cfg.h} m"
            )
        return cls(param_A(cfg), cfg.h, rho, math.sqrt(s_t**2 - cfg.h**2))

    def _disk(self) -> DiskDistanceDistribution:
        return DiskDistanceDistribution(self.rho, self.r_hat)

    def cdf(self, x):
        return doppler_cdf(x, self)

    def pdf(self, x):
        return doppler_pdf(x, self)

    def quantile(self, p):
        return doppler_quantile(p, self)


def _magnitude_at_distance(dist: DopplerMagnitudeDistribution, z: float) -> float:
    return dist.a * z / math.hypot(dist.h, z) if z > 0.0 else 0.0


def doppler_support_max(dist: DopplerMagnitudeDistribution) -> float:
    """Largest supported Doppler magnitude, attained at the far disk edge."""
    return _magnitude_at_distance(dist, dist.r_hat + dist.rho)


def doppler_support_min(dist: DopplerMagnitudeDistribution) -> float:
    """Smallest supported magnitude; 0 unless the disk excludes the
    sub-satellite point (r_hat > rho)."""
    return _magnitude_at_distance(dist, max(0.0, dist.r_hat - dist.rho))


def _distance_of_magnitude(x: np.ndarray, dist: DopplerMagnitudeDistribution) -> np.ndarray:
    # Inverse of x = A z / sqrt(h^2 + z^2); callers guarantee x < A.
    return dist.h * x / np.sqrt(dist.a**2 - x**2)


def doppler_cdf(x, dist: DopplerMagnitudeDistribution):
    """CDF of the Doppler magnitude at x >= 0 Hz."""
    xx, scalar = _eval_points(x)
    if np.any(xx < 0.0):
        raise ValueError("Doppler magnitude must be nonnegative")
    out = np.ones_like(xx)
    below = xx < doppler_support_max(dist)
    if np.any(below):
        z = _distance_of_magnitude(xx[below], dist)
        out[below] = disk_distance_cdf(z, dist._disk())
    return _scalar_or_array(out, scalar)


def doppler_pdf(x, dist: DopplerMagnitudeDistribution):
    """Density of the Doppler magnitude at x >= 0 Hz, 0 outside the support."""
    xx, scalar = _eval_points(x)
    if np.any(xx < 0.0):
        raise ValueError("Doppler magnitude must be nonnegative")
    out = np.zeros_like(xx)
    inside = xx < doppler_support_max(dist)
    if np.any(inside):
        xi = xx[inside]
        z = _distance_of_magnitude(xi, dist)
        jacobian = dist.h * dist.a**2 / (dist.a**2 - xi**2) ** 1.5
        out[inside] = jacobian * disk_distance_pdf(z, dist._disk())
    return _scalar_or_array(out, scalar)


def doppler_quantile(p, dist: DopplerMagnitudeDistribution):
    """Smallest magnitude x with CDF(x) >= p, by bisection to 1e-6 Hz.

    p = 0 returns the lower support edge, p = 1 the upper one.
    """
    pp, scalar = _eval_points(p)
    if np.any((pp < 0.0) | (pp > 1.0)):
        raise ValueError("probability must lie in [0, 1]")
    lo_edge = doppler_support_min(dist)
    hi_edge = doppler_support_max(dist)
    lo = np.full_like(pp, lo_edge)
    hi = np.full_like(pp, hi_edge)
    interior = (pp > 0.0) & (pp < 1.0)
    while np.any((hi[interior] - lo[interior]) > _QUANTILE_TOL_HZ):
        mid = 0.5 * (lo + hi)
        reached = doppler_cdf(mid, dist) >= pp
        step_down = interior & reached
        step_up = interior & ~reached
        hi[step_down] = mid[step_down]
        lo[step_up] = mid[step_up]
    out = np.where(interior, hi, np.where(pp == 0.0, lo_edge, hi_edge))
    return _scalar_or_array(out, scalar)


def _validate_cluster_size(n: int) -> int:
    if int(n) != n or n < 1:
        raise ValueError(f"cluster size must be a positive integer, got {n}")
    return int(n)


def min_doppler_cdf(x, dist: DopplerMagnitudeDistribution, n: int):
    """CDF of the minimum magnitude over n independent users."""
    n = _validate_cluster_size(n)
    f = np.asarray(doppler_cdf(x, dist))
    out = 1.0 - (1.0 - f) ** n
    return float(out) if out.ndim == 0 else out


def min_doppler_pdf(x, dist: DopplerMagnitudeDistribution, n: int):
    """Density of the minimum magnitude over n independent users."""
    n = _validate_cluster_size(n)
    f = np.asarray(doppler_cdf(x, dist))
    out = n * (1.0 - f) ** (n - 1) * np.asarray(doppler_pdf(x, dist))
    return float(out) if out.ndim == 0 else out


def max_doppler_cdf(x, dist: DopplerMagnitudeDistribution, n: int):
    """CDF of the maximum magnitude over n independent users."""
    n = _validate_cluster_size(n)
    f = np.asarray(doppler_cdf(x, dist))
    out = f**n
    return float(out) if out.ndim == 0 else out


def max_doppler_pdf(x, dist: DopplerMagnitudeDistribution, n: int):
    """Density of the maximum magnitude over n independent users."""
    n = _validate_cluster_size(n)
    f = np.asarray(doppler_cdf(x, dist))
    out = n * f ** (n - 1) * np.asarray(doppler_pdf(x, dist))
    return float(out) if out.ndim == 0 else out


def _require_overhead(dist: DopplerMagnitudeDistribution) -> None:
    if dist.r_hat != 0.0:
        raise ValueError(
            f"overhead form requires the sub-satellite point at the cluster "
            f"centre (r_hat = 0), got r_hat = {dist.r_hat}"
        )


def overhead_cdf(x, dist: DopplerMagnitudeDistribution):
    """Closed-form CDF for a satellite directly over the cluster centre.

    F(x) = (h^2 / rho^2) * x^2 / (A^2 - x^2) on the support
    [0, A / sqrt(1 + h^2 / rho^2)]; 1 above it.
    """
    _require_overhead(dist)
    xx, scalar = _eval_points(x)
    if np.any(xx < 0.0):
        raise ValueError("Doppler magnitude must be nonnegative")
    out = np.ones_like(xx)
    below = xx < doppler_support_max(dist)
    xb = xx[below]
    out[below] = (dist.h**2 / dist.rho**2) * xb**2 / (dist.a**2 - xb**2)
    return _scalar_or_array(out, scalar)


def overhead_pdf(x, dist: DopplerMagnitudeDistribution):
    """Closed-form density for a satellite directly over the cluster centre.

    f(x) = (2 A^2 h^2 / rho^2) * x / (A^2 - x^2)^2 on the support, 0 above.
    """
    _require_overhead(dist)
    xx, scalar = _eval_points(x)
    if np.any(xx < 0.0):
        raise ValueError("Doppler magnitude must be nonnegative")
    out = np.zeros_like(xx)
    below = xx < doppler_support_max(dist)
    xb = xx[below]
    out[below] = (2.0 * dist.a**2 * dist.h**2 / dist.rho**2) * xb / (dist.a**2 - xb**2) ** 2
    return _scalar_or_array(out, scalar)
