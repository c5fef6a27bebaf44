"""Orbital and spherical-Earth geometry for a circular-orbit LEO satellite.

Everything here is deterministic geometry: orbital radius, the relative
angular velocity seen from the rotating Earth, slant range, central angle,
elevation, and the local tangent-plane mapping used to place clustered
ground users on the sphere.

Units are strictly SI (metres, radians, seconds, hertz) at every interface.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Exact by definition (SI).
SPEED_OF_LIGHT_M_S = 299_792_458.0

# Mean Earth radius and sidereal rotation rate.
EARTH_RADIUS_M = 6_371_000.0
EARTH_ANGULAR_VELOCITY_RAD_S = 7.27e-5

# Inverse-trig arguments within this distance outside [-1, 1] are treated as
# floating-point noise and clamped; anything further out is a domain error.
INVERSE_TRIG_CLAMP_TOL = 1e-12


class BelowHorizonError(Exception):
    """Raised when the satellite is below the local horizon of a user."""


def clamp_unit(value, tol: float = INVERSE_TRIG_CLAMP_TOL):
    """Clamp an inverse-trig argument to [-1, 1].

    Accepts a scalar or an ndarray. Values within ``tol`` outside the
    interval are clamped; values further out raise ValueError.
    """
    arr = np.asarray(value, dtype=float)
    excess = np.abs(arr) - 1.0
    if np.any(excess > tol):
        worst = float(np.max(excess))
        raise ValueError(
            f"inverse-trig argument outside [-1, 1] by {worst:.3e} "
            f"(tolerance {tol:.1e})"
        )
    clipped = np.clip(arr, -1.0, 1.0)
    if arr.ndim == 0:
        return float(clipped)
    return clipped


@dataclass(frozen=True)
class SatelliteConfig:
    """Constellation-independent description of one circular-orbit satellite.

    Attributes:
        f_c: Carrier frequency in Hz.
        h: Orbital altitude above the mean Earth surface in metres.
        omega_s: Orbital angular velocity in rad/s (inertial frame).
        omega_e: Earth rotation rate in rad/s.
        theta_i: Orbital inclination in radians.
        r_e: Earth radius in metres.
        c: Propagation speed in m/s.
    """

    f_c: float
    h: float
    omega_s: float
    omega_e: float = EARTH_ANGULAR_VELOCITY_RAD_S
    theta_i: float = 0.0
    r_e: float = EARTH_RADIUS_M
    c: float = SPEED_OF_LIGHT_M_S

    def __post_init__(self) -> None:
        if not (self.f_c > 0.0 and math.isfinite(self.f_c)):
            raise ValueError(f"carrier frequency must be positive, got {self.f_c}")
        if not (self.h > 0.0 and math.isfinite(self.h)):
            raise ValueError(f"altitude must be positive, got {self.h}")
        if not (self.omega_s > 0.0 and math.isfinite(self.omega_s)):
            raise ValueError(f"orbital angular velocity must be positive, got {self.omega_s}")
        if not (self.omega_e >= 0.0 and math.isfinite(self.omega_e)):
            raise ValueError(f"Earth rotation rate must be nonnegative, got {self.omega_e}")
        if not (0.0 <= self.theta_i <= math.pi):
            raise ValueError(f"inclination must lie in [0, pi], got {self.theta_i}")
        if not (self.r_e > 0.0 and math.isfinite(self.r_e)):
            raise ValueError(f"Earth radius must be positive, got {self.r_e}")
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise ValueError(f"propagation speed must be positive, got {self.c}")


@dataclass(frozen=True)
class PlanarPoint:
    """Point in the local tangent plane of the cluster centre, in metres."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"planar coordinates must be finite, got ({self.x}, {self.y})")


def orbital_radius(cfg: SatelliteConfig) -> float:
    """Distance from the Earth centre to the satellite, r_E + h."""
    return cfg.r_e + cfg.h


def angular_velocity_ecf(cfg: SatelliteConfig) -> float:
    """Angular velocity of the satellite relative to the rotating Earth.

    For a circular orbit of inclination theta_i the relative rate is well
    approximated by omega_s + omega_e * cos(theta_i).
    """
    return cfg.omega_s + cfg.omega_e * math.cos(cfg.theta_i)


def _validate_theta(theta: float) -> float:
    if not math.isfinite(theta) or theta < -INVERSE_TRIG_CLAMP_TOL or theta > 1.0 + INVERSE_TRIG_CLAMP_TOL:
        raise ValueError(f"Theta must lie in [0, 1], got {theta}")
    return min(max(theta, 0.0), 1.0)


def slant_range(dt: float, theta: float, cfg: SatelliteConfig) -> float:
    """Distance from user to satellite at time offset dt from peak elevation.

    Args:
        dt: Time offset in seconds from the instant of maximum elevation.
        theta: Pass shape parameter, the cosine of the minimum central angle.
        cfg: Satellite description.

    Returns:
        Slant range in metres. Equals h at dt = 0 for an overhead pass
        (theta = 1) and never exceeds r_E + r_o.
    """
    theta = _validate_theta(theta)
    r_o = orbital_radius(cfg)
    cos_gamma = math.cos(dt * angular_velocity_ecf(cfg)) * theta
    return math.sqrt(cfg.r_e**2 + r_o**2 - 2.0 * r_o * cfg.r_e * cos_gamma)


def central_angle(dt: float, theta: float, cfg: SatelliteConfig) -> float:
    """Earth-centre angle between user and sub-satellite point at offset dt."""
    theta = _validate_theta(theta)
    return math.acos(clamp_unit(math.cos(dt * angular_velocity_ecf(cfg)) * theta))


def elevation_from_central_angle(gamma: float, cfg: SatelliteConfig) -> float:
    """Elevation angle of the satellite for a user at central angle gamma.

    Args:
        gamma: Central angle in radians, in [0, pi].
        cfg: Satellite description.

    Returns:
        Elevation angle in radians, in [0, pi/2].

    Raises:
        BelowHorizonError: If r_o * cos(gamma) < r_E, i.e. the satellite is
            below the user's local horizon.
    """
    if not (0.0 <= gamma <= math.pi):
        raise ValueError(f"central angle must lie in [0, pi], got {gamma}")
    r_o = orbital_radius(cfg)
    vertical = r_o * math.cos(gamma) - cfg.r_e
    if vertical < 0.0:
        raise BelowHorizonError(
            f"satellite below horizon at central angle {gamma:.6f} rad"
        )
    horizontal = r_o * math.sin(gamma)
    s = math.sqrt(cfg.r_e**2 + r_o**2 - 2.0 * r_o * cfg.r_e * math.cos(gamma))
    return math.asin(clamp_unit(vertical / s))


def elevation_planar_approx(z: float, cfg: SatelliteConfig) -> float:
    """Flat-earth cosine of the elevation angle at planar distance z.

    Treats the neighbourhood of the sub-satellite point as a plane at
    altitude h below the satellite, so the slant range is sqrt(h^2 + z^2).

    Args:
        z: Planar distance in metres from the sub-satellite point.
        cfg: Satellite description.

    Returns:
        Approximate cos(elevation), dimensionless. Not clamped: past the
        flat-earth validity range the value exceeds 1.
    """
    if z < 0.0:
        raise ValueError(f"planar distance must be nonnegative, got {z}")
    r_o = orbital_radius(cfg)
    return r_o * z / (cfg.r_e * math.hypot(cfg.h, z))


def plane_to_sphere(p: PlanarPoint, cfg: SatelliteConfig) -> tuple[float, float]:
    """Map a tangent-plane point to spherical offsets about the cluster centre.

    The plane's x axis lies along the satellite ground track, y across it.
    Arc lengths map linearly: the cross-track angle is y / r_E and the
    along-track angle is x / r_E. Composition back to a central angle uses
    the spherical right-triangle relation cos(gamma) = cos(beta) * cos(psi).

    Args:
        p: Point in the tangent plane, metres.
        cfg: Satellite description.

    Returns:
        (beta, psi): cross-track and along-track angles in radians.

    Raises:
        ValueError: If |p| exceeds pi * r_E / 4, outside the mapping's
            validity region.
    """
    norm = math.hypot(p.x, p.y)
    limit = math.pi * cfg.r_e / 4.0
    if norm > limit:
        raise ValueError(
            f"point at {norm:.1f} m from the cluster centre exceeds the "
            f"tangent-plane validity radius {limit:.1f} m"
        )
    return p.y / cfg.r_e, p.x / cfg.r_e
