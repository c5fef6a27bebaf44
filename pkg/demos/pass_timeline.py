"""Walk through one satellite pass: geometry, Doppler, and envelope accuracy.

Prints a timeline of the exact Doppler shift next to the on-track envelope
for a 600 km orbit, then reports where the envelope is accurate to 1%.
"""
import math

from leodoppler import (
    PassGeometry,
    SatelliteConfig,
    angular_velocity_ecf,
    central_angle,
    doppler_bound,
    doppler_exact,
    elevation_from_central_angle,
    epsilon_accuracy_offsets,
    orbital_radius,
    slant_range,
    theta_of_alpha_max,
)

cfg = SatelliteConfig(f_c=2e9, h=600e3, omega_s=1.1e-3)
r_o = orbital_radius(cfg)
omega_f = angular_velocity_ecf(cfg)
print(f"orbit radius        {r_o / 1e3:9.1f} km")
print(f"ECF angular rate    {omega_f * 1e3:9.5f} mrad/s")

alpha_max = math.radians(60.0)
geometry = PassGeometry.from_max_elevation(alpha_max, cfg)
print(f"max elevation       {math.degrees(alpha_max):9.1f} deg")
print(f"pass parameter      {geometry.theta:9.6f}")

# time until the satellite drops below the horizon for this pass
dt_horizon = math.acos(cfg.r_e / (r_o * geometry.theta)) / omega_f
print(f"visible for         {2 * dt_horizon:9.1f} s\n")

print(f"{'dt [s]':>8} {'elev [deg]':>11} {'range [km]':>11} "
      f"{'exact [kHz]':>12} {'envelope [kHz]':>15}")
for frac in (-0.99, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 0.99):
    dt = frac * dt_horizon
    gamma = central_angle(dt, geometry.theta, cfg)
    alpha = elevation_from_central_angle(gamma, cfg)
    chi = doppler_exact(dt, geometry, cfg)
    env = doppler_bound(alpha, cfg)
    print(f"{dt:8.1f} {math.degrees(alpha):11.2f} "
          f"{slant_range(dt, geometry.theta, cfg) / 1e3:11.1f} "
          f"{chi / 1e3:12.3f} {env / 1e3:15.3f}")

# Where does the envelope track the exact shift to within epsilon?
print()
for epsilon in (0.05, 0.01):
    window = epsilon_accuracy_offsets(epsilon, geometry.theta, cfg)
    if window is None:
        print(f"epsilon={epsilon}: envelope never this tight for the pass")
        continue
    t_near, t_far = window
    inside = "inside" if t_near <= dt_horizon else "beyond"
    print(f"epsilon={epsilon}: envelope within {epsilon:.0%} for "
          f"|dt| in [{t_near:.1f}, {t_far:.1f}] s ({inside} the visible arc)")
