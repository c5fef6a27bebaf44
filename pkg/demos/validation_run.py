"""Monte Carlo validation of the closed-form law on exact sphere geometry.

Runs the simulation twice (single- and multi-threaded) to show the outputs
are identical, and prints what the comparison measures: agreement of the
envelope samples with the analytic CDF, and the envelope's pessimism
relative to the exact per-user Doppler.
"""
import math

from leodoppler import SatelliteConfig, ScenarioConfig, run_scenario

cfg = SatelliteConfig(f_c=2e9, h=600e3, omega_s=1.1e-3)
scenario = ScenarioConfig(
    cfg=cfg, rho=100e3, r_hat=200e3, n_users=8, trials=12_500, seed=7
)
n = scenario.n_users * scenario.trials

report = run_scenario(scenario, threads=4)
again = run_scenario(scenario, threads=1)
assert report.ks_bound == again.ks_bound, "thread count changed the result"

print(f"samples              {n}")
print(f"excluded (horizon)   {report.excluded}")
print(f"KS envelope vs law   {report.ks_bound:.5f}  "
      f"(KS*sqrt(n) = {report.ks_bound * math.sqrt(n):.2f})")
print(f"KS exact vs law      {report.ks_exact:.5f}")
print(f"dominance violations {report.dominance_violations}")

# A few grid rows: analytic law, envelope samples, exact samples. The
# exact column sits left of the analytic one because the envelope is an
# upper bound on each user's shift.
print(f"\n{'x [kHz]':>8} {'analytic':>9} {'envelope':>9} {'exact':>9}")
for i in range(0, report.x_hz.size, report.x_hz.size // 8):
    print(f"{report.x_hz[i] / 1e3:8.2f} {report.cdf_analytic[i]:9.4f} "
          f"{report.cdf_emp_bound[i]:9.4f} {report.cdf_emp_exact[i]:9.4f}")

# Same scene, but the ground track passes abeam the cluster instead of
# through it: the planar distances are unchanged, so the envelope law is
# too, while the exact shifts collapse near closest approach.
abeam = ScenarioConfig(
    cfg=cfg, rho=100e3, r_hat=200e3, n_users=8, trials=12_500, seed=7,
    cluster_center_on_track=False,
)
report_abeam = run_scenario(abeam)
print(f"\nabeam pass:          KS envelope {report_abeam.ks_bound:.5f}, "
      f"KS exact {report_abeam.ks_exact:.5f}")
