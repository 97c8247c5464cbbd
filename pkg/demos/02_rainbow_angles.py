"""Frequency-dependent emission angles: the two conversion rainbows.

Each zeropoint mode frequency omega phase-matches at its own transverse
wavenumber p0, so the down-converted light leaves the slab in a rainbow
of angles; the up-converted rainbow sits at much larger angles (about
25 degrees for a 10-degree down-conversion calibration).
"""
from pumpslab import pdc_resonance, puc_resonance
from pumpslab.presets import reference_scenario

scenario = reference_scenario()

print("down-conversion rainbow (input omega, partner omega0 - omega):")
print(f"{'omega':>8s} {'theta_d [deg]':>14s} {'partner theta [deg]':>20s}")
for i in range(7):
    omega = 0.32 + 0.06 * i
    res = pdc_resonance(scenario, omega)
    partner = pdc_resonance(scenario, scenario.omega0 - omega)
    print(f"{omega:8.2f} {res.theta_deg:14.4f} {partner.theta_deg:20.4f}")

print()
print("up-conversion rainbow (input omega, partner omega0 + omega):")
print(f"{'omega':>8s} {'theta_u [deg]':>14s}")
for i in range(7):
    omega = 0.32 + 0.06 * i
    res = puc_resonance(scenario, omega)
    print(f"{omega:8.2f} {res.theta_deg:14.4f}")

res_d = pdc_resonance(scenario, 0.5)
res_u = puc_resonance(scenario, 0.5)
print()
print(f"degenerate mode: theta_d = {res_d.theta_deg:.3f} deg, "
      f"theta_u = {res_u.theta_deg:.3f} deg -> well separated rainbows")
