"""Up-conversion from the vacuum: attenuation instead of gain.

For the up-converted pair the coupled wavenumber shifts are real, so the
thickness envelope sinc^2(xi) stays below one: the input mode comes out
*below* its zeropoint level while the up-shifted channel receives the
difference.  Net result: detections only in the input-frequency channel,
at a few percent of the down-conversion rate.
"""
import math

from pumpslab import channel_report, epsilon_roots, pdc_resonance, puc_resonance
from pumpslab.presets import reference_scenario

scenario = reference_scenario()

eps_d = epsilon_roots(scenario, pdc_resonance(scenario, 0.5))
eps_u = epsilon_roots(scenario, puc_resonance(scenario, 0.5))
print("coupled-pair shift structure at omega0/2:")
print(f"  down-conversion: eps1*eps2 = {eps_d.product:+.3e}  "
      f"(imaginary shifts, sinc^2 = {eps_d.sinc_sq:.8f} > 1)")
print(f"  up-conversion:   eps1*eps2 = {eps_u.product:+.3e}  "
      f"(real shifts,      sinc^2 = {eps_u.sinc_sq:.8f} <= 1)")

pdc = channel_report(scenario, 0.5, kind="pdc")
puc = channel_report(scenario, 0.5, kind="puc")
print()
print("channel fluxes per unit zeropoint input at omega0/2:")
print(f"  down-conversion, omega channel:   {pdc.flux_omega:+.6e}")
print(f"  up-conversion,  omega channel:    {puc.flux_omega:+.6e}")
print(f"  up-conversion,  omega0 + omega:   {puc.flux_partner:+.6e}  "
      "(below zeropoint: no detections)")
print(f"  idler deficit 1 - t1 - r1:        {-2 * puc.n_idler:+.6e}")
print()
print(f"visible up/down intensity ratio: {puc.flux_omega / pdc.flux_omega:.4f}")

print()
print("ratio against the calibrated down-conversion angle:")
print(f"{'theta_d [deg]':>14s} {'theta_u [deg]':>14s} {'puc/pdc':>10s}")
for theta_d in (5.0, 7.5, 8.0, 10.0, 12.5, 15.0):
    s = reference_scenario(theta_d_deg=theta_d)
    d = channel_report(s, 0.5, kind="pdc")
    u = channel_report(s, 0.5, kind="puc")
    theta_u = math.degrees(puc_resonance(s, 0.5).theta)
    print(f"{theta_d:14.1f} {theta_u:14.2f} {u.flux_omega / d.flux_omega:10.4f}")
