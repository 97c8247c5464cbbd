"""Zeropoint amplification: gain factor, coefficients and photon fluxes.

A unit-amplitude zeropoint mode entering on resonance leaves with excess
intensity gamma/(1 + r10) split between the transmitted and reflected
rainbows, while its conjugate partner picks up the matching signal.  The
flux in each outgoing channel is inversely proportional to the cosine of
its rainbow angle, so a blue-red pair counts slightly more red
"photons" than blue ones.
"""
from pumpslab import channel_report, rainbow_split
from pumpslab.presets import blue_red_scenario, reference_scenario

scenario = reference_scenario()
rep = channel_report(scenario, 0.5, kind="pdc")

print("degenerate down-conversion on the 10-degree calibration:")
print(f"  gain factor gamma        = {rep.gamma:.6e}")
print(f"  interface reflection r10 = {rep.r10:.6f}")
print(f"  overall r1, t1           = {rep.r1:.9f}, {rep.t1:.9f}")
print(f"  partner r2, t2           = {rep.r2:.3e}, {rep.t2:.3e}")
print(f"  idler photons / area     = {rep.n_idler:.6e}")
print(f"  signal photons / area    = {rep.n_signal:.6e}")
print(f"  identity residual        = {rep.identity_residual():.2e}")

forward, backward = rainbow_split(rep)
print(f"  forward rainbow share    = {forward:.4f} "
      f"(backward {backward:.4f})")

print()
print("blue-red pair (0.4 / 0.6 of the pump) on the stronger calibration:")
br = blue_red_scenario()
rep_red = channel_report(br, 0.4, kind="pdc")
print(f"  red channel flux   = {rep_red.flux_omega:.6e}")
print(f"  blue channel flux  = {rep_red.flux_partner:.6e}")
print(f"  red per blue       = {rep_red.ratio:.4f}  "
      "(cosine ratio of the two rainbow angles)")
