"""Pump-coupled mode pairs: wavenumber shifts, boundary amplitudes, fluxes.

Inside the pumped slab a mode at omega is coupled to its conjugate at
omega0 - omega (down-conversion) or omega0 + omega (up-conversion).  The
four internal wavenumbers k_r solve a quartic compatibility condition;
for weak coupling two of them sit a small shift eps away from the
uncoupled value and carry all the interesting physics.  The product of
the paired shifts is positive for down-conversion (imaginary shifts on
resonance: gain) and negative for up-conversion (real shifts: the input
beam is attenuated below its zeropoint level).

Intensity bookkeeping follows the incoherent multiple-reflection
approximation of the linear-lamina module, with every pass through the
slab picking up the first-order excess factor gamma.
"""
import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateRootError,
    GeometryError,
    SingularCouplingError,
    UndefinedSplitError,
    ValidityWarning,
)
from .kinematics import pdc_resonance, puc_resonance
from .lamina import fresnel_step

DETUNING_WARN_FRACTION = 0.01
_SINC_SERIES_CUTOFF = 1e-4


def csinc(z):
    """sin(z)/z on complex arguments, series-evaluated near the origin."""
    z = complex(z)
    if abs(z) < _SINC_SERIES_CUTOFF:
        z2 = z * z
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0
    return cmath.sin(z) / z


@dataclass(frozen=True)
class EpsilonRoots:
    """Wavenumber shifts of the four internal modes for one working p.

    eps1, eps2 shift the strongly coupled pair away from the uncoupled
    wavenumber; eps1 is the root that vanishes as g -> 0 at fixed
    detuning.  eps3 and eps4 shift the two counter-propagating modes.
    xi = (eps1 - eps2) * l / 2 is purely real (up-conversion) or purely
    imaginary (down-conversion on resonance), so sinc(xi)^2 is real.
    """

    eps1: complex
    eps2: complex
    eps3: float
    eps4: float
    xi: complex
    kind: str
    detuning_sum: float
    product: float

    @property
    def sinc_sq(self):
        s = csinc(self.xi)
        return (s * s).real


def _pair_frequencies(scenario, res):
    omega = res.omega
    if res.kind == "pdc":
        return omega, scenario.omega0 - omega
    return omega, scenario.omega0 + omega


def epsilon_roots(scenario, res, p=None, detuning_warn_fraction=DETUNING_WARN_FRACTION):
    """Perturbative wavenumber shifts at working transverse wavenumber p.

    res holds the resonance-point wavenumbers (omega1, omega2, ...); p
    defaults to the resonant p0.  Valid for g << 1 and |p - p0| << omega;
    a ValidityWarning is issued outside the configured detuning fraction.
    """
    omega, partner = _pair_frequencies(scenario, res)
    w1, w2 = res.omega1, res.omega2
    if w1 <= 0.0 or w2 <= 0.0:
        raise GeometryError("resonant internal wavenumbers must be positive")
    if p is None:
        p = res.p0
    if abs(p - res.p0) > detuning_warn_fraction * omega:
        warnings.warn(
            f"|p - p0| = {abs(p - res.p0):g} exceeds "
            f"{detuning_warn_fraction:g} * omega; shift formulas degrade",
            ValidityWarning,
            stacklevel=2,
        )
    g, w0 = scenario.g, scenario.omega0
    strength = g * g * w0 * w0 * omega * partner
    if res.kind == "pdc":
        detuning = (p - res.p0) * res.p0 * (w1 + w2) / (w1 * w2)
        product = strength / (4.0 * w1 * w2)
        eps3 = -strength / (8.0 * (w1 + w2) * w1 * w1)
        eps4 = +strength / (8.0 * (w1 + w2) * w2 * w2)
    else:
        detuning = (p - res.p0) * res.p0 * (w2 - w1) / (w1 * w2)
        product = -strength / (4.0 * w1 * w2)
        eps3 = +strength / (8.0 * (w2 - w1) * w1 * w1)
        eps4 = -strength / (8.0 * (w2 - w1) * w2 * w2)
    root = cmath.sqrt(detuning * detuning - 4.0 * product)
    cand = ((detuning + root) / 2.0, (detuning - root) / 2.0)
    a0, a1 = abs(cand[0]), abs(cand[1])
    if abs(a0 - a1) > 1e-12 * max(a0, a1, 1e-300):
        eps1, eps2 = cand if a0 < a1 else (cand[1], cand[0])
    else:
        # symmetric pair: put the +imaginary (or +real) branch first
        key = (cand[0].imag, cand[0].real)
        eps1, eps2 = cand if key >= (cand[1].imag, cand[1].real) else (cand[1], cand[0])
    xi = (eps1 - eps2) * scenario.l / 2.0
    return EpsilonRoots(
        eps1=eps1,
        eps2=eps2,
        eps3=eps3,
        eps4=eps4,
        xi=xi,
        kind=res.kind,
        detuning_sum=detuning,
        product=product,
    )


def coupling_strength(scenario, omega, kind):
    """Right-hand side of the quartic compatibility condition."""
    partner = scenario.omega0 - omega if kind == "pdc" else scenario.omega0 + omega
    return scenario.g**2 * scenario.omega0**2 * omega * partner


def quartic_anchors(scenario, kin):
    """Uncoupled wavenumbers the four quartic roots collapse to at g = 0."""
    K0 = scenario.pump_wavenumber()
    if kin.conjugate_kind == "pdc":
        k4 = K0 + kin.Omega2
    else:
        k4 = -(K0 + kin.Omega2)
    return kin.Omega1, -kin.Omega1, k4


def quartic_wavenumbers(scenario, kin):
    """The four exact internal wavenumbers, sorted to match the anchors.

    Roots of (k^2 - Omega1^2)((k -+ K0)^2 - Omega2^2) = strength, with the
    pump wavenumber K0 entering with a minus sign for down-conversion and
    a plus sign for up-conversion (the conjugate wave is carried against /
    along the pump phase respectively).  Returned as [k1, k2, k3, k4]
    where k1, k2 hug +Omega1, k3 hugs -Omega1 and k4 is the far
    counter-propagating partner root.
    """
    K0 = scenario.pump_wavenumber()
    A = kin.Omega1**2
    B = kin.Omega2**2
    G = coupling_strength(scenario, kin.omega, kin.conjugate_kind)
    sign = -1.0 if kin.conjugate_kind == "pdc" else 1.0
    coeffs = [
        1.0,
        2.0 * sign * K0,
        K0 * K0 - B - A,
        -2.0 * A * sign * K0,
        -A * (K0 * K0 - B) - G,
    ]
    roots = np.roots(coeffs)
    a12, a3, a4 = quartic_anchors(scenario, kin)
    scale = max(abs(a12), abs(a4))

    order4 = sorted(range(4), key=lambda i: abs(roots[i] - a4))
    gap4 = abs(abs(roots[order4[0]] - a4) - abs(roots[order4[1]] - a4))
    k4 = roots[order4[0]]
    rest = [roots[i] for i in order4[1:]]
    order3 = sorted(range(3), key=lambda i: abs(rest[i] - a3))
    gap3 = abs(abs(rest[order3[0]] - a3) - abs(rest[order3[1]] - a3))
    k3 = rest[order3[0]]
    pair = [rest[i] for i in order3[1:]]
    if min(gap4, gap3) < 1e-12 * scale:
        alt = np.array([pair[0], pair[1], rest[order3[1]], roots[order4[1]]])
        raise DegenerateRootError(
            "two quartic roots are equidistant from the sorting anchors",
            assignments=(np.array([pair[0], pair[1], k3, k4]), alt),
        )
    d0, d1 = abs(pair[0] - a12), abs(pair[1] - a12)
    if abs(d0 - d1) > 1e-12 * max(d0, d1, 1e-300):
        k1, k2 = (pair[0], pair[1]) if d0 < d1 else (pair[1], pair[0])
    else:
        key0 = ((pair[0] - a12).imag, (pair[0] - a12).real)
        key1 = ((pair[1] - a12).imag, (pair[1] - a12).real)
        k1, k2 = (pair[0], pair[1]) if key0 >= key1 else (pair[1], pair[0])
    return np.array([k1, k2, k3, k4])


@dataclass(frozen=True)
class FirstIteration:
    """Amplitudes from matching only the entry face (exit face ignored)."""

    R1: float
    R2: float
    A1: complex
    A2: complex


def first_iteration(scenario, res, eps):
    """First boundary-matching pass: reflected and coupled-pair amplitudes.

    The conjugate reflection R2 vanishes identically at this order; the
    pair amplitudes satisfy A1 + A2 = 1 + R1 (field continuity) and
    eps1*A1 + eps2*A2 = 0.
    """
    if eps.eps1 == eps.eps2:
        raise SingularCouplingError(
            "coupled-pair shifts are degenerate; no unique first iteration"
        )
    w1, w10 = res.omega1, res.omega10
    denom = (eps.eps2 - eps.eps1) * (w10 + w1)
    return FirstIteration(
        R1=(w10 - w1) / (w10 + w1),
        R2=0.0,
        A1=2.0 * eps.eps2 * w10 / denom,
        A2=-2.0 * eps.eps1 * w10 / denom,
    )


@dataclass(frozen=True)
class ScatterSolution:
    """Eight boundary-matching amplitudes for one incident unit mode."""

    R1: complex
    R2: complex
    T1: complex
    T2: complex
    A1: complex
    A2: complex
    A3: complex
    A4: complex
    kind: str
    method: str = "iteration"
    cond: float = 0.0


def _linear_limit_solution(res):
    w1, w10 = res.omega1, res.omega10
    R1 = (w10 - w1) / (w10 + w1)
    return ScatterSolution(
        R1=R1,
        R2=0.0,
        T1=4.0 * w1 * w10 / (w1 + w10) ** 2,
        T2=0.0,
        A1=1.0 + R1,
        A2=0.0,
        A3=2.0 * (w1 - w10) * w10 / (w1 + w10) ** 2,
        A4=0.0,
        kind=res.kind,
        method="iteration",
    )


def output_amplitudes(scenario, res, eps, first=None):
    """Exit-face amplitudes of the two-step iteration (phases dropped).

    Completes first_iteration with the transmitted amplitudes T1, T2 and
    the internal backward amplitudes A3, A4.  Overall phase factors and
    near-unity dissipation factors are not tracked; only the intensity
    bookkeeping downstream is meaningful to higher accuracy.

    The fully degenerate case (g = 0 on resonance, eps1 = eps2 = 0) falls
    back to the plain linear-slab amplitudes instead of the coupled
    formulas, which are singular there.
    """
    if first is None:
        if eps.eps1 == eps.eps2:
            return _linear_limit_solution(res)
        first = first_iteration(scenario, res, eps)
    omega, partner = _pair_frequencies(scenario, res)
    g, l, w0 = scenario.g, scenario.l, scenario.omega0
    w1, w2, w10, w20 = res.omega1, res.omega2, res.omega10, res.omega20
    sinc = csinc(eps.xi)
    envelope = 1.0 - 1j * eps.eps1 * l * cmath.exp(-1j * eps.xi) * sinc
    T1 = 4.0 * w1 * w10 / (w1 + w10) ** 2 * envelope
    T2 = 2.0 * g * l * w0 * w10 * partner / ((w1 + w10) * (w2 + w20)) * sinc
    A3 = 2.0 * (w1 - w10) * w10 / (w1 + w10) ** 2 * envelope
    A4 = (
        g * l * w0 * w10 * (w2 - w20) * partner
        / (w2 * (w1 + w10) * (w2 + w20))
        * sinc
    )
    return ScatterSolution(
        R1=first.R1,
        R2=first.R2,
        T1=T1,
        T2=T2,
        A1=first.A1,
        A2=first.A2,
        A3=A3,
        A4=A4,
        kind=res.kind,
        method="iteration",
    )


@dataclass(frozen=True)
class ChannelReport:
    """Intensity coefficients and zeropoint-subtracted fluxes for one pair.

    Fluxes are photon numbers per unit area per unit zeropoint input;
    flux_omega combines the idler at omega with the signal generated by
    the conjugate input, flux_partner the same for the other channel.
    For up-conversion flux_partner is negative: that channel stays below
    the zeropoint level and triggers no detections.
    """

    omega: float
    partner: float
    kind: str
    p0: float
    p: float
    theta: float
    theta_partner: float
    gamma: float
    r10: float
    r20: float
    t10: float
    t20: float
    r1: float
    t1: float
    r2: float
    t2: float
    n_idler: float
    n_signal: float
    flux_omega: float
    flux_partner: float
    ratio: float
    xi: complex

    def identity_residual(self):
        """Relative residual of the single-pair flux identity."""
        lhs = self.t1 + self.r1 - 1.0
        if self.kind == "puc":
            lhs = -lhs
        mid = (self.omega / self.partner) * (self.t2 + self.r2)
        rhs = self.gamma / (1.0 + self.r10)
        scale = max(abs(rhs), 1e-300)
        return max(abs(lhs - rhs), abs(mid - rhs)) / scale


def channel_report(scenario, omega, kind="pdc", p=None):
    """Full intensity/flux report for the (omega, conjugate) pair.

    Resonance geometry is solved first; p (default: the resonant p0)
    detunes the coupled-pair shifts without moving the rainbow angles.
    """
    res = pdc_resonance(scenario, omega) if kind == "pdc" else puc_resonance(
        scenario, omega
    )
    eps = epsilon_roots(scenario, res, p=p)
    omega_, partner = _pair_frequencies(scenario, res)
    g, l, w0 = scenario.g, scenario.l, scenario.omega0
    w1, w2, w10, w20 = res.omega1, res.omega2, res.omega10, res.omega20
    gamma = (
        g * g * l * l * w0 * w0 * omega_ * partner / (4.0 * w1 * w2) * eps.sinc_sq
    )
    r10 = fresnel_step(w10, w1).r0
    r20 = fresnel_step(w20, w2).r0
    sign = 1.0 if kind == "pdc" else -1.0
    r1 = 2.0 * r10 / (1.0 + r10) + sign * gamma * r10 / (1.0 + r10) ** 2
    t1 = (1.0 - r10) / (1.0 + r10) + sign * gamma / (1.0 + r10) ** 2
    freq_ratio = partner / omega_
    r2 = freq_ratio * gamma * r20 / ((1.0 + r10) * (1.0 + r20))
    t2 = freq_ratio * gamma / ((1.0 + r10) * (1.0 + r20))
    n_idler = (t1 + r1 - 1.0) / 2.0
    n_signal = (t2 + r2) * w10 / (2.0 * w20)
    cos_ratio = (w20 / partner) / (w10 / omega_)
    if kind == "pdc":
        bracket_omega = 1.0 / (1.0 + r10) + cos_ratio / (1.0 + r20)
        bracket_partner = 1.0 / (1.0 + r20) + (1.0 / cos_ratio) / (1.0 + r10)
    else:
        bracket_omega = cos_ratio / (1.0 + r20) - 1.0 / (1.0 + r10)
        bracket_partner = (1.0 / cos_ratio) / (1.0 + r10) - 1.0 / (1.0 + r20)
    return ChannelReport(
        omega=omega_,
        partner=partner,
        kind=kind,
        p0=res.p0,
        p=res.p0 if p is None else p,
        theta=res.theta,
        theta_partner=math.asin(res.p0 / partner),
        gamma=gamma,
        r10=r10,
        r20=r20,
        t10=1.0 - r10,
        t20=1.0 - r20,
        r1=r1,
        t1=t1,
        r2=r2,
        t2=t2,
        n_idler=n_idler,
        n_signal=n_signal,
        flux_omega=0.5 * gamma * bracket_omega,
        flux_partner=0.5 * gamma * bracket_partner,
        ratio=bracket_omega / bracket_partner,
        xi=eps.xi,
    )


def rainbow_split(report):
    """(forward, backward) shares of the total outgoing intensity.

    The forward rainbow carries (t1, t2), the backward one (r1, r2);
    without pump-induced excess there is no rainbow to split.
    """
    if report.gamma == 0.0:
        raise UndefinedSplitError("no pump-induced excess; split undefined")
    forward = report.t1 + report.t2
    backward = report.r1 + report.r2
    total = forward + backward
    return forward / total, backward / total
