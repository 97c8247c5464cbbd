"""Brute-force validators for the iterative/incoherent approximations.

Two independent references live here:

exact_solve
    Direct solution of the eight continuity equations (field and normal
    derivative, both frequencies, both faces) using the exact quartic
    wavenumbers.  Every interference phase the two-step iteration and the
    incoherent series discard is kept, which makes this the anchor all
    approximations are measured against.  Real slabs are never cut to a
    fraction of a wavelength, so comparisons average the fast thickness
    phase over one period.

series_sum
    Explicit numerical summation of the multiple-reflection intensity
    series whose closed forms the coupled module uses.
"""
import math
from dataclasses import dataclass, replace

import numpy as np

from .coupled import ScatterSolution, coupling_strength
from .errors import ConditioningError, SeriesDomainError
from .kinematics import longitudinal

COND_LIMIT = 1e12
RESIDUAL_LIMIT = 1e-10
UNKNOWN_LABELS = ("R1", "R2", "T1", "T2", "A1", "A2", "A3", "A4")


@dataclass(frozen=True)
class BoundarySystem:
    """8x8 continuity system in the unknowns (R1, R2, T1, T2, c1..c4).

    c_r scale unit-normalized internal mode vectors; modes carry the
    omega-field and conjugate-field components of one quartic root each.
    """

    matrix: np.ndarray
    rhs: np.ndarray
    mode_vectors: np.ndarray  # (4, 2) columns: omega-field, partner-field
    wavenumbers: np.ndarray
    cond: float


def _quartic_roots_raw(scenario, kin):
    """Quartic roots without anchor sorting (order is irrelevant here)."""
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
    return np.roots(coeffs), K0, A, B, G, sign


def build_boundary_system(scenario, omega, p, kind):
    """Assemble the continuity equations for one incident unit mode.

    Requires g > 0; at g = 0 the paired wavenumbers coincide and the
    system degenerates into two independent single-frequency problems,
    which exact_solve handles separately.
    """
    if scenario.g == 0.0:
        raise ValueError("coupled system needs g > 0; use exact_solve at g = 0")
    kin = longitudinal(scenario, omega, p, kind)
    roots, K0, A, B, G, sign = _quartic_roots_raw(scenario, kin)
    wpart = kin.partner_frequency
    C1 = scenario.g * omega * scenario.omega0
    l = scenario.l

    vectors = np.zeros((4, 2), dtype=complex)
    for j, k in enumerate(roots):
        F1 = k * k - A
        F2 = (k + sign * K0) ** 2 - B
        if abs(F1) <= abs(F2):
            a, b = F2, G / C1  # root of the omega-like factor
        else:
            a, b = C1, F1  # root of the conjugate-like factor
        norm = max(abs(a), abs(b))
        vectors[j] = (a / norm, b / norm)

    # carriers: omega field a e^{ikz}; conjugate field i b e^{i(k + s K0) z}
    M = np.zeros((8, 8), dtype=complex)
    rhs = np.zeros(8, dtype=complex)
    for j, k in enumerate(roots):
        a, b = vectors[j]
        kp = k + sign * K0
        phase = np.exp(1j * k * l)
        phase_p = np.exp(1j * kp * l)
        M[0, 4 + j] = -a
        M[1, 4 + j] = -1j * k * a
        M[2, 4 + j] = -1j * b
        M[3, 4 + j] = kp * b
        M[4, 4 + j] = -a * phase
        M[5, 4 + j] = -1j * k * a * phase
        M[6, 4 + j] = -1j * b * phase_p
        M[7, 4 + j] = kp * b * phase_p
    W10, W20 = kin.Omega10, kin.Omega20
    M[0, 0] = 1.0
    M[1, 0] = -1j * W10
    M[4, 2] = np.exp(1j * W10 * l)
    M[5, 2] = 1j * W10 * np.exp(1j * W10 * l)
    if kind == "pdc":
        # conjugate amplitudes: reflected rides e^{+i W20 z}, transmitted
        # e^{-i W20 z} (the physical wave is the complex conjugate)
        M[2, 1] = 1.0
        M[3, 1] = 1j * W20
        M[6, 3] = np.exp(-1j * W20 * l)
        M[7, 3] = -1j * W20 * np.exp(-1j * W20 * l)
    else:
        M[2, 1] = 1.0
        M[3, 1] = -1j * W20
        M[6, 3] = np.exp(1j * W20 * l)
        M[7, 3] = 1j * W20 * np.exp(1j * W20 * l)
    rhs[0] = -1.0
    rhs[1] = -1j * W10
    cond = float(np.linalg.cond(M))
    return BoundarySystem(
        matrix=M, rhs=rhs, mode_vectors=vectors, wavenumbers=roots, cond=cond
    )


def _linear_slab_solution(W0, W, l):
    """Coherent single-frequency slab: returns (R, T, a_fwd, a_bwd)."""
    M = np.array(
        [
            [1.0, 0.0, -1.0, -1.0],
            [-W0, 0.0, -W, W],
            [0.0, np.exp(1j * W0 * l), -np.exp(1j * W * l), -np.exp(-1j * W * l)],
            [0.0, W0 * np.exp(1j * W0 * l), -W * np.exp(1j * W * l),
             W * np.exp(-1j * W * l)],
        ],
        dtype=complex,
    )
    rhs = np.array([-1.0, -W0, 0.0, 0.0], dtype=complex)
    R, T, fwd, bwd = np.linalg.solve(M, rhs)
    return R, T, fwd, bwd


def exact_solve(scenario, omega, p, kind):
    """All eight amplitudes from the full continuity system.

    Refuses ill-conditioned systems (cond > 1e12) instead of returning
    noise; the returned solution keeps every interference phase.
    """
    kin = longitudinal(scenario, omega, p, kind)
    if scenario.g == 0.0:
        R, T, fwd, bwd = _linear_slab_solution(kin.Omega10, kin.Omega1, scenario.l)
        return ScatterSolution(
            R1=R, R2=0.0, T1=T, T2=0.0, A1=fwd, A2=0.0, A3=bwd, A4=0.0,
            kind=kind, method="exact", cond=1.0,
        )
    system = build_boundary_system(scenario, omega, p, kind)
    if system.cond > COND_LIMIT:
        raise ConditioningError(
            f"boundary system condition number {system.cond:.3e} exceeds "
            f"{COND_LIMIT:g} (omega={omega:g}, p={p:g}, kind={kind})",
            cond=system.cond,
        )
    x = np.linalg.solve(system.matrix, system.rhs)
    residual = np.abs(system.matrix @ x - system.rhs).max()
    scale = max(np.abs(system.rhs).max(), 1.0)
    if residual > RESIDUAL_LIMIT * scale:
        raise ConditioningError(
            f"continuity residual {residual:.3e} above {RESIDUAL_LIMIT:g} "
            f"(cond={system.cond:.3e})",
            cond=system.cond,
        )
    c = x[4:]
    amps = system.mode_vectors
    return ScatterSolution(
        R1=x[0],
        R2=x[1],
        T1=x[2],
        T2=x[3],
        A1=c[0] * amps[0, 0],
        A2=c[1] * amps[1, 0],
        A3=c[2] * amps[2, 0],
        A4=c[3] * amps[3, 1],
        kind=kind,
        method="exact",
        cond=system.cond,
    )


def poynting_intensities(scenario, omega, p, kind, solution=None):
    """Intensity coefficients (r1, t1, r2, t2) of an exact solution.

    Every coefficient is a z-Poynting ratio against the incident wave.
    """
    kin = longitudinal(scenario, omega, p, kind)
    if solution is None:
        solution = exact_solve(scenario, omega, p, kind)
    conv = kin.Omega20 / kin.Omega10
    return {
        "r1": abs(solution.R1) ** 2,
        "t1": abs(solution.T1) ** 2,
        "r2": abs(solution.R2) ** 2 * conv,
        "t2": abs(solution.T2) ** 2 * conv,
    }


def thickness_averaged_intensities(scenario, omega, p, kind, phases=64):
    """Intensity coefficients averaged over one fast thickness period.

    Scans l across 2*pi/Omega1 in `phases` uniform steps, holding the
    slow gain envelope essentially fixed (valid for Omega1 * l >> 1).
    """
    kin = longitudinal(scenario, omega, p, kind)
    period = 2.0 * math.pi / kin.Omega1
    acc = {"r1": 0.0, "t1": 0.0, "r2": 0.0, "t2": 0.0}
    worst_cond = 0.0
    for j in range(phases):
        varied = replace(scenario, l=scenario.l + j * period / phases)
        sol = exact_solve(varied, omega, p, kind)
        vals = poynting_intensities(varied, omega, p, kind, solution=sol)
        worst_cond = max(worst_cond, sol.cond)
        for key in acc:
            acc[key] += vals[key]
    out = {key: val / phases for key, val in acc.items()}
    out["cond"] = worst_cond
    return out


def series_sum(r10, r20, gamma, omega, omega0, kind="pdc", terms=40):
    """Numerically summed multiple-reflection series, first order in gamma.

    Returns (r1, t1, r2, t2).  Matches the closed forms to the geometric
    truncation error r^(2*terms).
    """
    for name, r in (("r10", r10), ("r20", r20)):
        if not 0.0 <= r < 1.0:
            raise SeriesDomainError(f"{name}={r:g} outside [0, 1); series diverges")
    t10, t20 = 1.0 - r10, 1.0 - r20
    sign = 1.0 if kind == "pdc" else -1.0
    partner = omega0 - omega if kind == "pdc" else omega0 + omega
    freq_ratio = partner / omega
    r1 = r10
    for n in range(1, terms + 1):
        r1 += r10 ** (2 * n - 1) * t10 * t10 * (1.0 + sign * n * gamma)
    t1 = 0.0
    for n in range(terms + 1):
        t1 += t10 * t10 * r10 ** (2 * n) * (1.0 + sign * (n + 1) * gamma)
    r2 = 0.0
    t2 = 0.0
    for m in range(terms + 1):
        for n in range(terms + 1):
            base = freq_ratio * gamma * t10 * t20 * r10 ** (2 * m)
            r2 += base * r20 ** (2 * n + 1)
            t2 += base * r20 ** (2 * n)
    return r1, t1, r2, t2
