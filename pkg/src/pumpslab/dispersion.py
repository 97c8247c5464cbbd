"""Real refractive-index models mu(omega) over a validity band.

Units follow the c = 1 convention throughout: frequencies carry inverse
length, so omega * mu(omega) is directly a wavenumber.  Three model kinds
are supported:

``constant``
    mu(omega) = value everywhere in the band.
``rational``
    mu(omega)^2 = a + b / (c - omega^2), a single-pole Sellmeier-like
    form with the pole kept outside the band.
``tabulated``
    monotone cubic (PCHIP) interpolation of mu^2 through sample points;
    band is the sampled interval.

Models are immutable after construction and validated up front: mu must
be real and >= 1 everywhere in the band, and evaluation outside the band
is an error, never an extrapolation.
"""
import math

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import CalibrationError, OutOfBandError

_KINDS = ("constant", "rational", "tabulated")
_VALIDATION_SAMPLES = 1024
_MU_FLOOR = 1.0 - 1e-12


class DispersionModel:
    """Evaluable refractive index mu(omega) with a hard validity band."""

    def __init__(self, kind, parameters, band):
        if kind not in _KINDS:
            raise ValueError(f"unknown dispersion kind {kind!r}")
        lo, hi = float(band[0]), float(band[1])
        if not (0.0 < lo < hi):
            raise ValueError(f"band must satisfy 0 < lo < hi, got ({lo}, {hi})")
        self.kind = kind
        self.parameters = dict(parameters)
        self.band = (lo, hi)
        self._interp = None
        if kind == "tabulated":
            omegas = np.asarray(self.parameters["omegas"], dtype=float)
            mu_sq = np.asarray(self.parameters["mu_squared"], dtype=float)
            if omegas.ndim != 1 or omegas.size < 2 or omegas.size != mu_sq.size:
                raise ValueError("tabulated model needs matching 1-d samples")
            if np.any(np.diff(omegas) <= 0):
                raise ValueError("tabulated sample frequencies must increase")
            if not (math.isclose(omegas[0], lo) and math.isclose(omegas[-1], hi)):
                raise ValueError("tabulated band must span the sample points")
            self._interp = PchipInterpolator(omegas, mu_sq, extrapolate=False)
        self._validate()

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, value, band=(1e-12, 1e12)):
        return cls("constant", {"value": float(value)}, band)

    @classmethod
    def rational(cls, a, b, c, band):
        return cls("rational", {"a": float(a), "b": float(b), "c": float(c)}, band)

    @classmethod
    def tabulated(cls, omegas, mu_squared):
        omegas = [float(w) for w in omegas]
        return cls(
            "tabulated",
            {"omegas": omegas, "mu_squared": [float(m) for m in mu_squared]},
            (omegas[0], omegas[-1]),
        )

    # -- evaluation --------------------------------------------------------
    def _mu_squared_raw(self, omega):
        p = self.parameters
        if self.kind == "constant":
            return np.full_like(omega, p["value"] ** 2, dtype=float)
        if self.kind == "rational":
            return p["a"] + p["b"] / (p["c"] - omega * omega)
        return self._interp(omega)

    def mu(self, omega):
        """Refractive index at omega (scalar or array), band-checked."""
        w = np.asarray(omega, dtype=float)
        lo, hi = self.band
        if np.any(w < lo) or np.any(w > hi):
            raise OutOfBandError(
                f"frequency {omega} outside dispersion band [{lo:g}, {hi:g}]"
            )
        out = np.sqrt(self._mu_squared_raw(w))
        return float(out) if np.ndim(omega) == 0 else out

    def _validate(self):
        lo, hi = self.band
        w = np.linspace(lo, hi, _VALIDATION_SAMPLES)
        if self.kind == "rational":
            c = self.parameters["c"]
            if lo * lo <= c <= hi * hi:
                raise ValueError("rational-model pole lies inside the band")
        m2 = self._mu_squared_raw(w)
        if not np.all(np.isfinite(m2)) or np.any(m2 < _MU_FLOOR**2):
            raise ValueError("mu(omega) must be real and >= 1 across the band")

    # -- serialization -----------------------------------------------------
    def to_record(self):
        """Flat key=value text record, round-trip stable to full precision."""
        lines = [
            f"kind={self.kind}",
            f"band_lo={self.band[0]:.17g}",
            f"band_hi={self.band[1]:.17g}",
        ]
        for key, value in sorted(self.parameters.items()):
            if isinstance(value, (list, tuple)):
                joined = ",".join(f"{v:.17g}" for v in value)
                lines.append(f"{key}={joined}")
            else:
                lines.append(f"{key}={value:.17g}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_record(cls, text):
        fields = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            fields[key.strip()] = value.strip()
        try:
            kind = fields.pop("kind")
            band = (float(fields.pop("band_lo")), float(fields.pop("band_hi")))
        except KeyError as exc:
            raise ValueError(f"model record missing field: {exc}") from exc
        params = {}
        for key, value in fields.items():
            if "," in value:
                params[key] = [float(v) for v in value.split(",")]
            else:
                params[key] = float(value)
        return cls(kind, params, band)

    def __repr__(self):
        lo, hi = self.band
        return f"DispersionModel(kind={self.kind!r}, band=({lo:g}, {hi:g}))"


def calibrate_degenerate_angle(theta_d, mu2, omega0=1.0, band=None):
    """Build a model whose collinear-pair emission peaks at exterior angle
    theta_d (radians) for the half-pump frequency.

    The returned model pins mu at omega0/2, omega0 and 3*omega0/2 so that

        mu(omega0/2)^2 - mu(omega0)^2 = sin(theta_d)^2
        mu(3*omega0/2)^2 = mu(omega0)^2 - sin(theta_d)^2

    and continues the same straight line in mu^2 across the band, which the
    monotone interpolation reproduces exactly.
    """
    if not 0.0 <= theta_d < math.pi / 2:
        raise CalibrationError("target angle must lie in [0, 90) degrees")
    if mu2 <= 1.0:
        raise CalibrationError("pump-frequency index mu2 must exceed 1")
    if band is None:
        band = (0.05 * omega0, 2.5 * omega0)
    lo, hi = band
    if not (0.0 < lo <= 0.5 * omega0 and hi >= 1.5 * omega0):
        raise CalibrationError("band must cover [omega0/2, 3*omega0/2]")
    q_d = math.sin(theta_d) ** 2

    def mu_squared(w):
        return mu2 * mu2 + 2.0 * q_d * (1.0 - w / omega0)

    anchors = sorted({lo, 0.5 * omega0, omega0, 1.5 * omega0, hi})
    values = [mu_squared(w) for w in anchors]
    if min(values) < 1.0:
        raise CalibrationError(
            f"target angle {math.degrees(theta_d):.3f} deg forces mu < 1 "
            f"inside band [{lo:g}, {hi:g}]"
        )
    return DispersionModel.tabulated(anchors, values)
