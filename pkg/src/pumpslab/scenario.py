"""Pumped-crystal scenario: pump frequency, coupling, thickness, dispersion."""
import warnings
from dataclasses import dataclass, field

from .dispersion import DispersionModel
from .errors import ValidityWarning

DEFAULT_GUARD_WIDTH = 0.02
DEFAULT_G_WARN = 1e-2


@dataclass(frozen=True)
class CrystalScenario:
    """Immutable description of one pumped slab.

    omega0: pump frequency (c = 1 units).
    g: effective dimensionless pump-nonlinearity coupling; the linearized
       model is only trustworthy for g << 1.
    l: slab thickness.
    dispersion: refractive-index model; omega0 must lie in its band.
    guard_width: frequencies within guard_width * omega0 of any multiple
       of omega0 are rejected by the kinematics layer.
    """

    omega0: float
    g: float
    l: float
    dispersion: DispersionModel
    guard_width: float = DEFAULT_GUARD_WIDTH
    g_warn_threshold: float = field(default=DEFAULT_G_WARN, repr=False)

    def __post_init__(self):
        if self.omega0 <= 0.0:
            raise ValueError("pump frequency omega0 must be positive")
        if self.g < 0.0:
            raise ValueError("coupling g must be non-negative")
        if self.l <= 0.0:
            raise ValueError("thickness l must be positive")
        if not 0.0 <= self.guard_width < 0.5:
            raise ValueError("guard_width must lie in [0, 0.5)")
        self.dispersion.mu(self.omega0)  # raises OutOfBandError if outside
        if self.g >= self.g_warn_threshold:
            warnings.warn(
                f"coupling g={self.g:g} is at or above the validity "
                f"threshold {self.g_warn_threshold:g}; linearized results "
                "may be unreliable",
                ValidityWarning,
                stacklevel=2,
            )

    def pump_wavenumber(self):
        """omega0 * mu(omega0), the pump's longitudinal wavenumber."""
        return self.omega0 * self.dispersion.mu(self.omega0)
