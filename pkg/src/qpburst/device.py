"""Static device and environment parameters.

All energies are in frequency units (GHz = E/h), temperatures in kelvin,
volumes in any common arbitrary unit (only the ratio V_H/V_L enters).
"""

import math
from dataclasses import dataclass, field

from .constants import KB_GHZ_PER_K
from .errors import ParameterError

__all__ = ["DeviceParams", "QPBath", "TunnelRates", "ChipThermalModel"]


@dataclass(frozen=True)
class DeviceParams:
    """Transmon and junction parameters.

    Attributes
    ----------
    e_j, e_c : float
        Josephson and charging energy (GHz).  The transmon limit
        e_j/e_c > 10 is enforced because the charge matrix elements used in
        the tunneling rates assume it.
    f_q : float
        0-1 transition frequency (GHz).
    f_12 : float
        1-2 transition frequency (GHz); defaults to f_q - e_c.
    delta : float
        Superconducting gap of the low-gap (thick) film (GHz).
    d_delta : float
        Gap difference between the two junction films (GHz, >= 0).
    v_l, v_h : float
        Low-gap and high-gap film volumes (arbitrary common units).
    nu_0 : float or None
        Normal-state density of states (per energy per volume); optional,
        only needed to convert normalized QP densities to absolute ones.
    """

    e_j: float
    e_c: float
    f_q: float
    delta: float
    d_delta: float
    v_l: float
    v_h: float
    f_12: float | None = None
    nu_0: float | None = None
    name: str = ""

    def __post_init__(self):
        if self.f_12 is None:
            object.__setattr__(self, "f_12", self.f_q - self.e_c)
        if not (self.e_j > 0 and self.e_c > 0):
            raise ParameterError("e_j and e_c must be positive")
        if self.e_j / self.e_c <= 10:
            raise ParameterError(
                f"e_j/e_c = {self.e_j / self.e_c:.2f} violates the transmon limit (> 10)"
            )
        if not self.delta > 0:
            raise ParameterError("delta must be positive")
        if self.d_delta < 0:
            raise ParameterError("d_delta must be non-negative")
        if self.delta < 5 * self.f_q:
            raise ParameterError(
                f"delta = {self.delta} GHz too close to f_q = {self.f_q} GHz "
                "(require delta >= 5 f_q)"
            )
        if not self.v_l > 0 or self.v_h < 0:
            raise ParameterError("require v_l > 0 and v_h >= 0")
        if not (self.f_q > 0 and self.f_12 > 0):
            raise ParameterError("transition frequencies must be positive")

    @property
    def delta_high(self) -> float:
        """Gap of the high-gap film, delta + d_delta (GHz)."""
        return self.delta + self.d_delta

    @property
    def delta_bar(self) -> float:
        """Junction-averaged gap, delta + d_delta/2 (GHz)."""
        return self.delta + 0.5 * self.d_delta


@dataclass(frozen=True)
class QPBath:
    """Quasiparticle environment: temperature and resident density.

    ``x_qp_ne`` is the nonequilibrium resident density in Cooper-pair units,
    normalized to the low-gap film volume.  ``mu`` is an optional effective
    chemical potential (GHz); when given it must be consistent with
    ``x_qp_ne`` through the Maxwell-Boltzmann density relation.
    """

    temperature: float
    x_qp_ne: float
    mu: float | None = None

    def __post_init__(self):
        if not self.temperature > 0:
            raise ParameterError("temperature must be positive")
        if self.x_qp_ne < 0:
            raise ParameterError("x_qp_ne must be non-negative")

    def validate_mu(self, device: DeviceParams, rtol: float = 1e-9) -> None:
        """Check that an explicitly supplied mu reproduces x_qp_ne."""
        if self.mu is None:
            return
        kt = KB_GHZ_PER_K * self.temperature
        x_from_mu = math.sqrt(2 * math.pi * kt / device.delta) * math.exp(
            -(device.delta - self.mu) / kt
        )
        ref = max(self.x_qp_ne, 1e-300)
        if abs(x_from_mu - self.x_qp_ne) > rtol * ref:
            raise ParameterError(
                f"mu = {self.mu} GHz inconsistent with x_qp_ne = {self.x_qp_ne} "
                f"(implies {x_from_mu:.6e})"
            )


@dataclass(frozen=True)
class TunnelRates:
    """Partial QP tunneling rates Gamma_ij in 1/s for levels {0, 1, 2}.

    Totals follow the definitions Gamma0 = G00 + G01 and
    Gamma1 = G10 + G11 + G12.
    """

    g00: float
    g01: float
    g10: float
    g11: float
    g12: float
    g21: float
    g22: float

    _KEYS = {
        (0, 0): "g00",
        (0, 1): "g01",
        (1, 0): "g10",
        (1, 1): "g11",
        (1, 2): "g12",
        (2, 1): "g21",
        (2, 2): "g22",
    }

    def rate(self, i: int, j: int) -> float:
        """Partial rate for initial level i, final level j (0 beyond +-1)."""
        if i not in (0, 1, 2) or j not in (0, 1, 2):
            raise ParameterError(f"levels out of supported range: ({i}, {j})")
        key = self._KEYS.get((i, j))
        return getattr(self, key) if key else 0.0

    @property
    def gamma0_qp(self) -> float:
        return self.g00 + self.g01

    @property
    def gamma1_qp(self) -> float:
        return self.g10 + self.g11 + self.g12


@dataclass(frozen=True)
class ChipThermalModel:
    """Debye model of the chip phonon bath.

    ``debye_prefactor`` is 9 N k_B in J/K for the chip; ``t_debye`` the Debye
    temperature in K.
    """

    debye_prefactor: float = 0.23
    t_debye: float = 1000.0
    base_temperature: float = 0.0

    def __post_init__(self):
        if not self.debye_prefactor > 0:
            raise ParameterError("debye_prefactor must be positive")
        if not self.t_debye > 0:
            raise ParameterError("t_debye must be positive")
        if self.base_temperature < 0:
            raise ParameterError("base_temperature must be non-negative")
