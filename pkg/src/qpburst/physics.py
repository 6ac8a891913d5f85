"""Closed-form quasiparticle tunneling physics for a gap-asymmetric junction.

Rates follow the golden-rule model for tunneling across a junction whose two
films have gaps delta and delta + d_delta.  Structure factors weight the
particle-hole interference; the leading-order closed forms reduce them to
modified Bessel functions, and an exact-integrand adaptive quadrature of the
pre-truncation integral is provided as an independent oracle.

Everything is expressed with exponentially scaled Bessel functions so rates
stay finite down to arbitrarily low temperature.  Detailed balance,
Gamma_up = Gamma_down * exp(-h f / k_B T), holds bit-exactly because both
rates share one computed bracket.
"""

import math
import warnings

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from ._accel import jit_maybe
from .bessel import k0e, k1e
from .constants import GHZ, KB_GHZ_PER_K
from .device import ChipThermalModel, DeviceParams, QPBath, TunnelRates
from .errors import (
    NonPhysicalPopulationError,
    ParameterError,
    QpburstError,
    QuadratureError,
    ResonanceSingularityError,
)

__all__ = [
    "xqp_thermal",
    "zeta",
    "xqp_low_film",
    "chemical_potential",
    "structure_factor_closed",
    "structure_factor_quadrature",
    "qp_tunnel_rate",
    "parity_switch_rates",
    "asymptotic_rates",
    "qubit_temperature",
    "xqp_from_excess",
    "debye_energy",
    "debye_temperature",
]


# ---------------------------------------------------------------------------
# scalar cores (shared with the simulation kernel, hence jitted)
# ---------------------------------------------------------------------------

@jit_maybe(cache=True)
def _xqp_low_core(t_kelvin, x_ne, delta, d_delta, v_l, v_h):
    kt = KB_GHZ_PER_K * t_kelvin
    z = 1.0 / (
        1.0
        + (v_h / v_l) * math.sqrt((delta + d_delta) / delta) * math.exp(-d_delta / kt)
    )
    x_th = math.sqrt(2.0 * math.pi * kt / delta) * math.exp(-delta / kt)
    return z * x_ne + x_th


@jit_maybe(cache=True)
def _updown_bracket(f, d_delta, kt):
    # shared bracket of the up/down rates for transition frequency f > 0:
    # K0(|dD - f|/2kT) e^{-max(dD - f, 0)/kT} + K0((dD + f)/2kT) e^{-dD/kT}
    u1 = 0.5 * (d_delta + f) / kt
    u2 = 0.5 * abs(d_delta - f) / kt
    return k0e(u2) * math.exp(-max(d_delta - f, 0.0) / kt) + k0e(u1) * math.exp(
        -d_delta / kt
    )


@jit_maybe(cache=True)
def _partial_rates_core(e_j, e_c, f_q, f_12, delta, d_delta, v_l, v_h, t_kelvin, x_ne):
    """All seven nearest-neighbor partial rates (1/s) at (T, x_ne)."""
    kt = KB_GHZ_PER_K * t_kelvin
    x_l = _xqp_low_core(t_kelvin, x_ne, delta, d_delta, v_l, v_h)
    pref = 16.0 * e_j * GHZ * math.sqrt(delta / (2.0 * math.pi * kt)) * x_l
    dbar = delta + 0.5 * d_delta
    mel = math.sqrt(e_c / (8.0 * e_j))

    u = 0.5 * d_delta / kt
    if u == 0.0:
        g_diag = pref * 2.0 * kt / dbar
    else:
        g_diag = pref * (d_delta / dbar) * k1e(u) * math.exp(-2.0 * u)

    b_q = _updown_bracket(f_q, d_delta, kt)
    b_12 = _updown_bracket(f_12, d_delta, kt)
    g10 = pref * mel * b_q
    g01 = g10 * math.exp(-f_q / kt)
    g21 = 2.0 * pref * mel * b_12
    g12 = g21 * math.exp(-f_12 / kt)
    return g_diag, g01, g10, g_diag, g12, g21, g_diag


def _check_resonance(device: DeviceParams):
    for f in (device.f_q, device.f_12):
        if device.d_delta == f:
            raise ResonanceSingularityError(
                f"d_delta coincides exactly with a transition frequency ({f} GHz); "
                "the closed-form rate diverges logarithmically, offset the input"
            )


# ---------------------------------------------------------------------------
# QP density laws
# ---------------------------------------------------------------------------

def xqp_thermal(temperature: float, delta: float) -> float:
    """Equilibrium QP density sqrt(2 pi kT / delta) e^(-delta/kT)."""
    if not temperature > 0:
        raise ParameterError("temperature must be positive")
    kt = KB_GHZ_PER_K * temperature
    return math.sqrt(2.0 * math.pi * kt / delta) * math.exp(-delta / kt)


def zeta(temperature: float, device: DeviceParams) -> float:
    """Fraction of resident QPs residing in the low-gap film at temperature T."""
    if not temperature > 0:
        raise ParameterError("temperature must be positive")
    kt = KB_GHZ_PER_K * temperature
    return 1.0 / (
        1.0
        + (device.v_h / device.v_l)
        * math.sqrt(device.delta_high / device.delta)
        * math.exp(-device.d_delta / kt)
    )


def xqp_low_film(temperature: float, device: DeviceParams, x_ne: float) -> float:
    """Total QP density in the low-gap film: zeta(T) x_ne plus the thermal part.

    The resident and thermally generated populations are treated as
    independent and summed.
    """
    if not temperature > 0:
        raise ParameterError("temperature must be positive")
    if x_ne < 0:
        raise ParameterError("x_ne must be non-negative")
    return _xqp_low_core(
        temperature, x_ne, device.delta, device.d_delta, device.v_l, device.v_h
    )


def chemical_potential(temperature: float, x: float, delta: float) -> float:
    """Effective chemical potential (GHz) reproducing density x at temperature T.

    Returns -inf for x = 0.
    """
    if not temperature > 0:
        raise ParameterError("temperature must be positive")
    if x < 0:
        raise ParameterError("x must be non-negative")
    if x == 0.0:
        return -math.inf
    kt = KB_GHZ_PER_K * temperature
    return delta + kt * math.log(x / math.sqrt(2.0 * math.pi * kt / delta))


# ---------------------------------------------------------------------------
# structure factors
# ---------------------------------------------------------------------------

def _sf_prefactors(side, f_ij, device, bath):
    if side not in ("L", "H"):
        raise ParameterError(f"side must be 'L' or 'H', got {side!r}")
    bath.validate_mu(device)
    kt = KB_GHZ_PER_K * bath.temperature
    x_l = xqp_low_film(bath.temperature, device, bath.x_qp_ne)
    sq = math.sqrt(device.delta / (2.0 * math.pi * kt))
    if side == "L":
        w = device.d_delta + f_ij
        log_exp = -max(w, 0.0) / kt
    else:
        w = device.d_delta - f_ij
        log_exp = -max(device.d_delta, f_ij) / kt
    return kt, x_l, sq, w, log_exp


def structure_factor_closed(
    side: str, sign: str, f_ij: float, device: DeviceParams, bath: QPBath
) -> float:
    """Leading-order closed-form structure factor S_sign^side[f_ij].

    ``f_ij`` is the energy (GHz) absorbed by the qubit during the tunneling
    event; it is negative for qubit relaxation.  The high-gap-side factor is
    expressed through the low-film density using the equilibrium density
    ratio of the two films.

    For sign '+' the factor diverges logarithmically when the Bessel argument
    vanishes; exactly-zero input raises ResonanceSingularityError.  For
    sign '-' the divergence cancels and the finite limit is returned.
    """
    if sign not in ("+", "-"):
        raise ParameterError(f"sign must be '+' or '-', got {sign!r}")
    kt, x_l, sq, w, log_exp = _sf_prefactors(side, f_ij, device, bath)
    a = 0.5 * abs(w) / kt
    if sign == "+":
        if a == 0.0:
            raise ResonanceSingularityError(
                "structure factor S+ diverges at zero Bessel argument "
                "(|d_delta +- h f| = 0); offset the input"
            )
        return x_l * sq * k0e(a) * math.exp(log_exp)
    if a == 0.0:
        radial = kt / device.delta_bar
    else:
        radial = (abs(w) / (2.0 * device.delta_bar)) * k1e(a)
    return x_l * sq * radial * math.exp(log_exp)


def structure_factor_quadrature(
    side: str,
    sign: str,
    f_ij: float,
    device: DeviceParams,
    bath: QPBath,
    rtol: float = 1e-8,
) -> float:
    """Structure factor from adaptive quadrature of the exact integrand.

    Integrates the pre-truncation integral (full square-root denominators,
    no leading-order expansion); serves as the oracle for
    ``structure_factor_closed``.
    """
    if sign not in ("+", "-"):
        raise ParameterError(f"sign must be '+' or '-', got {sign!r}")
    kt, x_l, sq, w, log_exp = _sf_prefactors(side, f_ij, device, bath)
    dbar = device.delta_bar
    dd = device.d_delta
    g = 0.5 * w  # signed shift; |g| is the lower integration limit
    ag = abs(g)
    plus = sign == "+"
    # N(z) = (z + dbar + f/2)(z + dbar - f/2) +- (dbar - dd/2)(dbar + dd/2)
    cross = (dbar - 0.5 * dd) * (dbar + 0.5 * dd)
    if side == "L":
        # Q(z) = (z + g + 2 dbar - dd)(z - g + 2 dbar + dd)
        qa, qb = 2.0 * dbar - dd, 2.0 * dbar + dd
    else:
        qa, qb = 2.0 * dbar + dd, 2.0 * dbar - dd

    def n_over_sqrtq(z):
        n = (z + dbar + 0.5 * f_ij) * (z + dbar - 0.5 * f_ij)
        n = n + cross if plus else n - cross
        return n / math.sqrt((z + g + qa) * (z - g + qb))

    if ag == 0.0:
        if plus:
            raise ResonanceSingularityError(
                "exact S+ integral diverges at zero shift; offset the input"
            )

        # N-(z)/z is regular at z = 0 when the shift vanishes
        def integrand0(z):
            if z == 0.0:
                z = 1e-300
            n = z + 2.0 * dbar + (0.25 * (dd * dd - f_ij * f_ij)) / z
            val = n / math.sqrt((z + qa) * (z + qb))
            return val * math.exp(-z / kt)

        est, err = quad(integrand0, 0.0, np.inf, epsabs=0.0, epsrel=1e-10, limit=400)
        integral, abserr, scale = est, err, math.exp(log_exp)
    else:
        # z = |g| cosh(u) removes the inverse-square-root endpoint singularity
        def integrand(u):
            if u > 700.0:
                return 0.0
            ch = math.cosh(u)
            z = ag * ch
            expo = -ag * (ch - 1.0) / kt
            if expo < -745.0:
                return 0.0
            return n_over_sqrtq(z) * math.exp(expo)

        est, err = quad(integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-10, limit=400)
        integral, abserr = est, err
        scale = math.exp(log_exp)  # includes e^{-|g|/kT} pulled out above

    if integral != 0.0 and abserr / abs(integral) > rtol:
        raise QuadratureError(
            f"quadrature reached relative error {abserr / abs(integral):.2e} "
            f"(requested {rtol:.0e})",
            achieved_error=abserr / abs(integral),
        )
    return x_l * sq * (integral / dbar) * scale


# ---------------------------------------------------------------------------
# tunneling rates
# ---------------------------------------------------------------------------

def parity_switch_rates(device: DeviceParams, bath: QPBath) -> TunnelRates:
    """All nearest-neighbor partial rates and their state-resolved totals.

    Thermal QPs are included through the low-film density law.
    """
    _check_resonance(device)
    bath.validate_mu(device)
    g = _partial_rates_core(
        device.e_j,
        device.e_c,
        device.f_q,
        device.f_12,
        device.delta,
        device.d_delta,
        device.v_l,
        device.v_h,
        bath.temperature,
        bath.x_qp_ne,
    )
    return TunnelRates(*g)


def qp_tunnel_rate(i: int, j: int, device: DeviceParams, bath: QPBath) -> float:
    """Partial tunneling rate for qubit transition i -> j (1/s).

    Transitions beyond nearest neighbors return 0; levels above 2 are
    rejected because the matrix-element approximation covers {0, 1, 2} only.
    """
    if i not in (0, 1, 2) or j not in (0, 1, 2):
        raise ParameterError(f"levels out of supported range: ({i}, {j})")
    if abs(i - j) > 1:
        return 0.0
    return parity_switch_rates(device, bath).rate(i, j)


def asymptotic_rates(regime: str, device: DeviceParams, bath: QPBath):
    """Closed-form limiting (gamma10, gamma11) in 1/s for the named regime.

    Regimes: 'zero' (d_delta << kT << h f_q), 'resonant'
    (|d_delta - h f_q| << kT) and 'big' (d_delta - h f_q >> kT).  A
    RuntimeWarning is emitted when the requested regime condition is not
    satisfied by at least a factor of 5.
    """
    kt = KB_GHZ_PER_K * bath.temperature
    dd, fq, delta = device.d_delta, device.f_q, device.delta
    x = bath.x_qp_ne
    vol = 1.0 + device.v_h / device.v_l

    if regime == "zero":
        if not (dd <= kt / 5.0 and kt <= fq / 5.0):
            warnings.warn(
                "zero-gap-difference regime condition violated "
                f"(d_delta={dd}, kT={kt:.4g}, f_q={fq} GHz)",
                RuntimeWarning,
                stacklevel=2,
            )
        g10 = math.sqrt(8.0 * delta * fq) * GHZ * x / vol
        g11 = 16.0 * device.e_j * GHZ * math.sqrt(2.0 * kt / (math.pi * delta)) * x / vol
        return g10, g11

    if regime == "resonant":
        if abs(dd - fq) == 0.0:
            raise ResonanceSingularityError("resonant form diverges at d_delta = h f_q")
        if not abs(dd - fq) <= kt / 5.0:
            warnings.warn(
                f"resonant regime condition violated (|d_delta - f_q| = {abs(dd - fq):.4g}, "
                f"kT = {kt:.4g} GHz)",
                RuntimeWarning,
                stacklevel=2,
            )
        g10 = fq * GHZ * math.sqrt(2.0 * delta / (math.pi * kt)) * math.log(
            4.0 * kt / abs(dd - fq)
        ) * x
        g11 = 16.0 * device.e_j * GHZ * math.sqrt(dd / (2.0 * delta)) * math.exp(-dd / kt) * x
        return g10, g11

    if regime == "big":
        if not dd - fq >= 5.0 * kt:
            warnings.warn(
                f"big-gap-difference regime condition violated (d_delta - f_q = "
                f"{dd - fq:.4g}, kT = {kt:.4g} GHz)",
                RuntimeWarning,
                stacklevel=2,
            )
        g10 = fq * GHZ * math.sqrt(2.0 * delta / (dd - fq)) * math.exp(-(dd - fq) / kt) * x
        g11 = 16.0 * device.e_j * GHZ * math.sqrt(dd / (2.0 * delta)) * math.exp(-dd / kt) * x
        return g10, g11

    raise ParameterError(f"unknown regime {regime!r}")


# ---------------------------------------------------------------------------
# thermometry
# ---------------------------------------------------------------------------

def qubit_temperature(gamma10: float, gamma01: float, f_q: float) -> float:
    """Effective qubit temperature from detailed balance (kelvin).

    T_q = h f_q / (k_B ln(Gamma10 / Gamma01)); gamma01 = 0 maps to 0 K.
    """
    if not gamma10 > 0:
        raise ParameterError("gamma10 must be positive")
    if gamma01 < 0:
        raise ParameterError("gamma01 must be non-negative")
    if gamma01 == 0.0:
        return 0.0
    if gamma01 >= gamma10:
        raise NonPhysicalPopulationError(
            f"gamma01 = {gamma01} >= gamma10 = {gamma10}: inverted or infinite-"
            "temperature population"
        )
    return f_q / (KB_GHZ_PER_K * math.log(gamma10 / gamma01))


def _unit_density_rates(t_q: float, device: DeviceParams):
    """Per-unit-resident-density slope of (gamma10, gamma01) at temperature t_q."""
    bath1 = QPBath(temperature=t_q, x_qp_ne=1.0)
    bath0 = QPBath(temperature=t_q, x_qp_ne=0.0)
    r1 = parity_switch_rates(device, bath1)
    r0 = parity_switch_rates(device, bath0)
    return r1.g10 - r0.g10, r1.g01 - r0.g01


def xqp_from_excess(
    d_gamma10: float, d_gamma01: float, t_q: float, device: DeviceParams
) -> float:
    """Burst QP density from excess transition rates at temperature t_q.

    Inverts the linear-in-density rate model:
    x = (dGamma10 + dGamma01) / (gamma10(T) + gamma01(T)) with gamma the
    per-unit-density rates.  The result is in resident-density-equivalent
    units (the film-redistribution factor is included in the slopes).
    """
    if not t_q > 0:
        raise ParameterError("t_q must be positive")
    if d_gamma10 < 0 or d_gamma01 < 0:
        raise ParameterError("excess rates must be non-negative")
    if d_gamma10 == 0 and d_gamma01 == 0:
        raise ParameterError("at least one excess rate must be positive")
    g10, g01 = _unit_density_rates(t_q, device)
    denom = g10 + g01
    if denom <= 0.0 or not math.isfinite(denom):
        raise QpburstError(
            "per-unit-density rates underflow at this temperature; density unresolvable"
        )
    return (d_gamma10 + d_gamma01) / denom


# ---------------------------------------------------------------------------
# Debye chip heating
# ---------------------------------------------------------------------------

def _debye_integral(upper: float) -> float:
    # int_0^upper x^3 / (e^x - 1) dx, stable for large upper
    def f(x):
        if x == 0.0:
            return 0.0
        if x > 700.0:
            return 0.0
        em = math.exp(-x)
        return x * x * x * em / (1.0 - em)

    val, _ = quad(f, 0.0, min(upper, 745.0), epsabs=0.0, epsrel=1e-12, limit=200)
    return val


def debye_energy(temperature: float, model: ChipThermalModel) -> float:
    """Internal phonon energy U(T) of the chip in joules."""
    if not temperature > 0:
        raise ParameterError("temperature must be positive")
    t4 = temperature**4
    return (
        model.debye_prefactor
        * t4
        / model.t_debye**3
        * _debye_integral(model.t_debye / temperature)
    )


def debye_temperature(energy: float, model: ChipThermalModel) -> float:
    """Chip temperature such that U(T) equals the given energy (joules)."""
    if not energy > 0:
        raise ParameterError("energy must be positive")
    # low-T closed form as the starting bracket
    t_guess = (energy * 15.0 / (model.debye_prefactor * math.pi**4) * model.t_debye**3) ** 0.25
    lo, hi = 0.5 * t_guess, 2.0 * t_guess
    while debye_energy(lo, model) > energy:
        lo *= 0.5
    while debye_energy(hi, model) < energy:
        hi *= 2.0
    t = brentq(lambda t: debye_energy(t, model) - energy, lo, hi, xtol=1e-30, rtol=1e-12)
    return t
