"""Two-ray ground-reflection propagation with per-ray antenna weighting."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .antenna import AntennaPattern, Pointing, gain_toward
from .geometry import bearing, distance, reflection_geometry

LIGHT_SPEED = 299792458.0


@dataclass(frozen=True)
class PropagationParams:
    frequency_hz: float = 5.7e9
    reflection_coefficient: float = -1.0
    wavelength_m: float = field(init=False)

    def __post_init__(self):
        if not self.frequency_hz > 0.0:
            raise ValueError("frequency_hz must be positive")
        if not -1.0 <= self.reflection_coefficient <= 1.0:
            raise ValueError("reflection_coefficient must lie in [-1, 1]")
        object.__setattr__(self, "wavelength_m", LIGHT_SPEED / self.frequency_hz)


@dataclass(frozen=True)
class NoiseModel:
    density_dbm_per_hz: float = -174.0
    noise_figure_db: float = 5.0

    def __post_init__(self):
        if not self.density_dbm_per_hz < 0.0:
            raise ValueError("density_dbm_per_hz must be negative")


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


def watts_to_dbm(w: float) -> float:
    if w <= 0.0:
        return -math.inf
    return 10.0 * math.log10(w) + 30.0


def _scale(params: PropagationParams) -> float:
    a = params.wavelength_m / (4.0 * math.pi)
    return a * a


def two_ray_gain(
    p_t,
    p_r,
    point_t: Pointing,
    point_r: Pointing,
    pat_t: AntennaPattern,
    pat_r: AntennaPattern,
    params: PropagationParams,
) -> float:
    """Total linear gain (path + antennas) of the LOS plus ground-reflected ray."""
    geo = reflection_geometry(p_t, p_r)
    g_los = gain_toward(pat_t, point_t, geo.tx_los_bearing) * gain_toward(
        pat_r, point_r, geo.rx_los_bearing
    )
    los = math.sqrt(g_los) / geo.d_los
    r = params.reflection_coefficient
    if r == 0.0:
        return _scale(params) * los * los
    g_refl = gain_toward(pat_t, point_t, geo.tx_refl_bearing) * gain_toward(
        pat_r, point_r, geo.rx_refl_bearing
    )
    dphi = 2.0 * math.pi * (geo.d_refl - geo.d_los) / params.wavelength_m
    field_ = los + r * math.sqrt(g_refl) * cmath.exp(-1j * dphi) / geo.d_refl
    return _scale(params) * (field_.real * field_.real + field_.imag * field_.imag)


def two_ray_mean_gain(
    p_t,
    p_r,
    point_t: Pointing,
    point_r: Pointing,
    pat_t: AntennaPattern,
    pat_r: AntennaPattern,
    params: PropagationParams,
) -> float:
    """Power sum of the two rays, i.e. the two-ray gain averaged over phase.

    Same antenna weighting as :func:`two_ray_gain` without the interference
    fringes, which repeat on a metre scale at UAV separations.
    """
    geo = reflection_geometry(p_t, p_r)
    g_los = gain_toward(pat_t, point_t, geo.tx_los_bearing) * gain_toward(
        pat_r, point_r, geo.rx_los_bearing
    )
    g_refl = gain_toward(pat_t, point_t, geo.tx_refl_bearing) * gain_toward(
        pat_r, point_r, geo.rx_refl_bearing
    )
    r = params.reflection_coefficient
    return _scale(params) * (
        g_los / (geo.d_los * geo.d_los) + r * r * g_refl / (geo.d_refl * geo.d_refl)
    )


def free_space_gain(
    p_t,
    p_r,
    point_t: Pointing,
    point_r: Pointing,
    pat_t: AntennaPattern,
    pat_r: AntennaPattern,
    params: PropagationParams,
) -> float:
    d = distance(p_t, p_r)
    if d == 0.0:
        raise ValueError("coincident transmitter and receiver")
    g_los = gain_toward(pat_t, point_t, bearing(p_t, p_r)) * gain_toward(
        pat_r, point_r, bearing(p_r, p_t)
    )
    los = math.sqrt(g_los) / d
    return _scale(params) * los * los


def noise_power(bandwidth_hz: float, noise: NoiseModel) -> float:
    """Thermal noise plus receiver noise figure over the band, in watts."""
    if not bandwidth_hz > 0.0:
        raise ValueError("bandwidth_hz must be positive")
    dbm = noise.density_dbm_per_hz + 10.0 * math.log10(bandwidth_hz) + noise.noise_figure_db
    return dbm_to_watts(dbm)
