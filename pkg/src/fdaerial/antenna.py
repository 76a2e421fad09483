"""Directional antenna model: separable sinc^2 power pattern plus pointing."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Bearing, bearing, wrap_degrees

# sinc^2(x) = 1/2 at x = 0.4429, so k * hpbw/2 hits the half-power point.
HALF_POWER_K = 0.8858


@dataclass(frozen=True)
class AntennaPattern:
    """Peak gain, half-power beamwidths per plane and a relative null floor.

    A beamwidth of ``math.inf`` makes that plane flat, which is how an
    omnidirectional antenna is expressed.
    """

    peak_gain_dbi: float
    hpbw_h_deg: float
    hpbw_v_deg: float
    floor_db: float = -50.0

    def __post_init__(self):
        for name in ("hpbw_h_deg", "hpbw_v_deg"):
            bw = getattr(self, name)
            if not (bw > 0.0 and (bw <= 360.0 or math.isinf(bw))):
                raise ValueError(f"{name} must be in (0, 360] or inf, got {bw}")
        if not self.floor_db < -3.0:
            raise ValueError(f"floor_db must be below -3 dB, got {self.floor_db}")

    @classmethod
    def isotropic(cls, gain_dbi: float = 0.0) -> "AntennaPattern":
        return cls(gain_dbi, math.inf, math.inf)

    @property
    def peak_linear(self) -> float:
        return 10.0 ** (self.peak_gain_dbi / 10.0)


@dataclass(frozen=True)
class Pointing:
    boresight: Bearing


@dataclass(frozen=True)
class MisalignmentModel:
    sigma_deg: float = 3.0

    def __post_init__(self):
        if self.sigma_deg < 0.0:
            raise ValueError("sigma_deg must be non-negative")


def _plane_gain(offset: float, hpbw: float) -> float:
    if math.isinf(hpbw):
        return 1.0
    x = HALF_POWER_K * offset / hpbw
    if x == 0.0:
        return 1.0
    s = math.sin(math.pi * x) / (math.pi * x)
    return s * s


def pattern_gain(pattern: AntennaPattern, offset_az: float, offset_el: float) -> float:
    """Linear power gain at an angular offset from boresight."""
    rel = _plane_gain(wrap_degrees(offset_az), pattern.hpbw_h_deg) * _plane_gain(
        wrap_degrees(offset_el), pattern.hpbw_v_deg
    )
    rel = max(rel, 10.0 ** (pattern.floor_db / 10.0))
    return pattern.peak_linear * rel


def gain_toward(pattern: AntennaPattern, pointing: Pointing, direction: Bearing) -> float:
    b = pointing.boresight
    return pattern_gain(pattern, direction.azimuth - b.azimuth, direction.elevation - b.elevation)


def boresight_toward(self_pos, target, err_az: float = 0.0, err_el: float = 0.0) -> Pointing:
    b = bearing(self_pos, target)
    az = wrap_degrees(b.azimuth + err_az)
    el = min(90.0, max(-90.0, b.elevation + err_el))
    return Pointing(Bearing(az, el))


def sample_misalignment(model: MisalignmentModel, rng: np.random.Generator) -> tuple[float, float]:
    """Independent N(0, sigma) pointing errors for azimuth and elevation.

    Always consumes two normal draws so stream positions do not depend on
    sigma.
    """
    z = rng.standard_normal(2)
    return float(model.sigma_deg * z[0]), float(model.sigma_deg * z[1])
