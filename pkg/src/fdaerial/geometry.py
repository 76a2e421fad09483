"""Positions, bearings and image-method ground reflection geometry.

Flat ground at ``z = 0``, right-handed frame, metres and degrees.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class Position3(NamedTuple):
    x: float
    y: float
    z: float

    def __add__(self, other):  # type: ignore[override]
        return Position3(self.x + other[0], self.y + other[1], self.z + other[2])


class Bearing(NamedTuple):
    azimuth: float
    elevation: float


@dataclass(frozen=True)
class RayGeometry:
    d_los: float
    d_refl: float
    reflection_point: Position3
    tx_los_bearing: Bearing
    tx_refl_bearing: Bearing
    rx_los_bearing: Bearing
    rx_refl_bearing: Bearing


def wrap_degrees(angle: float) -> float:
    """Wrap an angle to [-180, 180)."""
    return (angle + 180.0) % 360.0 - 180.0


def distance(a, b) -> float:
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    dz = b[2] - a[2]
    return math.sqrt(dx * dx + dy * dy + dz * dz)


def mirror_across_ground(p) -> Position3:
    return Position3(p[0], p[1], -p[2])


def bearing(frm, to) -> Bearing:
    dx = to[0] - frm[0]
    dy = to[1] - frm[1]
    dz = to[2] - frm[2]
    if dx == 0.0 and dy == 0.0 and dz == 0.0:
        raise ValueError("degenerate bearing")
    horiz = math.sqrt(dx * dx + dy * dy)
    az = wrap_degrees(math.degrees(math.atan2(dy, dx)))
    el = math.degrees(math.atan2(dz, horiz))
    return Bearing(az, el)


def reflection_geometry(p_t, p_r) -> RayGeometry:
    """LOS and ground-reflected ray geometry between two antennas.

    The reflected path is the straight line from ``p_t`` to the image of
    ``p_r``. Bearings of the reflected ray point from each endpoint toward
    the specular point. An endpoint lying on the ground is its own specular
    point, so its reflected-ray bearing falls back to the LOS bearing.
    """
    zt, zr = p_t[2], p_r[2]
    if zt < 0.0 or zr < 0.0:
        raise ValueError("antenna below ground plane")
    if zt == 0.0 and zr == 0.0:
        raise ValueError("degenerate two-ray geometry")

    image = mirror_across_ground(p_r)
    d_los = distance(p_t, p_r)
    d_refl = distance(p_t, image)
    s = zt / (zt + zr)
    rp = Position3(
        p_t[0] + s * (image[0] - p_t[0]),
        p_t[1] + s * (image[1] - p_t[1]),
        0.0,
    )

    tx_los = bearing(p_t, p_r)
    rx_los = bearing(p_r, p_t)
    tx_refl = bearing(p_t, rp) if zt > 0.0 else tx_los
    rx_refl = bearing(p_r, rp) if zr > 0.0 else rx_los
    return RayGeometry(d_los, d_refl, rp, tx_los, tx_refl, rx_los, rx_refl)
