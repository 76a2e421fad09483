"""Full-duplex channel pairing and per-link SINR / capacity."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .antenna import AntennaPattern, MisalignmentModel, boresight_toward, sample_misalignment
from .channel import NoiseModel, PropagationParams, dbm_to_watts, noise_power, two_ray_gain
from .geometry import Position3


@dataclass(frozen=True)
class RadioConfig:
    bandwidth_hz: float = 10e6
    gs_tx_power_dbm: float = 11.0
    uav_tx_power_dbm: float = 0.0
    gs_pattern: AntennaPattern = field(default_factory=lambda: AntennaPattern(22.0, 58.0, 4.0))
    uav_pattern: AntennaPattern = field(default_factory=lambda: AntennaPattern(15.0, 36.0, 36.0))
    noise: NoiseModel = field(default_factory=NoiseModel)
    prop: PropagationParams = field(default_factory=PropagationParams)
    misalignment: MisalignmentModel = field(default_factory=MisalignmentModel)

    def __post_init__(self):
        if not self.bandwidth_hz > 0.0:
            raise ValueError("bandwidth_hz must be positive")

    @property
    def noise_w(self) -> float:
        return noise_power(self.bandwidth_hz, self.noise)


@dataclass(frozen=True)
class Uav:
    id: Hashable
    position: Position3
    uplink_channel: int
    downlink_channel: int

    def __post_init__(self):
        if self.uplink_channel == self.downlink_channel:
            raise ValueError(f"UAV {self.id!r} uplinks and downlinks on the same channel")


@dataclass(frozen=True)
class ChannelPlan:
    """Channel index -> (uplink user, downlink user)."""

    num_channels: int
    assignments: dict

    def channels_of(self, uav_id) -> tuple[int, int]:
        """Return ``(uplink_channel, downlink_channel)`` of a UAV."""
        up = down = None
        for k, (u, d) in self.assignments.items():
            if u == uav_id:
                up = k
            if d == uav_id:
                down = k
        if up is None or down is None:
            raise KeyError(f"unknown UAV id {uav_id!r}")
        return up, down

    def uav(self, uav_id, position) -> Uav:
        up, down = self.channels_of(uav_id)
        return Uav(uav_id, Position3(*position), up, down)

    @property
    def uav_ids(self) -> list:
        seen = []
        for u, d in self.assignments.values():
            for i in (u, d):
                if i not in seen:
                    seen.append(i)
        return seen


@dataclass(frozen=True)
class LinkResult:
    signal_w: float
    interference_w: float
    noise_w: float
    sinr: float
    capacity_bps: float


def pair_channels(uav_ids: Sequence, num_channels: int) -> ChannelPlan:
    """Pair consecutive UAVs; pair m shares channels 2m and 2m+1.

    The first member downlinks on 2m and uplinks on 2m+1, its partner the
    other way round, so each channel carries one uplink and one downlink.
    """
    ids = list(uav_ids)
    if len(ids) % 2:
        raise ValueError("unpaired UAV")
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate UAV id")
    if num_channels < len(ids):
        raise ValueError(f"{len(ids)} UAVs need at least {len(ids)} channels, got {num_channels}")
    assignments = {}
    for m in range(len(ids) // 2):
        a, b = ids[2 * m], ids[2 * m + 1]
        assignments[2 * m] = (b, a)
        assignments[2 * m + 1] = (a, b)
    return ChannelPlan(num_channels, assignments)


def co_channel_interferer(plan: ChannelPlan, victim, direction: str):
    up, down = plan.channels_of(victim)
    if direction == "downlink":
        return plan.assignments[down][0]
    if direction == "uplink":
        return plan.assignments[up][1]
    raise ValueError(f"direction must be 'downlink' or 'uplink', got {direction!r}")


def capacity(bandwidth_hz: float, sinr: float) -> float:
    if sinr < 0.0:
        raise ValueError("sinr must be non-negative")
    return bandwidth_hz * math.log2(1.0 + sinr)


def _link_result(cfg: RadioConfig, signal_w: float, interference_w: float) -> LinkResult:
    noise_w = cfg.noise_w
    sinr = signal_w / (noise_w + interference_w)
    return LinkResult(signal_w, interference_w, noise_w, sinr, capacity(cfg.bandwidth_hz, sinr))


def _point(cfg: RadioConfig, rng, frm, to):
    err = sample_misalignment(cfg.misalignment, rng)
    return boresight_toward(frm, to, *err)


def _pos(u) -> Position3:
    return Position3(*(u.position if isinstance(u, Uav) else u))


def downlink_link_result(gs_pos, victim, interferer, cfg: RadioConfig, rng) -> LinkResult:
    """GS -> victim downlink, interfered by the partner's uplink.

    Misalignment draws are taken in the order GS, victim, interferer.
    ``victim`` and ``interferer`` may be :class:`Uav` or bare positions;
    ``interferer=None`` means the channel has no co-channel uplink.
    """
    gs = Position3(*gs_pos)
    pv = _pos(victim)
    point_gs = _point(cfg, rng, gs, pv)
    point_v = _point(cfg, rng, pv, gs)
    signal = dbm_to_watts(cfg.gs_tx_power_dbm) * two_ray_gain(
        gs, pv, point_gs, point_v, cfg.gs_pattern, cfg.uav_pattern, cfg.prop
    )
    if interferer is None:
        sample_misalignment(cfg.misalignment, rng)
        return _link_result(cfg, signal, 0.0)
    pi = _pos(interferer)
    point_i = _point(cfg, rng, pi, gs)
    interference = dbm_to_watts(cfg.uav_tx_power_dbm) * two_ray_gain(
        pi, pv, point_i, point_v, cfg.uav_pattern, cfg.uav_pattern, cfg.prop
    )
    return _link_result(cfg, signal, interference)


def uplink_link_result(gs_pos, uav, cfg: RadioConfig, rng) -> LinkResult:
    """UAV -> GS uplink; co-channel interference is cancelled at the GS."""
    gs = Position3(*gs_pos)
    pu = _pos(uav)
    point_gs = _point(cfg, rng, gs, pu)
    point_u = _point(cfg, rng, pu, gs)
    signal = dbm_to_watts(cfg.uav_tx_power_dbm) * two_ray_gain(
        pu, gs, point_u, point_gs, cfg.uav_pattern, cfg.gs_pattern, cfg.prop
    )
    return _link_result(cfg, signal, 0.0)


def snapshot_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(seed + index)


def monte_carlo_downlink(gs_pos, victim, interferer, cfg: RadioConfig, snapshots: int, seed: int):
    """Downlink results for ``snapshots`` independent misalignment draws, in index order."""
    return [
        downlink_link_result(gs_pos, victim, interferer, cfg, snapshot_rng(seed, i))
        for i in range(snapshots)
    ]
