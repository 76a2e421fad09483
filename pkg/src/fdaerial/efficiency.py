"""Radio resource efficiency of the paired full-duplex scheme against TDD-FDM,
and the uplink transmit power needed for a target rate."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .antenna import AntennaPattern, boresight_toward
from .channel import dbm_to_watts, two_ray_gain, watts_to_dbm
from .geometry import Position3
from .radio import ChannelPlan, RadioConfig, downlink_link_result, uplink_link_result

# Returned by required_uplink_power for a zero-rate demand.
POWER_FLOOR_DBM = -math.inf
MAX_UPLINK_POWER_DBM = 60.0


@dataclass(frozen=True)
class TddFdmConfig:
    uplink_fraction: float = 0.4
    downlink_fraction: float = 0.4
    guard_fraction: float = 0.2
    omni_tx_power_dbm: float = 20.0
    omni_gain_dbi: float = 0.0

    def __post_init__(self):
        fr = (self.uplink_fraction, self.downlink_fraction, self.guard_fraction)
        if any(not 0.0 <= f <= 1.0 for f in fr):
            raise ValueError("frame fractions must lie in [0, 1]")
        if not math.isclose(sum(fr), 1.0, rel_tol=0.0, abs_tol=1e-12):
            raise ValueError(f"frame fractions must sum to 1, got {sum(fr)}")


@dataclass(frozen=True)
class ChannelContribution:
    channel: int
    uplink_bps_hz: float
    downlink_bps_hz: float

    @property
    def total(self) -> float:
        return self.uplink_bps_hz + self.downlink_bps_hz


@dataclass(frozen=True)
class EfficiencyResult:
    eta: float
    per_channel: list = field(default_factory=list)
    num_channels: int = 1

    @classmethod
    def from_contributions(cls, contributions, num_channels: int) -> "EfficiencyResult":
        contributions = list(contributions)
        eta = sum(c.total for c in contributions) / num_channels
        return cls(eta, contributions, num_channels)


class TddSplit(NamedTuple):
    uplink_fraction: float
    downlink_fraction: float
    feasible: bool


class InfeasibleTarget(ValueError):
    def __init__(self, message: str, limiting_power_dbm: float):
        super().__init__(message)
        self.limiting_power_dbm = limiting_power_dbm


def proposed_efficiency(
    deployment: Mapping, gs_pos, cfg: RadioConfig, plan: ChannelPlan, rng
) -> EfficiencyResult:
    """Spectral efficiency of the channel-reuse scheme for one misalignment draw.

    Every channel carries one uplink (interference-free at the GS) and the
    downlink of the partner UAV, which sees the uplink as interference.
    The sum over channels is normalised by the number of channels.
    """
    if not deployment:
        raise ValueError("empty deployment")
    out = []
    for k in sorted(plan.assignments):
        up_id, down_id = plan.assignments[k]
        ul = uplink_link_result(gs_pos, deployment[up_id], cfg, rng)
        dl = downlink_link_result(gs_pos, deployment[down_id], deployment[up_id], cfg, rng)
        out.append(ChannelContribution(k, math.log2(1.0 + ul.sinr), math.log2(1.0 + dl.sinr)))
    return EfficiencyResult.from_contributions(out, plan.num_channels)


def omni_snr(gs_pos, uav_pos, tdd: TddFdmConfig, cfg: RadioConfig) -> float:
    """Interference-free SNR of an omni link; the path is reciprocal so up = down."""
    omni = AntennaPattern.isotropic(tdd.omni_gain_dbi)
    gs, pu = Position3(*gs_pos), Position3(*uav_pos)
    g = two_ray_gain(
        pu, gs, boresight_toward(pu, gs), boresight_toward(gs, pu), omni, omni, cfg.prop
    )
    return dbm_to_watts(tdd.omni_tx_power_dbm) * g / cfg.noise_w


def tdd_fdm_efficiency(deployment: Mapping, gs_pos, tdd: TddFdmConfig, cfg: RadioConfig) -> EfficiencyResult:
    """TDD-FDM baseline: one channel per UAV, time-split with a guard interval."""
    if not deployment:
        raise ValueError("empty deployment")
    out = []
    for k, uid in enumerate(deployment):
        snr = omni_snr(gs_pos, deployment[uid], tdd, cfg)
        se = math.log2(1.0 + snr)
        out.append(ChannelContribution(k, tdd.uplink_fraction * se, tdd.downlink_fraction * se))
    return EfficiencyResult.from_contributions(out, len(out))


def tdd_split_for_demand(required_bps: float, achievable_bps: float, guard_fraction: float) -> TddSplit:
    """Give the downlink just enough of the frame to carry the demand.

    ``achievable_bps`` is the downlink rate if it owned the whole frame.
    Demands beyond the guard-limited frame saturate the downlink and are
    reported infeasible.
    """
    if required_bps < 0.0 or achievable_bps <= 0.0:
        raise ValueError("rates must be positive")
    if not 0.0 <= guard_fraction <= 1.0:
        raise ValueError("guard_fraction must lie in [0, 1]")
    usable = 1.0 - guard_fraction
    dl = min(usable, required_bps / achievable_bps)
    feasible = required_bps <= achievable_bps * usable
    return TddSplit(usable - dl, dl, feasible)


def link_budget_gain(gs_pos, uav_pos, antenna_mode: str, cfg: RadioConfig) -> float:
    """UAV -> GS gain with both main lobes facing each other.

    Antenna gains enter at their peak values on top of the isotropic
    two-ray path gain, so the directional and omni budgets differ exactly by
    the sum of the peak gains.
    """
    gs, pu = Position3(*gs_pos), Position3(*uav_pos)
    iso = AntennaPattern.isotropic()
    path = two_ray_gain(pu, gs, boresight_toward(pu, gs), boresight_toward(gs, pu), iso, iso, cfg.prop)
    if antenna_mode == "directional":
        return cfg.uav_pattern.peak_linear * cfg.gs_pattern.peak_linear * path
    if antenna_mode == "omni":
        return path
    raise ValueError(f"antenna_mode must be 'directional' or 'omni', got {antenna_mode!r}")


def required_uplink_power(target_rate_bps: float, gs_pos, uav_pos, antenna_mode: str, cfg: RadioConfig) -> float:
    """Transmit power in dBm for an interference-free uplink to carry ``target_rate_bps``."""
    if target_rate_bps < 0.0:
        raise ValueError("target rate must be non-negative")
    if target_rate_bps == 0.0:
        return POWER_FLOOR_DBM
    sinr = 2.0 ** (target_rate_bps / cfg.bandwidth_hz) - 1.0
    gain = link_budget_gain(gs_pos, uav_pos, antenna_mode, cfg)
    p_dbm = watts_to_dbm(sinr * cfg.noise_w / gain)
    if p_dbm > MAX_UPLINK_POWER_DBM:
        raise InfeasibleTarget(
            f"target {target_rate_bps} bps needs {p_dbm:.2f} dBm > {MAX_UPLINK_POWER_DBM} dBm",
            p_dbm,
        )
    return p_dbm


def uplink_rate_at_power(power_dbm: float, gs_pos, uav_pos, antenna_mode: str, cfg: RadioConfig) -> float:
    """Forward direction of :func:`required_uplink_power`."""
    gain = link_budget_gain(gs_pos, uav_pos, antenna_mode, cfg)
    return cfg.bandwidth_hz * math.log2(1.0 + dbm_to_watts(power_dbm) * gain / cfg.noise_w)
