"""Artificial-potential-field flight control with interference as repulsion.

The attractive term is ``omega * distance_to_goal``. The repulsive term is
the co-channel interference (in watts) the UAV would receive at a candidate
position, divided by a reference power so one unit equals ``rep_ref_dbm``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .antenna import boresight_toward
from .channel import dbm_to_watts, two_ray_gain, two_ray_mean_gain, watts_to_dbm
from .geometry import Position3, distance
from .radio import RadioConfig, downlink_link_result, snapshot_rng


@dataclass(frozen=True)
class UavState:
    position: Position3
    velocity: tuple = (0.0, 0.0, 0.0)


@dataclass(frozen=True)
class MotionLimits:
    v_max: float = 10.0
    a_max: float = 5.0
    dt: float = 1.0

    def __post_init__(self):
        if not (self.v_max > 0 and self.a_max > 0 and self.dt > 0):
            raise ValueError("motion limits must be positive")


PLANNING_FIELDS = {"mean": two_ray_mean_gain, "coherent": two_ray_gain}


@dataclass(frozen=True)
class ApfConfig:
    omega: float = 0.02
    accel_levels: int = 5
    goal_radius: float = 5.0
    rep_ref_dbm: float = -90.0
    rep_scale: float = 1.0
    planning_field: str = "mean"

    def __post_init__(self):
        if self.planning_field not in PLANNING_FIELDS:
            raise ValueError(f"planning_field must be one of {sorted(PLANNING_FIELDS)}")
        if self.omega < 0:
            raise ValueError("omega must be non-negative")
        if self.accel_levels < 3 or self.accel_levels % 2 == 0:
            raise ValueError("accel_levels must be odd and >= 3")
        if self.goal_radius <= 0:
            raise ValueError("goal_radius must be positive")
        if self.rep_scale < 0:
            raise ValueError("rep_scale must be non-negative")


@dataclass(frozen=True)
class PotentialBreakdown:
    attractive: float
    repulsive_w: float
    repulsive: float
    total: float


@dataclass(frozen=True)
class Interferer:
    position: Position3
    tx_power_dbm: float = 0.0


@dataclass(frozen=True)
class FlightScenario:
    start: Position3 = Position3(4000.0, 0.0, 50.0)
    goal: Position3 = Position3(5000.0, 0.0, 50.0)
    hover: Position3 | None = Position3(4500.0, 0.0, 45.0)
    max_steps: int = 1000


@dataclass(frozen=True)
class TrajectoryPoint:
    t_s: float
    position: Position3
    interference_w: float
    capacity_bps: float

    @property
    def interference_dbm(self) -> float:
        return watts_to_dbm(self.interference_w)


@dataclass
class Trajectory:
    points: list = field(default_factory=list)
    converged: bool = False
    control_enabled: bool = False

    @property
    def peak_interference_dbm(self) -> float:
        return max(p.interference_dbm for p in self.points)

    @property
    def mean_capacity_bps(self) -> float:
        return math.fsum(p.capacity_bps for p in self.points) / len(self.points)


def attractive_potential(q, goal, omega: float) -> float:
    return omega * distance(q, goal)


def repulsive_potential(q, interferers, cfg: RadioConfig, gs_pos, field: str = "coherent") -> float:
    """Interference power (W) at ``q`` from the co-channel uplinks.

    Both UAV antennas are boresighted exactly at the GS; pointing errors are
    unknown to the planner. ``field="mean"`` drops the two-ray fringes.
    """
    q = Position3(*q)
    gs = Position3(*gs_pos)
    total = 0.0
    if not interferers:
        return total
    gain = PLANNING_FIELDS[field]
    point_q = boresight_toward(q, gs)
    for itf in interferers:
        pos, p_dbm = _unpack(itf)
        if distance(pos, q) == 0.0:
            return math.inf
        point_j = boresight_toward(pos, gs)
        total += dbm_to_watts(p_dbm) * gain(
            pos, q, point_j, point_q, cfg.uav_pattern, cfg.uav_pattern, cfg.prop
        )
    return total


def _unpack(itf):
    if isinstance(itf, Interferer):
        return Position3(*itf.position), itf.tx_power_dbm
    pos, p_dbm = itf
    return Position3(*pos), p_dbm


def repulsive_score(interference_w: float, apf: ApfConfig) -> float:
    """Interference in units of the reference power, times ``rep_scale``."""
    return apf.rep_scale * interference_w / dbm_to_watts(apf.rep_ref_dbm)


def total_potential(q, goal, interferers, apf: ApfConfig, cfg: RadioConfig, gs_pos) -> PotentialBreakdown:
    att = attractive_potential(q, goal, apf.omega)
    rep_w = repulsive_potential(q, interferers, cfg, gs_pos, apf.planning_field)
    rep = repulsive_score(rep_w, apf)
    return PotentialBreakdown(att, rep_w, rep, att + rep)


def candidate_positions(state: UavState, limits: MotionLimits, levels: int):
    """Reachable (position, velocity) pairs after one step.

    Each axis picks one of ``levels`` evenly spaced accelerations in
    [-a_max, a_max]; velocity is clamped to +-v_max before integrating.
    """
    if levels < 3 or levels % 2 == 0:
        raise ValueError("levels must be odd and >= 3")
    accels = np.linspace(-limits.a_max, limits.a_max, levels)
    accels[levels // 2] = 0.0
    per_axis = []
    for axis in range(3):
        v0 = state.velocity[axis]
        q0 = state.position[axis]
        opts = []
        for a in accels:
            v1 = min(limits.v_max, max(-limits.v_max, v0 + float(a) * limits.dt))
            opts.append((q0 + v1 * limits.dt, v1))
        per_axis.append(opts)
    out = []
    for (x, vx), (y, vy), (z, vz) in itertools.product(*per_axis):
        out.append((Position3(x, y, z), (vx, vy, vz)))
    return out


def can_stop_above_ground(z: float, vz: float, limits: MotionLimits) -> bool:
    """True if braking at full upward acceleration keeps the UAV at z >= 0."""
    while vz < 0.0:
        vz = min(0.0, vz + limits.a_max * limits.dt)
        z += vz * limits.dt
    return z >= 0.0


def apf_step(
    state: UavState,
    goal,
    interferers,
    limits: MotionLimits,
    apf: ApfConfig,
    cfg: RadioConfig,
    gs_pos,
) -> UavState:
    """Move to the reachable candidate with the lowest total potential.

    Ties go to the candidate nearer the goal, then to the lower index.
    Candidates below ground, or descending too fast to stop above it, are
    infeasible. If nothing is feasible the UAV climbs as hard as it can.
    """
    cands = candidate_positions(state, limits, apf.accel_levels)
    feasible = [
        (idx, pos, vel)
        for idx, (pos, vel) in enumerate(cands)
        if pos[2] >= 0.0 and can_stop_above_ground(pos[2], vel[2], limits)
    ]
    if not feasible:
        pos, vel = max(cands, key=lambda c: (c[1][2], c[0][2]))
        return UavState(pos, vel)
    best_key = None
    best = None
    for idx, pos, vel in feasible:
        pot = total_potential(pos, goal, interferers, apf, cfg, gs_pos)
        key = (pot.total, distance(pos, goal), idx)
        if best_key is None or key < best_key:
            best_key, best = key, (pos, vel)
    return UavState(best[0], best[1])


def _measure(t, pos, gs_pos, hover, cfg: RadioConfig, seed: int, step: int) -> TrajectoryPoint:
    res = downlink_link_result(gs_pos, pos, hover, cfg, snapshot_rng(seed, step))
    return TrajectoryPoint(t, pos, res.interference_w, res.capacity_bps)


def simulate_flight(
    scenario: FlightScenario,
    control_enabled: bool,
    cfg: RadioConfig,
    limits: MotionLimits,
    apf: ApfConfig,
    gs_pos,
    seed: int,
) -> Trajectory:
    """Fly from ``scenario.start`` to ``scenario.goal`` past a hovering partner.

    Without control the UAV runs the attraction-only argmin, i.e. flies the
    straight line as fast as the motion limits allow. With control the
    partner's uplink interference is added as repulsion. Each recorded step
    samples fresh pointing errors from stream ``seed + step``.
    """
    interferers = []
    if scenario.hover is not None:
        interferers = [Interferer(Position3(*scenario.hover), cfg.uav_tx_power_dbm)]
    planning = interferers if control_enabled else []
    state = UavState(Position3(*scenario.start), (0.0, 0.0, 0.0))
    goal = Position3(*scenario.goal)
    traj = Trajectory(control_enabled=control_enabled)
    traj.points.append(_measure(0.0, state.position, gs_pos, scenario.hover, cfg, seed, 0))
    for step in range(1, scenario.max_steps + 1):
        if distance(state.position, goal) <= apf.goal_radius:
            traj.converged = True
            break
        state = apf_step(state, goal, planning, limits, apf, cfg, gs_pos)
        traj.points.append(
            _measure(step * limits.dt, state.position, gs_pos, scenario.hover, cfg, seed, step)
        )
    else:
        traj.converged = distance(state.position, goal) <= apf.goal_radius
    return traj
