"""Sweeps behind the command-line subcommands.

Each function returns plain row dicts in sweep order. Sweep points may be
evaluated on a thread pool; results never depend on the worker count
because every point owns its random streams and reductions run in index
order.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from .apf import simulate_flight
from .channel import watts_to_dbm
from .efficiency import (
    EfficiencyResult,
    TddFdmConfig,
    omni_snr,
    proposed_efficiency,
    required_uplink_power,
    tdd_fdm_efficiency,
    tdd_split_for_demand,
)
from .radio import monte_carlo_downlink, pair_channels, snapshot_rng
from .scenario import (
    CircularDeployment,
    LinearDeployment,
    Scenario,
    ScenarioError,
    circular_deployment,
    deployment_positions,
    linear_deployment,
)

TDD_GUARD_FRACTION = 0.2


def frange(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid built from integer indices."""
    if not step > 0:
        raise ScenarioError("sweep step must be positive")
    if stop < start:
        raise ScenarioError("sweep maximum must not be below the minimum")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(n)]


def mean_std(values) -> tuple[float, float]:
    values = list(values)
    n = len(values)
    m = math.fsum(values) / n
    if n < 2:
        return m, 0.0
    var = math.fsum((v - m) ** 2 for v in values) / (n - 1)
    return m, math.sqrt(var)


def _pmap(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def pair_positions(scenario: Scenario, deployment_type: str, separation_m: float):
    gs = scenario.gs_position
    dep = scenario.deployment
    if deployment_type == "linear":
        base = dep if isinstance(dep, LinearDeployment) else LinearDeployment()
        return linear_deployment(base.range_m, base.height_m, separation_m, gs)
    if deployment_type == "circular":
        base = dep if isinstance(dep, CircularDeployment) else CircularDeployment()
        return circular_deployment(base.radius_m, base.height_m, separation_m, gs)
    raise ScenarioError(f"deployment type must be 'linear' or 'circular', got {deployment_type!r}")


def capacity_point(scenario: Scenario, deployment_type: str, separation_m: float) -> dict:
    victim, interferer = pair_positions(scenario, deployment_type, separation_m)
    mc = scenario.monte_carlo
    results = monte_carlo_downlink(
        scenario.gs_position, victim, interferer, scenario.radio, mc.snapshots, mc.seed
    )
    cap_mean, cap_std = mean_std(r.capacity_bps / 1e6 for r in results)
    i_mean = math.fsum(r.interference_w for r in results) / len(results)
    return {
        "separation_m": separation_m,
        "capacity_mean_mbps": cap_mean,
        "capacity_std_mbps": cap_std,
        "interference_mean_dbm": watts_to_dbm(i_mean),
    }


def capacity_sweep(scenario, deployment_type, sep_min, sep_max, sep_step, threads: int = 1) -> list[dict]:
    seps = frange(sep_min, sep_max, sep_step)
    for s in seps:
        pair_positions(scenario, deployment_type, s)
    return _pmap(lambda s: capacity_point(scenario, deployment_type, s), seps, threads)


def proposed_eta(scenario: Scenario, separation_m: float) -> float:
    """Monte Carlo mean of the full-duplex efficiency for a linear pair."""
    victim, interferer = pair_positions(scenario, "linear", separation_m)
    deployment = {"victim": victim, "interferer": interferer}
    plan = pair_channels(list(deployment), 2)
    mc = scenario.monte_carlo
    etas = [
        proposed_efficiency(deployment, scenario.gs_position, scenario.radio, plan, snapshot_rng(mc.seed, i)).eta
        for i in range(mc.snapshots)
    ]
    return math.fsum(etas) / len(etas)


def tdd_eta_for_demand(scenario: Scenario, deployment: dict, required_bps: float) -> EfficiencyResult:
    """TDD-FDM efficiency when each UAV's downlink slot is sized to the demand."""
    cfg = scenario.radio
    contributions = []
    for uid, pos in deployment.items():
        base = TddFdmConfig()
        achievable = cfg.bandwidth_hz * math.log2(1.0 + omni_snr(scenario.gs_position, pos, base, cfg))
        split = tdd_split_for_demand(required_bps, achievable, TDD_GUARD_FRACTION)
        tdd = replace(base, uplink_fraction=split.uplink_fraction, downlink_fraction=split.downlink_fraction)
        res = tdd_fdm_efficiency({uid: pos}, scenario.gs_position, tdd, cfg)
        contributions.extend(res.per_channel)
    return EfficiencyResult.from_contributions(contributions, len(contributions))


def efficiency_sweep(scenario, rate_min, rate_max, rate_step, separations, threads: int = 1) -> list[dict]:
    rates = frange(rate_min, rate_max, rate_step)
    if any(r < 0 for r in rates):
        raise ScenarioError("required rates must be non-negative")
    separations = list(separations)
    for s in separations:
        pair_positions(scenario, "linear", s)
    proposed = dict(zip(separations, _pmap(lambda s: proposed_eta(scenario, s), separations, threads)))
    rows = []
    for rate in rates:
        for s in separations:
            v, i = pair_positions(scenario, "linear", s)
            tdd = tdd_eta_for_demand(scenario, {"victim": v, "interferer": i}, rate * 1e6)
            rows.append({"required_rate_mbps": rate, "scheme": "tdd-fdm", "separation_m": s, "eta_bps_hz": tdd.eta})
            rows.append({"required_rate_mbps": rate, "scheme": "full-duplex", "separation_m": s, "eta_bps_hz": proposed[s]})
    return rows


def flight_sim(scenario: Scenario, control: bool | None = None):
    if scenario.flight is None:
        raise ScenarioError("flight: scenario has no flight section")
    f = scenario.flight
    ctl = f.control if control is None else control
    return simulate_flight(
        f.scenario, ctl, scenario.radio, f.limits, f.apf, scenario.gs_position, scenario.monte_carlo.seed
    )


def flight_rows(traj) -> list[dict]:
    rows = []
    for p in traj.points:
        rows.append({
            "record": "step",
            "t_s": p.t_s,
            "x": p.position[0],
            "y": p.position[1],
            "z": p.position[2],
            "interference_dbm": p.interference_dbm,
            "capacity_mbps": p.capacity_bps / 1e6,
            "converged": "",
        })
    last = traj.points[-1]
    rows.append({
        "record": "summary",
        "t_s": last.t_s,
        "x": last.position[0],
        "y": last.position[1],
        "z": last.position[2],
        "interference_dbm": traj.peak_interference_dbm,
        "capacity_mbps": traj.mean_capacity_bps / 1e6,
        "converged": "true" if traj.converged else "false",
    })
    return rows


def power_saving(scenario: Scenario, target_rate_bps: float) -> list[dict]:
    """Uplink power needed with directional vs omni antennas at the victim position."""
    uav = deployment_positions(scenario)
    pos = next(iter(uav.values()))
    p_dir = required_uplink_power(target_rate_bps, scenario.gs_position, pos, "directional", scenario.radio)
    p_omni = required_uplink_power(target_rate_bps, scenario.gs_position, pos, "omni", scenario.radio)
    delta = 0.0 if math.isinf(p_omni) else p_omni - p_dir
    return [
        {"mode": "directional", "required_uplink_power_dbm": p_dir, "delta_db": delta},
        {"mode": "omni", "required_uplink_power_dbm": p_omni, "delta_db": 0.0},
    ]
