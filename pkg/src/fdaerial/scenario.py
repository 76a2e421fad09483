"""Experiment descriptions: defaults, deployment generators and JSON I/O.

All numbers are SI (Hz, m, s) or dB-based (dBm, dBi, dB) and degrees; the
unit is part of each key name.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .antenna import AntennaPattern, MisalignmentModel
from .apf import ApfConfig, FlightScenario, MotionLimits
from .channel import NoiseModel, PropagationParams
from .geometry import Position3
from .radio import RadioConfig


class ScenarioError(ValueError):
    """Invalid scenario document; the message names the offending field."""


# --- core scenario values -------------------------------------------------


@dataclass(frozen=True)
class LinearDeployment:
    range_m: float = 5000.0
    height_m: float = 100.0
    separation_m: float = 50.0
    type: str = field(default="linear", init=False)


@dataclass(frozen=True)
class CircularDeployment:
    radius_m: float = 5000.0
    height_m: float = 100.0
    separation_m: float = 50.0
    type: str = field(default="circular", init=False)


@dataclass(frozen=True)
class ExplicitDeployment:
    uavs: tuple = ()
    type: str = field(default="explicit", init=False)


@dataclass(frozen=True)
class FlightConfig:
    scenario: FlightScenario = field(default_factory=FlightScenario)
    control: bool = True
    limits: MotionLimits = field(default_factory=MotionLimits)
    apf: ApfConfig = field(default_factory=ApfConfig)


@dataclass(frozen=True)
class MonteCarlo:
    snapshots: int = 1000
    seed: int = 0


@dataclass(frozen=True)
class Scenario:
    radio: RadioConfig = field(default_factory=RadioConfig)
    gs_position: Position3 = Position3(0.0, 0.0, 10.0)
    deployment: object = field(default_factory=LinearDeployment)
    flight: Optional[FlightConfig] = field(default_factory=FlightConfig)
    monte_carlo: MonteCarlo = field(default_factory=MonteCarlo)


def default_scenario() -> Scenario:
    return Scenario()


def linear_deployment(range_m: float, height_m: float, separation_m: float, gs_position=(0.0, 0.0, 0.0)):
    """Victim at ``range_m`` along +x from the GS, interferer ``separation_m`` nearer."""
    if not 0.0 < separation_m < range_m:
        raise ScenarioError(f"deployment.separation_m: must satisfy 0 < separation < range, got {separation_m}")
    gx, gy = gs_position[0], gs_position[1]
    victim = Position3(gx + range_m, gy, height_m)
    interferer = Position3(gx + range_m - separation_m, gy, height_m)
    return victim, interferer


def circular_deployment(radius_m: float, height_m: float, separation_m: float, gs_position=(0.0, 0.0, 0.0)):
    """Both UAVs on a GS-centred horizontal circle, ``separation_m`` apart (chord)."""
    if not 0.0 < separation_m <= 2.0 * radius_m:
        raise ScenarioError(
            f"deployment.separation_m: must satisfy 0 < separation <= 2*radius, got {separation_m}"
        )
    gx, gy = gs_position[0], gs_position[1]
    theta = 2.0 * math.asin(min(1.0, separation_m / (2.0 * radius_m)))
    victim = Position3(gx + radius_m, gy, height_m)
    interferer = Position3(gx + radius_m * math.cos(theta), gy + radius_m * math.sin(theta), height_m)
    return victim, interferer


def deployment_positions(scenario: Scenario) -> dict:
    """UAV id -> position for the scenario's deployment, in pairing order."""
    dep = scenario.deployment
    gs = scenario.gs_position
    if dep.type == "linear":
        v, i = linear_deployment(dep.range_m, dep.height_m, dep.separation_m, gs)
        return {"victim": v, "interferer": i}
    if dep.type == "circular":
        v, i = circular_deployment(dep.radius_m, dep.height_m, dep.separation_m, gs)
        return {"victim": v, "interferer": i}
    return {uid: Position3(*pos) for uid, pos in dep.uavs}


# --- JSON document schema ---------------------------------------------------

_STRICT = ConfigDict(extra="forbid")
Vec3 = tuple[float, float, float]


class AntennaDoc(BaseModel):
    model_config = _STRICT
    gain_dbi: float
    hpbw_v_deg: float = Field(gt=0, le=360)
    hpbw_h_deg: float = Field(gt=0, le=360)


class NoiseDoc(BaseModel):
    model_config = _STRICT
    density_dbm_hz: float = Field(-174.0, lt=0)
    figure_db: float = 5.0


class RadioDoc(BaseModel):
    model_config = _STRICT
    frequency_hz: float = Field(5.7e9, gt=0)
    bandwidth_hz: float = Field(10e6, gt=0)
    gs_tx_power_dbm: float = 11.0
    uav_tx_power_dbm: float = 0.0
    gs_antenna: AntennaDoc = AntennaDoc(gain_dbi=22.0, hpbw_v_deg=4.0, hpbw_h_deg=58.0)
    uav_antenna: AntennaDoc = AntennaDoc(gain_dbi=15.0, hpbw_v_deg=36.0, hpbw_h_deg=36.0)
    noise: NoiseDoc = NoiseDoc()
    reflection_coefficient: float = Field(-1.0, ge=-1, le=1)
    misalignment_sigma_deg: float = Field(3.0, ge=0)
    pattern_floor_db: float = Field(-50.0, lt=-3)


class LinearDoc(BaseModel):
    model_config = _STRICT
    type: Literal["linear"]
    range_m: float = Field(5000.0, gt=0)
    height_m: float = Field(100.0, gt=0)
    separation_m: float = Field(50.0, gt=0)

    @model_validator(mode="after")
    def _inside_range(self):
        if not self.separation_m < self.range_m:
            raise ValueError("separation_m must be smaller than range_m")
        return self


class CircularDoc(BaseModel):
    model_config = _STRICT
    type: Literal["circular"]
    radius_m: float = Field(5000.0, gt=0)
    height_m: float = Field(100.0, gt=0)
    separation_m: float = Field(50.0, gt=0)

    @model_validator(mode="after")
    def _inside_diameter(self):
        if not self.separation_m <= 2 * self.radius_m:
            raise ValueError("separation_m must not exceed the circle diameter")
        return self


class UavDoc(BaseModel):
    model_config = _STRICT
    id: str
    position: Vec3


class ExplicitDoc(BaseModel):
    model_config = _STRICT
    type: Literal["explicit"]
    uavs: list[UavDoc] = Field(min_length=2)

    @model_validator(mode="after")
    def _paired(self):
        if len(self.uavs) % 2:
            raise ValueError("unpaired UAV: explicit deployments need an even UAV count")
        if len({u.id for u in self.uavs}) != len(self.uavs):
            raise ValueError("duplicate UAV id")
        if any(u.position[2] < 0 for u in self.uavs):
            raise ValueError("UAV below ground")
        return self


DeploymentDoc = Annotated[Union[LinearDoc, CircularDoc, ExplicitDoc], Field(discriminator="type")]


class FlightDoc(BaseModel):
    model_config = _STRICT
    start: Vec3 = (4000.0, 0.0, 50.0)
    goal: Vec3 = (5000.0, 0.0, 50.0)
    hover: Optional[Vec3] = (4500.0, 0.0, 45.0)
    control: bool = True
    v_max_mps: float = Field(10.0, gt=0)
    a_max_mps2: float = Field(5.0, gt=0)
    dt_s: float = Field(1.0, gt=0)
    omega: float = Field(0.02, ge=0)
    accel_levels: int = Field(5, ge=3)
    goal_radius_m: float = Field(5.0, gt=0)
    max_steps: int = Field(1000, ge=1)
    rep_ref_dbm: float = -90.0
    rep_scale: float = Field(1.0, ge=0)
    planning_field: Literal["mean", "coherent"] = "mean"

    @model_validator(mode="after")
    def _odd_levels(self):
        if self.accel_levels % 2 == 0:
            raise ValueError("accel_levels must be odd")
        return self


class MonteCarloDoc(BaseModel):
    model_config = _STRICT
    snapshots: int = Field(1000, ge=1)
    seed: int = Field(0, ge=0, lt=2**64)


class ScenarioDoc(BaseModel):
    model_config = _STRICT
    radio: RadioDoc = RadioDoc()
    gs_position: Vec3 = (0.0, 0.0, 10.0)
    deployment: DeploymentDoc = LinearDoc(type="linear")
    flight: Optional[FlightDoc] = FlightDoc()
    monte_carlo: MonteCarloDoc = MonteCarloDoc()

    @model_validator(mode="after")
    def _gs_above_ground(self):
        if self.gs_position[2] < 0:
            raise ValueError("gs_position must not be below ground")
        return self


# --- conversion -------------------------------------------------------------


def _from_doc(doc: ScenarioDoc) -> Scenario:
    r = doc.radio
    radio = RadioConfig(
        bandwidth_hz=r.bandwidth_hz,
        gs_tx_power_dbm=r.gs_tx_power_dbm,
        uav_tx_power_dbm=r.uav_tx_power_dbm,
        gs_pattern=AntennaPattern(r.gs_antenna.gain_dbi, r.gs_antenna.hpbw_h_deg, r.gs_antenna.hpbw_v_deg, r.pattern_floor_db),
        uav_pattern=AntennaPattern(r.uav_antenna.gain_dbi, r.uav_antenna.hpbw_h_deg, r.uav_antenna.hpbw_v_deg, r.pattern_floor_db),
        noise=NoiseModel(r.noise.density_dbm_hz, r.noise.figure_db),
        prop=PropagationParams(r.frequency_hz, r.reflection_coefficient),
        misalignment=MisalignmentModel(r.misalignment_sigma_deg),
    )
    d = doc.deployment
    if d.type == "linear":
        dep = LinearDeployment(d.range_m, d.height_m, d.separation_m)
    elif d.type == "circular":
        dep = CircularDeployment(d.radius_m, d.height_m, d.separation_m)
    else:
        dep = ExplicitDeployment(tuple((u.id, Position3(*u.position)) for u in d.uavs))
    flight = None
    if doc.flight is not None:
        f = doc.flight
        flight = FlightConfig(
            scenario=FlightScenario(
                Position3(*f.start),
                Position3(*f.goal),
                None if f.hover is None else Position3(*f.hover),
                f.max_steps,
            ),
            control=f.control,
            limits=MotionLimits(f.v_max_mps, f.a_max_mps2, f.dt_s),
            apf=ApfConfig(f.omega, f.accel_levels, f.goal_radius_m, f.rep_ref_dbm, f.rep_scale, f.planning_field),
        )
    return Scenario(
        radio=radio,
        gs_position=Position3(*doc.gs_position),
        deployment=dep,
        flight=flight,
        monte_carlo=MonteCarlo(doc.monte_carlo.snapshots, doc.monte_carlo.seed),
    )


def scenario_to_dict(sc: Scenario) -> dict:
    r = sc.radio
    if r.gs_pattern.floor_db != r.uav_pattern.floor_db:
        raise ScenarioError("radio.pattern_floor_db: GS and UAV floors differ and cannot be serialised")
    out = {
        "radio": {
            "frequency_hz": r.prop.frequency_hz,
            "bandwidth_hz": r.bandwidth_hz,
            "gs_tx_power_dbm": r.gs_tx_power_dbm,
            "uav_tx_power_dbm": r.uav_tx_power_dbm,
            "gs_antenna": _antenna_dict(r.gs_pattern),
            "uav_antenna": _antenna_dict(r.uav_pattern),
            "noise": {"density_dbm_hz": r.noise.density_dbm_per_hz, "figure_db": r.noise.noise_figure_db},
            "reflection_coefficient": r.prop.reflection_coefficient,
            "misalignment_sigma_deg": r.misalignment.sigma_deg,
            "pattern_floor_db": r.gs_pattern.floor_db,
        },
        "gs_position": list(sc.gs_position),
        "deployment": _deployment_dict(sc.deployment),
        "monte_carlo": {"snapshots": sc.monte_carlo.snapshots, "seed": sc.monte_carlo.seed},
    }
    if sc.flight is None:
        out["flight"] = None
    else:
        f = sc.flight
        out["flight"] = {
            "start": list(f.scenario.start),
            "goal": list(f.scenario.goal),
            "hover": None if f.scenario.hover is None else list(f.scenario.hover),
            "control": f.control,
            "v_max_mps": f.limits.v_max,
            "a_max_mps2": f.limits.a_max,
            "dt_s": f.limits.dt,
            "omega": f.apf.omega,
            "accel_levels": f.apf.accel_levels,
            "goal_radius_m": f.apf.goal_radius,
            "max_steps": f.scenario.max_steps,
            "rep_ref_dbm": f.apf.rep_ref_dbm,
            "rep_scale": f.apf.rep_scale,
            "planning_field": f.apf.planning_field,
        }
    return out


def _antenna_dict(p: AntennaPattern) -> dict:
    return {"gain_dbi": p.peak_gain_dbi, "hpbw_v_deg": p.hpbw_v_deg, "hpbw_h_deg": p.hpbw_h_deg}


def _deployment_dict(dep) -> dict:
    if dep.type == "linear":
        return {"type": "linear", "range_m": dep.range_m, "height_m": dep.height_m, "separation_m": dep.separation_m}
    if dep.type == "circular":
        return {"type": "circular", "radius_m": dep.radius_m, "height_m": dep.height_m, "separation_m": dep.separation_m}
    return {"type": "explicit", "uavs": [{"id": uid, "position": list(pos)} for uid, pos in dep.uavs]}


def dump_scenario(sc: Scenario) -> str:
    return json.dumps(scenario_to_dict(sc), indent=2, sort_keys=True)


def _format_errors(err: ValidationError) -> str:
    lines = []
    for e in err.errors():
        loc = ".".join(str(p) for p in e["loc"] if not _is_union_tag(p))
        lines.append(f"{loc or '<root>'}: {e['msg']}")
    return "; ".join(lines)


def _is_union_tag(part) -> bool:
    return part in ("linear", "circular", "explicit")


def load_scenario(source) -> Scenario:
    """Parse and validate a scenario from a path, a JSON string or a dict.

    Unknown keys are rejected and omitted sections take their defaults.
    Raises :class:`ScenarioError` with dotted field paths on failure.
    """
    if isinstance(source, dict):
        data = source
    else:
        text = source
        if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
            try:
                text = Path(source).read_text()
            except OSError as exc:
                raise ScenarioError(f"cannot read scenario: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"scenario is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ScenarioError("<root>: scenario must be a JSON object")
    try:
        doc = ScenarioDoc.model_validate(data)
    except ValidationError as exc:
        raise ScenarioError(_format_errors(exc)) from None
    try:
        return _from_doc(doc)
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
