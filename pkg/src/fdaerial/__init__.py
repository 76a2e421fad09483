"""Link-level simulator for paired full-duplex multi-UAV links with directional antennas."""
from .antenna import AntennaPattern, MisalignmentModel, Pointing, boresight_toward, pattern_gain, sample_misalignment
from .channel import NoiseModel, PropagationParams, free_space_gain, noise_power, two_ray_gain
from .geometry import Bearing, Position3, RayGeometry, bearing, distance, mirror_across_ground, reflection_geometry
from .radio import (
    ChannelPlan,
    LinkResult,
    RadioConfig,
    Uav,
    capacity,
    co_channel_interferer,
    downlink_link_result,
    pair_channels,
    uplink_link_result,
)
from .scenario import Scenario, ScenarioError, default_scenario, load_scenario

__version__ = "0.1.0"

__all__ = [
    "AntennaPattern",
    "Bearing",
    "ChannelPlan",
    "LinkResult",
    "MisalignmentModel",
    "NoiseModel",
    "Pointing",
    "Position3",
    "PropagationParams",
    "RadioConfig",
    "RayGeometry",
    "Scenario",
    "ScenarioError",
    "Uav",
    "bearing",
    "boresight_toward",
    "capacity",
    "co_channel_interferer",
    "default_scenario",
    "distance",
    "downlink_link_result",
    "free_space_gain",
    "load_scenario",
    "mirror_across_ground",
    "noise_power",
    "pair_channels",
    "pattern_gain",
    "reflection_geometry",
    "sample_misalignment",
    "two_ray_gain",
    "uplink_link_result",
]
