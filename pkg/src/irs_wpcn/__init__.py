"""Max-min-fair time allocation and mechanical-tilt optimization for an
IRS-assisted wireless-powered communication network."""

from .allocator import (
    Allocation,
    InfeasibleAllocationError,
    achieved_rate,
    allocate,
    common_rate,
    eh_duration,
    harvested_energy,
    it_duration,
)
from .channel import (
    GrazingAngleError,
    IrsConfig,
    IrsKind,
    NodePosition,
    Scenario,
    off_boresight_angle,
    product_gain,
    snr_coefficient,
    tilt_bounds,
    unit_cell_gain,
)
from .experiments import (
    ResultRow,
    ScenarioFormatError,
    SweepSpec,
    emit_csv,
    load_scenario,
    place_ehus_on_arc,
    run_sweep,
)
from .lambertw import lambert_w0, lambert_w0_log
from .oracle import OracleConfig, OracleSolution, oracle_common_rate, per_user_time_cost
from .tilt import TiltSearchConfig, optimize_tilt, rate_profile

__all__ = [
    "Allocation",
    "GrazingAngleError",
    "InfeasibleAllocationError",
    "IrsConfig",
    "IrsKind",
    "NodePosition",
    "OracleConfig",
    "OracleSolution",
    "ResultRow",
    "Scenario",
    "ScenarioFormatError",
    "SweepSpec",
    "TiltSearchConfig",
    "achieved_rate",
    "allocate",
    "common_rate",
    "eh_duration",
    "emit_csv",
    "harvested_energy",
    "it_duration",
    "lambert_w0",
    "lambert_w0_log",
    "load_scenario",
    "off_boresight_angle",
    "optimize_tilt",
    "oracle_common_rate",
    "per_user_time_cost",
    "place_ehus_on_arc",
    "product_gain",
    "rate_profile",
    "run_sweep",
    "snr_coefficient",
    "tilt_bounds",
    "unit_cell_gain",
]
