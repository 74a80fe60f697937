"""Scenario files, EHU placement, parameter sweeps, and CSV output."""

from __future__ import annotations

import dataclasses
import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .allocator import Allocation, InfeasibleAllocationError, allocate
from .channel import (
    GrazingAngleError,
    IrsConfig,
    IrsKind,
    NodePosition,
    Scenario,
)
from .tilt import TiltSearchConfig, optimize_tilt

SWEEP_VARIABLES = ("cell_count", "bs_distance", "bs_angle")
SWEEP_MODES = ("optimal_tilt", "zero_tilt", "benchmark")

# column header for the swept quantity, per variable
_VAR_COLUMN = {"cell_count": "N", "bs_distance": "d0", "bs_angle": "alpha0"}

DEFAULT_WAVELENGTH_M = 0.1
DEFAULT_CELL_AREA_M2 = (DEFAULT_WAVELENGTH_M / 4) ** 2
DEFAULT_CELL_COUNT = 10_000
DEFAULT_TX_POWER_W = 4.0
DEFAULT_NOISE_POWER_W = 1e-13
DEFAULT_EFFICIENCY = 0.9
DEFAULT_BS_DISTANCE_M = 20.0
DEFAULT_BS_ANGLE_RAD = math.pi / 12
DEFAULT_ARC_RADIUS_M = 20.0
DEFAULT_ARC_ANGLE_MIN_RAD = math.pi / 40
DEFAULT_ARC_ANGLE_MAX_RAD = 19 * math.pi / 40


class ScenarioFormatError(ValueError):
    """Scenario file failed to parse or violates model invariants."""


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    values: tuple[float, ...]
    modes: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "modes", tuple(self.modes))
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(
                f"variable must be one of {SWEEP_VARIABLES}, got {self.variable!r}"
            )
        if not self.values:
            raise ValueError("values must be nonempty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values must be strictly increasing")
        if not self.modes:
            raise ValueError("modes must be nonempty")
        for m in self.modes:
            if m not in SWEEP_MODES:
                raise ValueError(f"mode must be one of {SWEEP_MODES}, got {m!r}")


@dataclass(frozen=True)
class ResultRow:
    value: float
    mode: str
    psi_star: float | None
    common_rate: float | None
    sum_rate: float | None
    it_durations: tuple[float, ...]
    eh_durations: tuple[float, ...]
    error: str = ""


def place_ehus_on_arc(
    count: int, radius: float, angle_min: float, angle_max: float
) -> list[NodePosition]:
    """Equally spaced EHUs on an arc, endpoints inclusive.

    A single EHU is placed at the midpoint of the angular range.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if not 0 < angle_min < angle_max < math.pi / 2:
        raise ValueError(
            f"need 0 < angle_min < angle_max < pi/2, got [{angle_min}, {angle_max}]"
        )
    if count == 1:
        angles = [(angle_min + angle_max) / 2.0]
    else:
        step = (angle_max - angle_min) / (count - 1)
        angles = [angle_min + i * step for i in range(count)]
    return [NodePosition(distance_m=radius, angle_rad=a) for a in angles]


def load_scenario(path: str | Path) -> Scenario:
    """Read a JSON scenario file, filling defaults for omitted fields.

    Schema (all top-level keys optional except that EHUs must come from
    either "ehus" or "arc"):
      bs:    {"distance_m": float, "angle_rad": float}
      ehus:  [{"distance_m": float, "angle_rad": float}, ...]
      arc:   {"count": int, "radius_m": float,
              "angle_min_rad": float, "angle_max_rad": float}
      irs:   {"cell_count": int, "cell_area_m2": float, "wavelength_m": float,
              "pattern_exponent": float, "kind": "practical" | "benchmark"}
      tx_power_w, noise_power_w: floats
      efficiency: float applied to all EHUs, or list with one entry per EHU
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except OSError as exc:
        raise ScenarioFormatError(f"{path}: cannot read scenario file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}"
        ) from exc
    if not isinstance(raw, dict):
        raise ScenarioFormatError(f"{path}: top level must be a JSON object")

    known = {"bs", "ehus", "arc", "irs", "tx_power_w", "noise_power_w", "efficiency"}
    unknown = set(raw) - known
    if unknown:
        raise ScenarioFormatError(f"{path}: unknown keys {sorted(unknown)}")

    try:
        bs_raw = raw.get("bs", {})
        bs = NodePosition(
            distance_m=float(bs_raw.get("distance_m", DEFAULT_BS_DISTANCE_M)),
            angle_rad=float(bs_raw.get("angle_rad", DEFAULT_BS_ANGLE_RAD)),
        )

        if "ehus" in raw and "arc" in raw:
            raise ScenarioFormatError(f"{path}: give either 'ehus' or 'arc', not both")
        if "ehus" in raw:
            ehus = [
                NodePosition(
                    distance_m=float(e["distance_m"]),
                    angle_rad=float(e["angle_rad"]),
                )
                for e in raw["ehus"]
            ]
        else:
            arc = raw.get("arc", {})
            ehus = place_ehus_on_arc(
                count=int(arc.get("count", 10)),
                radius=float(arc.get("radius_m", DEFAULT_ARC_RADIUS_M)),
                angle_min=float(arc.get("angle_min_rad", DEFAULT_ARC_ANGLE_MIN_RAD)),
                angle_max=float(arc.get("angle_max_rad", DEFAULT_ARC_ANGLE_MAX_RAD)),
            )
        order = sorted(range(len(ehus)), key=lambda i: ehus[i].angle_rad)
        if order != list(range(len(ehus))):
            warnings.warn(
                f"{path}: EHUs were not ordered by angle; sorting them",
                stacklevel=2,
            )
            ehus = [ehus[i] for i in order]

        irs_raw = raw.get("irs", {})
        wavelength = float(irs_raw.get("wavelength_m", DEFAULT_WAVELENGTH_M))
        irs = IrsConfig(
            cell_count=int(irs_raw.get("cell_count", DEFAULT_CELL_COUNT)),
            cell_area_m2=float(irs_raw.get("cell_area_m2", (wavelength / 4) ** 2)),
            wavelength_m=wavelength,
            pattern_exponent=float(irs_raw.get("pattern_exponent", 1.0)),
            kind=IrsKind(irs_raw.get("kind", "practical")),
        )

        eff_raw = raw.get("efficiency", DEFAULT_EFFICIENCY)
        if isinstance(eff_raw, (int, float)):
            efficiencies = [float(eff_raw)] * len(ehus)
        else:
            efficiencies = [float(v) for v in eff_raw]
            if order != list(range(len(efficiencies))) and len(order) == len(
                efficiencies
            ):
                efficiencies = [efficiencies[i] for i in order]

        return Scenario(
            bs=bs,
            ehus=tuple(ehus),
            irs=irs,
            tx_power_w=float(raw.get("tx_power_w", DEFAULT_TX_POWER_W)),
            noise_power_w=float(raw.get("noise_power_w", DEFAULT_NOISE_POWER_W)),
            efficiencies=tuple(efficiencies),
        )
    except ScenarioFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioFormatError(f"{path}: invalid scenario: {exc}") from exc


def _apply_variable(scenario: Scenario, variable: str, value: float) -> Scenario:
    if variable == "cell_count":
        irs = dataclasses.replace(scenario.irs, cell_count=int(round(value)))
        return dataclasses.replace(scenario, irs=irs)
    if variable == "bs_distance":
        bs = dataclasses.replace(scenario.bs, distance_m=float(value))
        return dataclasses.replace(scenario, bs=bs)
    bs = dataclasses.replace(scenario.bs, angle_rad=float(value))
    return dataclasses.replace(scenario, bs=bs)


def _run_mode(scenario: Scenario, mode: str) -> tuple[float, Allocation]:
    if mode == "benchmark":
        irs = dataclasses.replace(scenario.irs, kind=IrsKind.BENCHMARK)
        scenario = dataclasses.replace(scenario, irs=irs)
        return optimize_tilt(scenario, TiltSearchConfig())
    if mode == "optimal_tilt":
        return optimize_tilt(scenario, TiltSearchConfig())
    return 0.0, allocate(scenario, 0.0)


def run_sweep(scenario: Scenario, spec: SweepSpec) -> list[ResultRow]:
    """One ResultRow per (value, mode); infeasible rows carry the error."""
    rows = []
    for value in spec.values:
        varied = _apply_variable(scenario, spec.variable, value)
        for mode in spec.modes:
            try:
                psi, alloc = _run_mode(varied, mode)
            except (GrazingAngleError, InfeasibleAllocationError, ValueError) as exc:
                rows.append(
                    ResultRow(
                        value=value,
                        mode=mode,
                        psi_star=None,
                        common_rate=None,
                        sum_rate=None,
                        it_durations=(),
                        eh_durations=(),
                        error=str(exc),
                    )
                )
                continue
            k = varied.num_ehus
            rows.append(
                ResultRow(
                    value=value,
                    mode=mode,
                    psi_star=psi,
                    common_rate=alloc.common_rate,
                    sum_rate=k * alloc.common_rate,
                    it_durations=alloc.it_durations,
                    eh_durations=alloc.eh_durations,
                )
            )
    return rows


def _fmt(x: float | None) -> str:
    return "" if x is None else format(float(x), ".15g")


def emit_csv(rows: Sequence[ResultRow], path: str | Path, variable: str) -> None:
    """Write sweep rows to CSV; column order is fixed and documented in the
    README (swept value, mode, psi_star, R0, R_sum, tau_k..., nu_k..., error)."""
    if not rows:
        raise ValueError("rows must be nonempty")
    path = Path(path)
    k = max(len(r.it_durations) for r in rows)
    header = [_VAR_COLUMN[variable], "mode", "psi_star", "R0", "R_sum"]
    header += [f"tau_{i + 1}" for i in range(k)]
    header += [f"nu_{i + 1}" for i in range(k)]
    header.append("error")
    lines = [",".join(header)]
    for r in rows:
        taus = list(r.it_durations) + [None] * (k - len(r.it_durations))
        nus = list(r.eh_durations) + [None] * (k - len(r.eh_durations))
        fields = [_fmt(r.value), r.mode, _fmt(r.psi_star), _fmt(r.common_rate),
                  _fmt(r.sum_rate)]
        fields += [_fmt(t) for t in taus]
        fields += [_fmt(n) for n in nus]
        fields.append(r.error.replace(",", ";"))
        lines.append(",".join(fields))
    try:
        path.write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc
