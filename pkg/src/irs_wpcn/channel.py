"""Far-field deterministic channel model for a mechanically tilted IRS.

All geometry lives in the x0z plane: the base station sits in the second
quadrant at polar angle -alpha_0 from the z-axis (boresight), the energy
harvesting users (EHUs) in the first quadrant at +alpha_k.  Angular
coordinates are stored as positive magnitudes; the sign convention is
applied through the ``role`` parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class GrazingAngleError(ValueError):
    """Node lies at or behind the surface plane (|off-boresight| >= pi/2)."""


class IrsKind(str, Enum):
    PRACTICAL = "practical"
    BENCHMARK = "benchmark"


@dataclass(frozen=True)
class NodePosition:
    """Polar placement of a node in the x0z plane.

    angle_rad is the magnitude of the polar angle measured from the z-axis
    (boresight at zero tilt); it must lie strictly inside (0, pi/2).
    """

    distance_m: float
    angle_rad: float

    def __post_init__(self):
        if not self.distance_m > 0:
            raise ValueError(f"distance_m must be positive, got {self.distance_m}")
        if not 0 < self.angle_rad < math.pi / 2:
            raise ValueError(
                f"angle_rad must lie in (0, pi/2), got {self.angle_rad}"
            )


@dataclass(frozen=True)
class IrsConfig:
    """Surface made of cell_count unit cells of area cell_area_m2 each.

    kind='practical' applies the cos^q radiation pattern of the unit cells;
    kind='benchmark' is the hypothetical angle-insensitive surface with
    halved per-cell gain (pattern_exponent is ignored for it).
    """

    cell_count: int
    cell_area_m2: float
    wavelength_m: float
    pattern_exponent: float = 1.0
    kind: IrsKind = IrsKind.PRACTICAL

    def __post_init__(self):
        if self.cell_count < 1:
            raise ValueError(f"cell_count must be >= 1, got {self.cell_count}")
        if not self.cell_area_m2 > 0:
            raise ValueError("cell_area_m2 must be positive")
        if not self.wavelength_m > 0:
            raise ValueError("wavelength_m must be positive")
        if self.cell_area_m2 > (self.wavelength_m / 4) ** 2 * (1 + 1e-12):
            raise ValueError(
                f"cell_area_m2={self.cell_area_m2} exceeds (wavelength/4)^2="
                f"{(self.wavelength_m / 4) ** 2}"
            )
        if self.pattern_exponent < 0:
            raise ValueError("pattern_exponent must be nonnegative")
        # tolerate plain strings from config files
        object.__setattr__(self, "kind", IrsKind(self.kind))

    @property
    def total_area_m2(self) -> float:
        return self.cell_count * self.cell_area_m2


@dataclass(frozen=True)
class Scenario:
    """BS + ordered EHU list + surface and power parameters."""

    bs: NodePosition
    ehus: tuple[NodePosition, ...]
    irs: IrsConfig
    tx_power_w: float
    noise_power_w: float
    efficiencies: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "ehus", tuple(self.ehus))
        object.__setattr__(self, "efficiencies", tuple(self.efficiencies))
        if len(self.ehus) < 1:
            raise ValueError("at least one EHU is required")
        angles = [e.angle_rad for e in self.ehus]
        if any(b <= a for a, b in zip(angles, angles[1:])):
            raise ValueError("EHUs must be ordered by strictly increasing angle")
        if len(self.efficiencies) != len(self.ehus):
            raise ValueError("one efficiency per EHU is required")
        if any(not 0 < eta <= 1 for eta in self.efficiencies):
            raise ValueError("efficiencies must lie in (0, 1]")
        if not self.tx_power_w > 0:
            raise ValueError("tx_power_w must be positive")
        if not self.noise_power_w > 0:
            raise ValueError("noise_power_w must be positive")

    @property
    def num_ehus(self) -> int:
        return len(self.ehus)


def off_boresight_angle(node: NodePosition, role: str, tilt: float) -> float:
    """Angle between the node's line of sight and the tilted boresight.

    Tilting by +tilt moves the boresight away from the BS (stored at -alpha_0)
    and towards the EHUs, hence alpha_0 + tilt for the BS and alpha_k - tilt
    for an EHU.
    """
    if role == "bs":
        return node.angle_rad + tilt
    if role == "ehu":
        return node.angle_rad - tilt
    raise ValueError(f"role must be 'bs' or 'ehu', got {role!r}")


def unit_cell_gain(distance: float, angle: float, irs: IrsConfig) -> float:
    """Channel gain between one unit cell and a node at the given geometry.

    Practical kind: A * cos^q(angle) / (4 pi d^2); raises GrazingAngleError
    for |angle| >= pi/2.  Benchmark kind: A / (8 pi d^2), angle-independent.
    """
    if not distance > 0:
        raise ValueError(f"distance must be positive, got {distance}")
    if irs.kind is IrsKind.BENCHMARK:
        return irs.cell_area_m2 / (8 * math.pi * distance**2)
    if abs(angle) >= math.pi / 2:
        raise GrazingAngleError(
            f"off-boresight angle {angle} rad is at or behind the surface"
        )
    return (
        irs.cell_area_m2
        * math.cos(angle) ** irs.pattern_exponent
        / (4 * math.pi * distance**2)
    )


def product_gain(scenario: Scenario, ehu_index: int, tilt: float) -> float:
    """Two-hop per-cell gain B_k = Omega_0(tilt) * Omega_k(tilt)."""
    ehu = scenario.ehus[ehu_index]
    omega_0 = unit_cell_gain(
        scenario.bs.distance_m,
        off_boresight_angle(scenario.bs, "bs", tilt),
        scenario.irs,
    )
    omega_k = unit_cell_gain(
        ehu.distance_m,
        off_boresight_angle(ehu, "ehu", tilt),
        scenario.irs,
    )
    return omega_0 * omega_k


def snr_coefficient(scenario: Scenario, ehu_index: int, tilt: float) -> float:
    """Effective SNR coefficient C_k = eta_k * P0 * N^4 * B_k^2 / N0."""
    b_k = product_gain(scenario, ehu_index, tilt)
    n = scenario.irs.cell_count
    return (
        scenario.efficiencies[ehu_index]
        * scenario.tx_power_w
        * float(n) ** 4
        * b_k**2
        / scenario.noise_power_w
    )


def tilt_bounds(scenario: Scenario) -> tuple[float, float]:
    """Feasible mechanical tilt range as (negative_limit, positive_limit).

    The surface may rotate until either the BS or the outermost EHU reaches
    the surface plane: negative limit pi/2 - max_k alpha_k, positive limit
    pi/2 - alpha_0.  The feasible interval is [-negative_limit, positive_limit].
    """
    max_ehu_angle = max(e.angle_rad for e in scenario.ehus)
    psi_n = math.pi / 2 - max_ehu_angle
    psi_p = math.pi / 2 - scenario.bs.angle_rad
    return psi_n, psi_p
