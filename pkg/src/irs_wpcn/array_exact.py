"""Exact per-element planar-array model.

Validates the far-field coherent gain N^2 * B_k against a brute-force sum
over unit cells at their true positions.  The surface is realized as a
square sqrt(N) x sqrt(N) grid with pitch sqrt(A), centered at the origin in
the y-z plane and rotated about the y-axis by the mechanical tilt (the
boresight stays in the x0z plane).  Per-element gains reuse the far-field
per-cell formula with the node's global off-boresight angle but the exact
per-element distance, so the validation isolates distance-phase effects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import IrsConfig, IrsKind, NodePosition, off_boresight_angle


@dataclass(frozen=True)
class ElementGrid:
    """Cell-center coordinates (N x 3, meters) of the tilted surface."""

    positions: np.ndarray
    tilt: float


@dataclass(frozen=True)
class PhaseProfile:
    """Per-element phases in [0, 2 pi)."""

    phases: np.ndarray


def build_grid(irs: IrsConfig, tilt: float) -> ElementGrid:
    """Square grid of cell centers, pitch sqrt(cell area), rotated by tilt."""
    n = irs.cell_count
    side = math.isqrt(n)
    if side * side != n:
        raise ValueError(
            f"exact array model requires a perfect-square cell count, got {n}"
        )
    pitch = math.sqrt(irs.cell_area_m2)
    coords = (np.arange(side) - (side - 1) / 2.0) * pitch
    yy, zz = np.meshgrid(coords, coords, indexing="ij")
    y = yy.ravel()
    z0 = zz.ravel()
    # rotate the surface plane (x = 0) about the y-axis by tilt
    x = z0 * math.sin(tilt)
    z = z0 * math.cos(tilt)
    return ElementGrid(positions=np.column_stack([x, y, z]), tilt=tilt)


def _node_cartesian(node: NodePosition, role: str) -> np.ndarray:
    # BS sits at polar angle -alpha from the z-axis, EHUs at +alpha
    sign = -1.0 if role == "bs" else 1.0
    if role not in ("bs", "ehu"):
        raise ValueError(f"role must be 'bs' or 'ehu', got {role!r}")
    return np.array(
        [
            sign * node.distance_m * math.sin(node.angle_rad),
            0.0,
            node.distance_m * math.cos(node.angle_rad),
        ]
    )


def _element_distances(grid: ElementGrid, node: NodePosition, role: str) -> np.ndarray:
    point = _node_cartesian(node, role)
    return np.linalg.norm(grid.positions - point, axis=1)


def node_phase_profile(
    grid: ElementGrid, node: NodePosition, role: str, wavelength: float
) -> PhaseProfile:
    """Propagation phases 2 pi d_n / lambda mod 2 pi, exact distances."""
    d = _element_distances(grid, node, role)
    return PhaseProfile(phases=np.mod(2.0 * math.pi * d / wavelength, 2.0 * math.pi))


def design_reflection_phases(
    bs_profile: PhaseProfile, ehu_profile: PhaseProfile
) -> PhaseProfile:
    """Reflection phases that align both hops: theta_n = phi_0n + phi_kn."""
    if len(bs_profile.phases) != len(ehu_profile.phases):
        raise ValueError("phase profiles must have equal length")
    return PhaseProfile(
        phases=np.mod(bs_profile.phases + ehu_profile.phases, 2.0 * math.pi)
    )


def _element_gains(
    grid: ElementGrid, node: NodePosition, role: str, irs: IrsConfig
) -> np.ndarray:
    d = _element_distances(grid, node, role)
    if irs.kind is IrsKind.BENCHMARK:
        return irs.cell_area_m2 / (8.0 * math.pi * d**2)
    angle = off_boresight_angle(node, role, grid.tilt)
    if abs(angle) >= math.pi / 2:
        raise ValueError(f"node at grazing angle {angle} rad")
    return (
        irs.cell_area_m2
        * math.cos(angle) ** irs.pattern_exponent
        / (4.0 * math.pi * d**2)
    )


def coherent_gain(
    grid: ElementGrid,
    bs: NodePosition,
    ehu: NodePosition,
    reflection: PhaseProfile,
    irs: IrsConfig,
) -> float:
    """|sum_n sqrt(gain_0n gain_kn) exp(j (theta_n - phi_0n - phi_kn))|^2."""
    s = coherent_sum(grid, bs, ehu, reflection, irs)
    return float(abs(s)) ** 2


def coherent_sum(
    grid: ElementGrid,
    bs: NodePosition,
    ehu: NodePosition,
    reflection: PhaseProfile,
    irs: IrsConfig,
) -> complex:
    """The complex two-hop array sum; real and positive for aligned phases."""
    amp = np.sqrt(
        _element_gains(grid, bs, "bs", irs) * _element_gains(grid, ehu, "ehu", irs)
    )
    phi_0 = node_phase_profile(grid, bs, "bs", irs.wavelength_m).phases
    phi_k = node_phase_profile(grid, ehu, "ehu", irs.wavelength_m).phases
    residual = reflection.phases - phi_0 - phi_k
    return complex(np.sum(amp * np.exp(1j * residual)))


def far_field_valid(irs: IrsConfig, d0: float) -> bool:
    """True when the total surface area satisfies S <= 9 d0^2."""
    return irs.total_area_m2 <= 9.0 * d0**2
