"""Outer 1-D maximization of the common rate over the mechanical tilt.

The rate is not proven unimodal in the tilt for more than one user, so a
coarse uniform grid over the feasible interval seeds a golden-section
refinement inside the best bracket.  Ties (e.g. the angle-insensitive
benchmark surface, whose rate is flat in the tilt) break towards the
smallest absolute tilt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .allocator import Allocation, InfeasibleAllocationError, allocate
from .channel import GrazingAngleError, Scenario, tilt_bounds
from .search import golden_section_max

_TIE_REL = 1e-12


@dataclass(frozen=True)
class TiltSearchConfig:
    grid_points: int = 721
    refine_tolerance_rad: float = 1e-8
    tie_break: str = "smallest_abs_tilt"

    def __post_init__(self):
        if self.grid_points < 3:
            raise ValueError("grid_points must be >= 3")
        if not self.refine_tolerance_rad > 0:
            raise ValueError("refine_tolerance_rad must be positive")
        if self.tie_break != "smallest_abs_tilt":
            raise ValueError(f"unknown tie_break {self.tie_break!r}")


def rate_profile(
    scenario: Scenario, tilt_samples: list[float]
) -> list[tuple[float, float]]:
    """Common rate at each tilt sample; infeasible samples yield NaN."""
    out = []
    for psi in tilt_samples:
        try:
            r0 = allocate(scenario, psi).common_rate
        except (GrazingAngleError, InfeasibleAllocationError):
            r0 = math.nan
        out.append((psi, r0))
    return out


def optimize_tilt(
    scenario: Scenario, search: TiltSearchConfig | None = None
) -> tuple[float, Allocation]:
    """Best tilt within the mechanical bounds and its allocation."""
    if search is None:
        search = TiltSearchConfig()
    psi_n, psi_p = tilt_bounds(scenario)
    lo, hi = -psi_n, psi_p

    def rate_or_neg_inf(psi: float) -> float:
        try:
            return allocate(scenario, psi).common_rate
        except (GrazingAngleError, InfeasibleAllocationError):
            return -math.inf

    grid = np.linspace(lo, hi, search.grid_points)
    values = np.array([rate_or_neg_inf(p) for p in grid])
    best = values.max()
    if not np.isfinite(best):
        raise InfeasibleAllocationError(
            "no feasible tilt found on the search grid"
        )

    # among near-equal grid maxima, seed from the smallest |tilt|
    near = np.flatnonzero(values >= best * (1.0 - _TIE_REL))
    seed_idx = near[np.argmin(np.abs(grid[near]))]
    a = grid[max(seed_idx - 1, 0)]
    b = grid[min(seed_idx + 1, len(grid) - 1)]
    refined_psi, refined_r0 = golden_section_max(
        rate_or_neg_inf, a, b, tol=search.refine_tolerance_rad
    )

    # zero tilt is always feasible (interior point); keeping it as a
    # candidate enforces R0(psi*) >= R0(0) and yields psi* = 0 on flat
    # profiles
    candidates = [
        (grid[seed_idx], values[seed_idx]),
        (refined_psi, refined_r0),
        (0.0, rate_or_neg_inf(0.0)),
    ]
    top = max(r0 for _, r0 in candidates)
    psi_star = min(
        (psi for psi, r0 in candidates if r0 >= top * (1.0 - _TIE_REL)),
        key=abs,
    )
    return psi_star, allocate(scenario, psi_star)
