"""Independent numerical certifier of the closed-form allocation.

With the rate constraints tight, the frame time needed to deliver a common
rate R0 to user k is R0 * g_k(x) where x is the harvested-SNR ratio
C_k * nu_k / tau_k and g_k(x) = (1 + x/C_k) / ln(1 + x).  Minimizing each
g_k independently and forcing the total time budget to one frame gives
R0 = 1 / sum_k min_x g_k(x).  No Lambert W or Lagrangian algebra enters:
the inner minima are found by a log-spaced grid scan plus golden-section
refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .search import golden_section_min

_X_GRID_LO = 1e-6


@dataclass(frozen=True)
class OracleConfig:
    ratio_grid_size: int = 20000
    ratio_max: float = 1e8
    refine_iters: int = 200

    def __post_init__(self):
        if self.ratio_grid_size < 100:
            raise ValueError("ratio_grid_size must be >= 100")
        if not self.ratio_max > 0:
            raise ValueError("ratio_max must be positive")
        if self.refine_iters < 1:
            raise ValueError("refine_iters must be >= 1")


@dataclass(frozen=True)
class OracleSolution:
    common_rate: float
    minimizers: tuple[float, ...]  # optimal x per user, for split cross-checks


def per_user_time_cost(c: float, x: float) -> float:
    """Frame time per nat of common rate for one user at ratio x."""
    if not x > 0:
        raise ValueError(f"ratio x must be positive, got {x}")
    if not c > 0:
        raise ValueError(f"SNR coefficient must be positive, got {c}")
    return (1.0 + x / c) / math.log1p(x)


def _min_time_cost(c: float, cfg: OracleConfig) -> tuple[float, float]:
    """(x*, g(x*)) for one user; grid upper bound tracks c since the
    minimizer grows like c / ln c."""
    hi = max(cfg.ratio_max, 10.0 * c)
    xs = np.logspace(math.log10(_X_GRID_LO), math.log10(hi), cfg.ratio_grid_size)
    g = (1.0 + xs / c) / np.log1p(xs)
    i = int(np.argmin(g))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, len(xs) - 1)]
    # refine in log space: the bracket spans a constant log width
    log_x, g_min = golden_section_min(
        lambda t: per_user_time_cost(c, math.exp(t)),
        math.log(a),
        math.log(b),
        max_iters=cfg.refine_iters,
    )
    return math.exp(log_x), g_min


def oracle_common_rate(
    coeffs: Sequence[float], cfg: OracleConfig | None = None
) -> OracleSolution:
    """Numerically optimal common rate for the given SNR coefficients."""
    if cfg is None:
        cfg = OracleConfig()
    total = 0.0
    minimizers = []
    for c in coeffs:
        if not c > 0:
            raise ValueError(f"SNR coefficients must be positive, got {c}")
        x_opt, g_min = _min_time_cost(c, cfg)
        total += g_min
        minimizers.append(x_opt)
    return OracleSolution(common_rate=1.0 / total, minimizers=tuple(minimizers))
