"""Golden-section refinement on a bounded interval."""

from __future__ import annotations

import math
from typing import Callable

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 0.0,
    max_iters: int = 200,
) -> tuple[float, float]:
    """Minimize unimodal f on [a, b]; returns (x, f(x)).

    Stops when the bracket width drops below tol or after max_iters
    shrink steps, whichever comes first.
    """
    a, b = min(a, b), max(a, b)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iters):
        if b - a <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    if fc < fd:
        return c, fc
    return d, fd


def golden_section_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 0.0,
    max_iters: int = 200,
) -> tuple[float, float]:
    """Maximize unimodal f on [a, b]; returns (x, f(x))."""
    x, neg = golden_section_min(lambda t: -f(t), a, b, tol, max_iters)
    return x, -neg
