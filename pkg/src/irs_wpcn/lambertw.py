"""Principal-branch Lambert W function, real arguments.

Halley iteration from a piecewise initial guess: a branch-point series for
arguments near -1/e, a rational guess on the mid range, and the log-log
asymptote for large arguments (solved in log space to dodge overflow).
"""

from __future__ import annotations

import math

_BRANCH_POINT = -1.0 / math.e
_STEP_TOL = 1e-14
_MAX_ITERS = 50
# arguments within this much below -1/e are treated as floating-point
# underflow of the caller's expression and clamped to the branch point
_CLAMP_SLACK = 1e-12


def lambert_w0(x: float) -> float:
    """Solve w * exp(w) = x for w >= -1 (principal branch), x >= -1/e."""
    if x < _BRANCH_POINT:
        if x >= _BRANCH_POINT - _CLAMP_SLACK:
            x = _BRANCH_POINT
        else:
            raise ValueError(
                f"lambert_w0 argument {x} below branch point -1/e"
            )
    if x == 0.0:
        return 0.0
    if x > math.e:
        return lambert_w0_log(math.log(x))

    if x < -0.25:
        # series about the branch point, p = sqrt(2 (1 + e x))
        p = math.sqrt(2.0 * (1.0 + math.e * x))
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
        if p < 1e-3:
            # next series term is O(p^4); iteration would divide by w+1 ~ 0
            return w
    else:
        w = x / (1.0 + x)
    return _halley(w, x)


def lambert_w0_log(log_x: float) -> float:
    """lambert_w0(exp(log_x)) without forming exp(log_x).

    Solves w + log w = log_x by Newton iteration; requires log_x > 1
    (i.e. argument > e) so that w > 1 and log w is safe.
    """
    if not log_x > 1.0:
        raise ValueError(f"lambert_w0_log requires log_x > 1, got {log_x}")
    l2 = math.log(log_x)
    w = log_x - l2 + l2 / log_x
    for _ in range(_MAX_ITERS):
        f = w + math.log(w) - log_x
        dw = f / (1.0 + 1.0 / w)
        w -= dw
        if abs(dw) <= _STEP_TOL * max(1.0, abs(w)):
            break
    return w


def _halley(w: float, x: float) -> float:
    for _ in range(_MAX_ITERS):
        ew = math.exp(w)
        f = w * ew - x
        denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0))
        dw = f / denom
        w -= dw
        if abs(dw) <= _STEP_TOL * max(1.0, abs(w)):
            break
    return w
