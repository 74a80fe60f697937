"""Closed-form max-min time allocation at a fixed tilt.

Given the per-user SNR coefficients C_k, the common rate and the per-user
energy-harvesting / information-transmission slot durations follow in
closed form through the Lambert W function.  Rates are in nats per frame
(the closed form presumes natural log); unit conversion is left to callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .channel import Scenario, product_gain, snr_coefficient
from .lambertw import lambert_w0, lambert_w0_log

# |C - 1| below this switches to the analytic limits of the 0/0 forms
_UNIT_WINDOW = 1e-9
# above this, (C-1)/e would lose precision / overflow; use the log path
_LARGE_C = 1e15


class InfeasibleAllocationError(RuntimeError):
    """No positive rate is achievable (some channel product gain is zero)."""


@dataclass(frozen=True)
class Allocation:
    """Optimal per-frame time split and the resulting rates and energies."""

    tilt_rad: float
    eh_durations: tuple[float, ...]  # nu_k, fraction of the unit frame
    it_durations: tuple[float, ...]  # tau_k
    common_rate: float  # nats/frame
    rates: tuple[float, ...]  # nats/frame, equals common_rate per user
    energies: tuple[float, ...]  # joules per frame
    snr_coeffs: tuple[float, ...]


def _w_shifted(c: float) -> float:
    """W((c - 1) / e) for c > 0, stable for c near 1 and for huge c."""
    if c > _LARGE_C:
        return lambert_w0_log(math.log(c) - 1.0)
    return lambert_w0((c - 1.0) / math.e)


def common_rate(coeffs: Sequence[float]) -> float:
    """Max-min common rate for the given SNR coefficients, nats/frame."""
    total = 0.0
    for c in coeffs:
        if not c > 0:
            raise ValueError(f"SNR coefficients must be positive, got {c}")
        if abs(c - 1.0) < _UNIT_WINDOW:
            total += math.e  # limit of (1 - 1/c) / W((c-1)/e) as c -> 1
        else:
            total += (1.0 - 1.0 / c) / _w_shifted(c)
    return 1.0 / total


def it_duration(c: float, r0: float) -> float:
    """Optimal information-transmission slot length for one user."""
    if not c > 0:
        raise ValueError(f"SNR coefficient must be positive, got {c}")
    if not r0 > 0:
        raise ValueError(f"common rate must be positive, got {r0}")
    denom = 1.0 + _w_shifted(c)
    if denom <= 0.0:
        # c so small that (c-1)/e rounded onto the branch point; the slot
        # length would underflow to 0 and break the rate-tightness invariant
        raise InfeasibleAllocationError(
            f"SNR coefficient {c} too small to allocate a slot"
        )
    return r0 / denom


def eh_duration(c: float, tau: float) -> float:
    """Optimal energy-harvesting slot length for one user."""
    if not c > 0:
        raise ValueError(f"SNR coefficient must be positive, got {c}")
    if tau < 0:
        raise ValueError(f"it duration must be nonnegative, got {tau}")
    if abs(c - 1.0) < _UNIT_WINDOW:
        bracket = math.e - 1.0  # limit of (c-1)/W((c-1)/e) - 1 as c -> 1
    else:
        bracket = (c - 1.0) / _w_shifted(c) - 1.0
    return tau / c * bracket


def achieved_rate(c: float, nu: float, tau: float) -> float:
    """Rate tau * ln(1 + c * nu / tau) of one user, nats/frame."""
    if nu < 0 or tau < 0:
        raise ValueError(f"durations must be nonnegative, got nu={nu} tau={tau}")
    if tau == 0.0:
        return 0.0
    return tau * math.log1p(c * nu / tau)


def harvested_energy(
    scenario: Scenario, ehu_index: int, tilt: float, nu: float
) -> float:
    """Energy (joules) harvested by one user over an EH slot of length nu."""
    if nu < 0:
        raise ValueError(f"eh duration must be nonnegative, got {nu}")
    b_k = product_gain(scenario, ehu_index, tilt)
    n = scenario.irs.cell_count
    return (
        scenario.efficiencies[ehu_index]
        * scenario.tx_power_w
        * nu
        * float(n) ** 2
        * b_k
    )


def allocate(scenario: Scenario, tilt: float) -> Allocation:
    """Full closed-form allocation for a scenario at the given tilt."""
    coeffs = []
    for k in range(scenario.num_ehus):
        if product_gain(scenario, k, tilt) == 0.0:
            raise InfeasibleAllocationError(
                f"EHU {k} has zero channel gain at tilt {tilt}"
            )
        coeffs.append(snr_coefficient(scenario, k, tilt))

    r0 = common_rate(coeffs)
    taus = [it_duration(c, r0) for c in coeffs]
    nus = [eh_duration(c, tau) for c, tau in zip(coeffs, taus)]
    rates = [achieved_rate(c, nu, tau) for c, nu, tau in zip(coeffs, nus, taus)]
    energies = [
        harvested_energy(scenario, k, tilt, nu) for k, nu in enumerate(nus)
    ]
    return Allocation(
        tilt_rad=tilt,
        eh_durations=tuple(nus),
        it_durations=tuple(taus),
        common_rate=r0,
        rates=tuple(rates),
        energies=tuple(energies),
        snr_coeffs=tuple(coeffs),
    )
