"""Shared scenario builders for the test suite."""

import math

from irs_wpcn import IrsConfig, IrsKind, NodePosition, Scenario
from irs_wpcn.experiments import place_ehus_on_arc

WAVELENGTH_M = 0.1
CELL_AREA_M2 = (WAVELENGTH_M / 4) ** 2  # 6.25e-4


def make_irs(cell_count=10_000, kind=IrsKind.PRACTICAL, pattern_exponent=1.0):
    return IrsConfig(
        cell_count=cell_count,
        cell_area_m2=CELL_AREA_M2,
        wavelength_m=WAVELENGTH_M,
        pattern_exponent=pattern_exponent,
        kind=kind,
    )


def section_iv_scenario(
    cell_count=10_000,
    d0=20.0,
    alpha0=math.pi / 12,
    num_ehus=10,
    kind=IrsKind.PRACTICAL,
):
    """Default measurement setup: EHUs on a 20 m arc over [pi/40, 19pi/40]."""
    ehus = place_ehus_on_arc(num_ehus, 20.0, math.pi / 40, 19 * math.pi / 40)
    return Scenario(
        bs=NodePosition(distance_m=d0, angle_rad=alpha0),
        ehus=tuple(ehus),
        irs=make_irs(cell_count=cell_count, kind=kind),
        tx_power_w=4.0,
        noise_power_w=1e-13,
        efficiencies=(0.9,) * num_ehus,
    )


def single_ehu_scenario(
    alpha0=math.pi / 6, alpha1=math.pi / 3, d0=20.0, d1=20.0, cell_count=10_000,
    kind=IrsKind.PRACTICAL,
):
    return Scenario(
        bs=NodePosition(distance_m=d0, angle_rad=alpha0),
        ehus=(NodePosition(distance_m=d1, angle_rad=alpha1),),
        irs=make_irs(cell_count=cell_count, kind=kind),
        tx_power_w=4.0,
        noise_power_w=1e-13,
        efficiencies=(0.9,),
    )
