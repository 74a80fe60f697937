"""Default measurement scenario shared by the sweep scripts."""

import math

from irs_wpcn import IrsConfig, NodePosition, Scenario
from irs_wpcn.experiments import place_ehus_on_arc


def default_scenario(num_ehus=10):
    """K EHUs on a 20 m arc over [pi/40, 19pi/40]; N=10^4, P0=4 W."""
    return Scenario(
        bs=NodePosition(distance_m=20.0, angle_rad=math.pi / 12),
        ehus=tuple(place_ehus_on_arc(num_ehus, 20.0, math.pi / 40, 19 * math.pi / 40)),
        irs=IrsConfig(cell_count=10_000, cell_area_m2=6.25e-4, wavelength_m=0.1),
        tx_power_w=4.0,
        noise_power_w=1e-13,
        efficiencies=(0.9,) * num_ehus,
    )
