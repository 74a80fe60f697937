#!/usr/bin/env python3
"""Sum rate vs BS distance, for two BS angular positions.

Writes sweep_bs_distance_a30.csv and sweep_bs_distance_a60.csv (angles in
degrees in the filenames; pi/6 and pi/3 in radians).
"""

import dataclasses
import math

from irs_wpcn import NodePosition
from irs_wpcn.experiments import SweepSpec, emit_csv, run_sweep
from scenario_defaults import default_scenario

VALUES = (10.0, 20.0, 30.0, 40.0, 50.0)
MODES = ("optimal_tilt", "zero_tilt", "benchmark")


def main():
    for alpha0, tag in ((math.pi / 6, "a30"), (math.pi / 3, "a60")):
        s = default_scenario()
        s = dataclasses.replace(s, bs=NodePosition(s.bs.distance_m, alpha0))
        spec = SweepSpec(variable="bs_distance", values=VALUES, modes=MODES)
        out = f"sweep_bs_distance_{tag}.csv"
        emit_csv(run_sweep(s, spec), out, spec.variable)
        print(f"wrote {out}")


if __name__ == "__main__":
    main()
