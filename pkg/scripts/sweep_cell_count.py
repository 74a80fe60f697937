#!/usr/bin/env python3
"""Sum rate vs number of unit cells, for two BS distances.

Writes sweep_cell_count_d20.csv and sweep_cell_count_d40.csv into the
current directory (K=10 EHUs on the default arc, alpha0 = pi/12).
"""

import dataclasses

from irs_wpcn import NodePosition
from irs_wpcn.experiments import SweepSpec, emit_csv, run_sweep
from scenario_defaults import default_scenario

VALUES = (1e3, 3e3, 1e4, 3e4, 1e5)
MODES = ("optimal_tilt", "zero_tilt", "benchmark")


def main():
    for d0 in (20.0, 40.0):
        s = default_scenario()
        s = dataclasses.replace(s, bs=NodePosition(d0, s.bs.angle_rad))
        spec = SweepSpec(variable="cell_count", values=VALUES, modes=MODES)
        out = f"sweep_cell_count_d{int(d0)}.csv"
        emit_csv(run_sweep(s, spec), out, spec.variable)
        print(f"wrote {out}")


if __name__ == "__main__":
    main()
