#!/usr/bin/env python3
"""Sum rate vs BS angular position at d0 = 20 m, for two EHU counts.

Writes sweep_bs_angle_k10.csv and sweep_bs_angle_k5.csv.  The benchmark
surface appears in both to show its angle independence.
"""

import math

from irs_wpcn.experiments import SweepSpec, emit_csv, run_sweep
from scenario_defaults import default_scenario

VALUES = tuple(math.pi / 24 * i for i in range(1, 11))  # 7.5 to 75 degrees
MODES = ("optimal_tilt", "zero_tilt", "benchmark")


def main():
    for k in (10, 5):
        s = default_scenario(num_ehus=k)
        spec = SweepSpec(variable="bs_angle", values=VALUES, modes=MODES)
        out = f"sweep_bs_angle_k{k}.csv"
        emit_csv(run_sweep(s, spec), out, spec.variable)
        print(f"wrote {out}")


if __name__ == "__main__":
    main()
