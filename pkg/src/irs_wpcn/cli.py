"""Command-line interface.

Subcommands:
  allocate        closed-form allocation at a given tilt (default 0)
  tilt            optimize the mechanical tilt, report the allocation
  sweep           parameter sweep over N / d0 / alpha0, CSV output
  verify          closed-form vs independent numerical oracle report
  validate-array  exact per-element array vs far-field coherent gain
"""

from __future__ import annotations

import argparse
import math
import sys

from . import array_exact
from .allocator import InfeasibleAllocationError, allocate
from .channel import (
    GrazingAngleError,
    Scenario,
    product_gain,
    snr_coefficient,
    tilt_bounds,
)
from .experiments import (
    SWEEP_MODES,
    ScenarioFormatError,
    SweepSpec,
    emit_csv,
    load_scenario,
    run_sweep,
)
from .lambertw import lambert_w0
from .oracle import oracle_common_rate
from .tilt import optimize_tilt

_VAR_BY_FLAG = {"N": "cell_count", "d0": "bs_distance", "alpha0": "bs_angle"}


def _rate(value: float, bits: bool) -> float:
    return value / math.log(2) if bits else value


def _rate_unit(bits: bool) -> str:
    return "bits/frame" if bits else "nats/frame"


def _print_allocation(scenario: Scenario, psi: float, alloc, bits: bool) -> None:
    k = scenario.num_ehus
    print(f"tilt: {psi:.9g} rad")
    print(f"common rate R0: {_rate(alloc.common_rate, bits):.9g} {_rate_unit(bits)}")
    print(f"sum rate: {_rate(k * alloc.common_rate, bits):.9g} {_rate_unit(bits)}")
    print("ehu   C_k          tau_k        nu_k         E_k (J)")
    for i in range(k):
        print(
            f"{i + 1:3d}   {alloc.snr_coeffs[i]:<12.6g} "
            f"{alloc.it_durations[i]:<12.6g} {alloc.eh_durations[i]:<12.6g} "
            f"{alloc.energies[i]:.6g}"
        )


def _cmd_allocate(args) -> int:
    scenario = load_scenario(args.scenario)
    alloc = allocate(scenario, args.tilt)
    _print_allocation(scenario, args.tilt, alloc, args.bits)
    return 0


def _cmd_tilt(args) -> int:
    scenario = load_scenario(args.scenario)
    psi, alloc = optimize_tilt(scenario)
    lo, hi = tilt_bounds(scenario)
    print(f"feasible tilt range: [{-lo:.9g}, {hi:.9g}] rad")
    _print_allocation(scenario, psi, alloc, args.bits)
    return 0


def _cmd_sweep(args) -> int:
    scenario = load_scenario(args.scenario)
    values = [float(v) for v in args.values.split(",")]
    modes = args.modes.split(",")
    spec = SweepSpec(
        variable=_VAR_BY_FLAG[args.var], values=tuple(values), modes=tuple(modes)
    )
    rows = run_sweep(scenario, spec)
    emit_csv(rows, args.output, spec.variable)
    failed = sum(1 for r in rows if r.error)
    print(f"wrote {len(rows)} rows to {args.output}" +
          (f" ({failed} infeasible)" if failed else ""))
    return 0


def _cmd_verify(args) -> int:
    scenario = load_scenario(args.scenario)
    psi = args.tilt
    alloc = allocate(scenario, psi)
    sol = oracle_common_rate(alloc.snr_coeffs)
    rel = abs(alloc.common_rate - sol.common_rate) / alloc.common_rate
    print(f"tilt: {psi:.9g} rad")
    print(f"closed-form R0: {alloc.common_rate:.12g} nats/frame")
    print(f"oracle      R0: {sol.common_rate:.12g} nats/frame")
    print(f"relative difference: {rel:.3g}")
    worst_x = 0.0
    for c, x_oracle in zip(alloc.snr_coeffs, sol.minimizers):
        if c != 1.0:
            x_closed = (c - 1.0) / lambert_w0((c - 1.0) / math.e) - 1.0
        else:
            x_closed = math.e - 1.0
        worst_x = max(worst_x, abs(x_oracle - x_closed) / abs(x_closed))
    print(f"worst per-user minimizer mismatch: {worst_x:.3g}")
    if rel > args.tolerance:
        print(f"FAIL: relative difference exceeds {args.tolerance}", file=sys.stderr)
        return 2
    print("OK")
    return 0


def _cmd_validate_array(args) -> int:
    scenario = load_scenario(args.scenario)
    irs = scenario.irs
    psi = args.tilt
    grid = array_exact.build_grid(irs, psi)
    print(f"cells: {irs.cell_count}, tilt: {psi:.9g} rad")
    print(
        f"far-field regime (S <= 9 d0^2): "
        f"{array_exact.far_field_valid(irs, scenario.bs.distance_m)}"
    )
    n = irs.cell_count
    worst_rel = 0.0
    worst_imag = 0.0
    for k, ehu in enumerate(scenario.ehus):
        bs_prof = array_exact.node_phase_profile(grid, scenario.bs, "bs", irs.wavelength_m)
        ehu_prof = array_exact.node_phase_profile(grid, ehu, "ehu", irs.wavelength_m)
        refl = array_exact.design_reflection_phases(bs_prof, ehu_prof)
        s = array_exact.coherent_sum(grid, scenario.bs, ehu, refl, irs)
        exact = abs(s) ** 2
        closed = n**2 * product_gain(scenario, k, psi)
        rel = (exact - closed) / closed
        imag = abs(s.imag) / abs(s)
        worst_rel = max(worst_rel, abs(rel))
        worst_imag = max(worst_imag, imag)
        print(
            f"ehu {k + 1}: exact={exact:.9g} far-field={closed:.9g} "
            f"rel-dev={rel:+.3g} imag-residual={imag:.3g}"
        )
    print(f"worst |relative deviation|: {worst_rel:.3g}")
    print(f"worst imaginary residual:  {worst_imag:.3g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irs-wpcn",
        description="Max-min-fair time allocation and tilt optimization for an "
        "IRS-assisted wireless-powered network.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("allocate", help="closed-form allocation at a fixed tilt")
    p.add_argument("scenario")
    p.add_argument("--tilt", type=float, default=0.0, help="tilt in radians")
    p.add_argument("--bits", action="store_true", help="report rates in bits")
    p.set_defaults(func=_cmd_allocate)

    p = sub.add_parser("tilt", help="optimize the mechanical tilt")
    p.add_argument("scenario")
    p.add_argument("--bits", action="store_true", help="report rates in bits")
    p.set_defaults(func=_cmd_tilt)

    p = sub.add_parser("sweep", help="parameter sweep, CSV output")
    p.add_argument("scenario")
    p.add_argument("--var", choices=sorted(_VAR_BY_FLAG), required=True)
    p.add_argument("--values", required=True, help="comma-separated, increasing")
    p.add_argument(
        "--modes",
        default="optimal_tilt,zero_tilt",
        help=f"comma-separated subset of {','.join(SWEEP_MODES)}",
    )
    p.add_argument("-o", "--output", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="closed form vs numerical oracle")
    p.add_argument("scenario")
    p.add_argument("--tilt", type=float, default=0.0, help="tilt in radians")
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("validate-array", help="exact array vs far-field gain")
    p.add_argument("scenario")
    p.add_argument("--tilt", type=float, default=0.0, help="tilt in radians")
    p.set_defaults(func=_cmd_validate_array)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioFormatError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 1
    except (GrazingAngleError, InfeasibleAllocationError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
