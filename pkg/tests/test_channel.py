import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from irs_wpcn import (
    GrazingAngleError,
    IrsConfig,
    IrsKind,
    NodePosition,
    Scenario,
    off_boresight_angle,
    product_gain,
    snr_coefficient,
    tilt_bounds,
    unit_cell_gain,
)
from util import make_irs, section_iv_scenario, single_ehu_scenario

A = 6.25e-4


class TestTypes:
    def test_node_position_validation(self):
        with pytest.raises(ValueError):
            NodePosition(distance_m=-1.0, angle_rad=0.5)
        with pytest.raises(ValueError):
            NodePosition(distance_m=10.0, angle_rad=0.0)
        with pytest.raises(ValueError):
            NodePosition(distance_m=10.0, angle_rad=math.pi / 2)

    def test_irs_config_rejects_oversized_cell(self):
        with pytest.raises(ValueError):
            IrsConfig(cell_count=100, cell_area_m2=1e-3, wavelength_m=0.1)

    def test_total_area_is_derived(self):
        irs = make_irs(cell_count=10_000)
        assert irs.total_area_m2 == pytest.approx(6.25)

    def test_scenario_requires_ordered_ehus(self):
        ehus = (NodePosition(20, 0.8), NodePosition(20, 0.4))
        with pytest.raises(ValueError):
            Scenario(
                bs=NodePosition(20, 0.3),
                ehus=ehus,
                irs=make_irs(),
                tx_power_w=4.0,
                noise_power_w=1e-13,
                efficiencies=(0.9, 0.9),
            )

    def test_scenario_rejects_bad_efficiency(self):
        with pytest.raises(ValueError):
            Scenario(
                bs=NodePosition(20, 0.3),
                ehus=(NodePosition(20, 0.4),),
                irs=make_irs(),
                tx_power_w=4.0,
                noise_power_w=1e-13,
                efficiencies=(1.5,),
            )


class TestOffBoresightAngle:
    def test_zero_tilt(self):
        node = NodePosition(20, math.pi / 6)
        assert off_boresight_angle(node, "bs", 0.0) == pytest.approx(math.pi / 6)

    def test_bs_additive(self):
        node = NodePosition(20, math.pi / 6)
        assert off_boresight_angle(node, "bs", math.pi / 12) == pytest.approx(
            math.pi / 4
        )

    def test_ehu_subtractive(self):
        node = NodePosition(20, math.pi / 3)
        assert off_boresight_angle(node, "ehu", math.pi / 12) == pytest.approx(
            math.pi / 4
        )

    def test_bad_role(self):
        with pytest.raises(ValueError):
            off_boresight_angle(NodePosition(20, 0.5), "relay", 0.0)


class TestUnitCellGain:
    def test_practical_boresight(self):
        # A / (4 pi d^2) at 20 m
        assert unit_cell_gain(20.0, 0.0, make_irs()) == pytest.approx(
            A / (1600 * math.pi), rel=1e-12
        )

    def test_practical_vanishes_at_grazing(self):
        # gain scales with cos(angle), so it shrinks linearly in the gap to pi/2
        irs = make_irs()
        boresight = unit_cell_gain(20.0, 0.0, irs)
        assert unit_cell_gain(20.0, math.pi / 2 - 1e-6, irs) < 2e-6 * boresight
        assert unit_cell_gain(20.0, math.pi / 2 - 1e-9, irs) < 2e-9 * boresight

    def test_benchmark_angle_independent(self):
        irs = make_irs(kind=IrsKind.BENCHMARK)
        expected = A / (3200 * math.pi)
        for angle in (0.0, 0.7, 1.5, 3.0):
            assert unit_cell_gain(20.0, angle, irs) == pytest.approx(
                expected, rel=1e-12
            )

    def test_grazing_rejected(self):
        with pytest.raises(GrazingAngleError):
            unit_cell_gain(20.0, math.pi / 2, make_irs())

    def test_bad_distance(self):
        with pytest.raises(ValueError):
            unit_cell_gain(0.0, 0.1, make_irs())

    @given(
        st.tuples(
            st.floats(min_value=0.0, max_value=math.pi / 2 - 1e-6),
            st.floats(min_value=0.0, max_value=math.pi / 2 - 1e-6),
        )
    )
    def test_decreasing_in_angle(self, pair):
        a1, a2 = sorted(pair)
        irs = make_irs()
        g1 = unit_cell_gain(20.0, a1, irs)
        g2 = unit_cell_gain(20.0, a2, irs)
        assert g2 <= g1


class TestProductGain:
    def test_symmetric_near_boresight(self):
        # spec quotes the alpha = 0 case; the type excludes 0 exactly, so a
        # vanishingly small angle checks the same algebra
        eps = 1e-9
        s = single_ehu_scenario(alpha0=eps, alpha1=2 * eps, d0=20.0, d1=20.0)
        assert product_gain(s, 0, 0.0) == pytest.approx(
            (A / (1600 * math.pi)) ** 2, rel=1e-9
        )

    def test_maximized_at_half_angle_difference(self):
        s = single_ehu_scenario(alpha0=math.pi / 6, alpha1=math.pi / 3)
        best = (math.pi / 3 - math.pi / 6) / 2
        grid = np.linspace(-0.4, 1.0, 20001)
        vals = [product_gain(s, 0, float(p)) for p in grid]
        assert grid[int(np.argmax(vals))] == pytest.approx(best, abs=1e-4)
        assert product_gain(s, 0, best) >= max(vals) * (1 - 1e-12)

    def test_benchmark_tilt_independent(self):
        s = single_ehu_scenario(kind=IrsKind.BENCHMARK)
        for psi in (-0.3, 0.0, 0.3, 0.8):
            assert product_gain(s, 0, psi) == product_gain(s, 0, -psi)
            assert product_gain(s, 0, psi) == product_gain(s, 0, 0.0)

    def test_q_zero_halved_matches_benchmark(self):
        s_q0 = single_ehu_scenario()
        s_q0 = dataclasses.replace(
            s_q0, irs=dataclasses.replace(s_q0.irs, pattern_exponent=0.0)
        )
        s_bench = single_ehu_scenario(kind=IrsKind.BENCHMARK)
        for psi in (-0.2, 0.0, 0.5):
            assert product_gain(s_q0, 0, psi) / 4 == pytest.approx(
                product_gain(s_bench, 0, psi), rel=1e-12
            )


class TestSnrCoefficient:
    def test_scales_as_n_fourth(self):
        s1 = single_ehu_scenario(cell_count=1000)
        s2 = single_ehu_scenario(cell_count=2000)
        assert snr_coefficient(s2, 0, 0.1) == pytest.approx(
            16 * snr_coefficient(s1, 0, 0.1), rel=1e-12
        )

    def test_scales_linearly_in_power(self):
        s = single_ehu_scenario()
        s2 = dataclasses.replace(s, tx_power_w=2 * s.tx_power_w)
        assert snr_coefficient(s2, 0, 0.0) == pytest.approx(
            2 * snr_coefficient(s, 0, 0.0), rel=1e-12
        )

    def test_hand_chained_value(self):
        # direct arithmetic through B_k for the default setup at zero tilt
        s = section_iv_scenario()
        k = 3
        omega_0 = A * math.cos(s.bs.angle_rad) / (4 * math.pi * s.bs.distance_m**2)
        ehu = s.ehus[k]
        omega_k = A * math.cos(ehu.angle_rad) / (4 * math.pi * ehu.distance_m**2)
        expected = 0.9 * 4.0 * 10_000.0**4 * (omega_0 * omega_k) ** 2 / 1e-13
        assert snr_coefficient(s, k, 0.0) == pytest.approx(expected, rel=1e-12)


class TestTiltBounds:
    def test_section_iv_placement(self):
        s = section_iv_scenario()
        psi_n, psi_p = tilt_bounds(s)
        assert psi_n == pytest.approx(math.pi / 40, rel=1e-12)
        assert psi_p == pytest.approx(5 * math.pi / 12, rel=1e-12)

    def test_limits(self):
        s = single_ehu_scenario(alpha0=math.pi / 2 - 1e-9)
        assert tilt_bounds(s)[1] == pytest.approx(1e-9, abs=1e-12)
        s = single_ehu_scenario(alpha1=math.pi / 2 - 1e-9)
        assert tilt_bounds(s)[0] == pytest.approx(1e-9, abs=1e-12)
