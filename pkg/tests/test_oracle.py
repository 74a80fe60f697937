import math

import pytest

from irs_wpcn import common_rate
from irs_wpcn.oracle import OracleConfig, oracle_common_rate, per_user_time_cost

E2 = math.e**2


class TestPerUserTimeCost:
    def test_known_minimum(self):
        # x = e^2 - 1 zeroes the derivative for C = 1 + e^2
        assert per_user_time_cost(1 + E2, E2 - 1) == pytest.approx(
            E2 / (1 + E2), rel=1e-12
        )

    def test_blows_up_at_small_x(self):
        assert per_user_time_cost(10.0, 1e-12) > 1e10

    def test_grows_at_large_x(self):
        c = 50.0
        assert per_user_time_cost(c, 1e12) > per_user_time_cost(c, 1e3)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            per_user_time_cost(10.0, 0.0)
        with pytest.raises(ValueError):
            per_user_time_cost(0.0, 1.0)


class TestOracleCommonRate:
    def test_single_user_exact_case(self):
        sol = oracle_common_rate([1 + E2])
        assert sol.common_rate == pytest.approx((1 + E2) / E2, rel=1e-6)
        assert sol.minimizers[0] == pytest.approx(E2 - 1, rel=1e-4)

    def test_identical_users_scale(self):
        one = oracle_common_rate([37.0]).common_rate
        five = oracle_common_rate([37.0] * 5).common_rate
        assert five == pytest.approx(one / 5, rel=1e-9)

    def test_agrees_with_closed_form(self):
        coeffs = [2.5, 33.0, 4.7e5, 1e9]
        sol = oracle_common_rate(coeffs)
        assert sol.common_rate == pytest.approx(common_rate(coeffs), rel=1e-6)

    def test_never_exceeds_closed_form_materially(self):
        # the closed form is the true optimum; the oracle can only undercut
        # it by refinement error
        for coeffs in ([1.5], [12.0, 7.0], [1e7, 3.0, 440.0]):
            gap = oracle_common_rate(coeffs).common_rate - common_rate(coeffs)
            assert gap <= 1e-9
            assert gap >= -1e-6 * common_rate(coeffs)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            oracle_common_rate([5.0, -1.0])

    def test_config_validation(self):
        with pytest.raises(ValueError):
            OracleConfig(ratio_grid_size=10)
        with pytest.raises(ValueError):
            OracleConfig(ratio_max=0.0)

    def test_coarse_config_still_close(self):
        cfg = OracleConfig(ratio_grid_size=500, refine_iters=120)
        coeffs = [10.0, 1e4]
        assert oracle_common_rate(coeffs, cfg).common_rate == pytest.approx(
            common_rate(coeffs), rel=1e-6
        )
