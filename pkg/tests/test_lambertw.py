import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, strategies as st

from irs_wpcn.lambertw import lambert_w0, lambert_w0_log

BRANCH = -1.0 / math.e


def roundtrip_residual(x):
    w = lambert_w0(x)
    return abs(w * math.exp(w) - x)


def test_exact_points():
    assert lambert_w0(0.0) == 0.0
    assert abs(lambert_w0(math.e) - 1.0) <= 1e-12
    assert abs(lambert_w0(BRANCH) - (-1.0)) <= 1e-12


def test_roundtrip_log_spaced():
    for x in np.logspace(-300, 300, 601):
        w = lambert_w0(float(x))
        if w < 700:
            assert abs(w * math.exp(w) - x) <= 1e-12 * max(1.0, x)
        else:  # exp overflows; check in log space instead
            assert abs(w + math.log(w) - math.log(x)) <= 1e-12


def test_roundtrip_linear_near_branch():
    for x in np.linspace(BRANCH, 1.0, 500):
        assert roundtrip_residual(float(x)) <= 1e-12


def test_monotone_increasing():
    xs = np.concatenate(
        [np.linspace(BRANCH, 1.0, 300), np.logspace(0, 300, 300)]
    )
    ws = [lambert_w0(float(x)) for x in xs]
    for w1, w2 in zip(ws, ws[1:]):
        assert w1 <= w2 + 1e-12


def test_large_argument_asymptote():
    for x in [1e10, 1e50, 1e100, 1e200]:
        w = lambert_w0(x)
        approx = math.log(x) - math.log(math.log(x))
        assert abs(w - approx) / w <= 0.1


def test_domain_error_below_branch():
    with pytest.raises(ValueError):
        lambert_w0(BRANCH - 1e-6)


def test_clamp_just_below_branch():
    assert abs(lambert_w0(BRANCH - 1e-13) - (-1.0)) <= 1e-5


def test_log_form_matches_direct():
    for x in [3.0, 10.0, 1e5, 1e12]:
        assert lambert_w0_log(math.log(x)) == pytest.approx(
            lambert_w0(x), rel=1e-13
        )


def test_log_form_rejects_small():
    with pytest.raises(ValueError):
        lambert_w0_log(0.5)


def test_against_scipy():
    for x in np.logspace(-10, 20, 100):
        ref = float(scipy.special.lambertw(float(x)).real)
        assert lambert_w0(float(x)) == pytest.approx(ref, rel=1e-10)


@given(st.floats(min_value=BRANCH + 1e-9, max_value=1e12))
def test_roundtrip_property(x):
    assert roundtrip_residual(x) <= 1e-11 * max(1.0, abs(x))
