import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fdaerial.antenna import (
    AntennaPattern,
    MisalignmentModel,
    boresight_toward,
    pattern_gain,
    sample_misalignment,
)
from oracles import sinc2_pattern_linear

angles = st.floats(-180, 180, allow_nan=False)


def test_peak_gain(gs_pattern):
    assert pattern_gain(gs_pattern, 0, 0) == 10**2.2
    assert pattern_gain(gs_pattern, 0, 0) == pytest.approx(158.5, abs=0.05)


def test_half_power(gs_pattern, uav_pattern):
    assert pattern_gain(gs_pattern, 29, 0) == pytest.approx(79.2, abs=1)
    for pat in (gs_pattern, uav_pattern):
        peak_db = pat.peak_gain_dbi
        for off in ((pat.hpbw_h_deg / 2, 0), (0, pat.hpbw_v_deg / 2), (-pat.hpbw_h_deg / 2, 0)):
            g_db = 10 * math.log10(pattern_gain(pat, *off))
            assert g_db == pytest.approx(peak_db - 3.0, abs=0.05)


def test_first_null_clamped(gs_pattern):
    # sinc^2 at k*theta = 1 is ~1e-32, far below the -50 dB floor
    raw = np.sinc(1.0) ** 2
    assert raw < 10 ** (-50 / 10)
    g = pattern_gain(gs_pattern, 58 / 0.8858, 0)
    assert g == pytest.approx(10 ** ((22 - 50) / 10), rel=1e-12)


def test_matches_oracle(gs_pattern):
    for az, el in [(3.0, 1.0), (-100.0, 2.0), (179.0, -45.0), (0.5, 0.5)]:
        assert pattern_gain(gs_pattern, az, el) == pytest.approx(
            sinc2_pattern_linear(22.0, 58.0, 4.0, -50.0, az, el), rel=1e-12
        )


def test_isotropic():
    iso = AntennaPattern.isotropic()
    assert pattern_gain(iso, 123.0, -45.0) == 1.0


@pytest.mark.parametrize("bad", [dict(hpbw_h_deg=0.0), dict(hpbw_v_deg=400.0), dict(floor_db=-2.0)])
def test_pattern_validation(bad):
    kw = dict(peak_gain_dbi=10.0, hpbw_h_deg=30.0, hpbw_v_deg=30.0, floor_db=-50.0) | bad
    with pytest.raises(ValueError):
        AntennaPattern(**kw)


@given(angles, angles)
def test_pattern_even_and_bounded(az, el):
    pat = AntennaPattern(15.0, 36.0, 36.0)
    g = pattern_gain(pat, az, el)
    assert pattern_gain(pat, -az, el) == pytest.approx(g, rel=1e-12)
    assert pattern_gain(pat, az, -el) == pytest.approx(g, rel=1e-12)
    assert pat.peak_linear * 10 ** (-5) <= g <= pat.peak_linear


@pytest.mark.parametrize("pat", [(22.0, 58.0, 4.0), (15.0, 36.0, 36.0)])
def test_table_directivity_sanity(pat):
    peak, h, v = pat
    approx_dbi = 10 * math.log10(41253 / (h * v))
    assert abs(approx_dbi - peak) <= 1.5


def test_boresight_examples():
    p = boresight_toward((0, 0, 10), (5000, 0, 100))
    assert p.boresight.azimuth == 0.0
    assert p.boresight.elevation == pytest.approx(math.degrees(math.atan2(90, 5000)), abs=1e-12)
    assert p.boresight.elevation == pytest.approx(1.031, abs=1e-3)

    p = boresight_toward((0, 0, 10), (5000, 0, 100), 3, 0)
    assert p.boresight.azimuth == 3.0
    assert p.boresight.elevation == pytest.approx(1.031, abs=1e-3)

    p = boresight_toward((0, 0, 0), (0, 1, 0), 0, -2)
    assert p.boresight == (90.0, -2.0)


def test_boresight_wraps_and_clamps():
    p = boresight_toward((0, 0, 0), (-1, 0.0, 0), 10, 0)
    assert p.boresight.azimuth == pytest.approx(-170.0)
    p = boresight_toward((0, 0, 0), (0, 0, 1), 0, 5)
    assert p.boresight.elevation == 90.0


def test_boresight_degenerate():
    with pytest.raises(ValueError, match="degenerate bearing"):
        boresight_toward((1, 1, 1), (1, 1, 1))


def test_misalignment_zero_sigma():
    rng = np.random.default_rng(7)
    for _ in range(100):
        assert sample_misalignment(MisalignmentModel(0.0), rng) == (0.0, 0.0)


def test_misalignment_statistics():
    rng = np.random.default_rng(12345)
    model = MisalignmentModel(3.0)
    draws = np.array([sample_misalignment(model, rng) for _ in range(100_000)])
    # std error of the std estimator is ~sigma/sqrt(2n) = 0.0067, of the mean 0.0095
    for axis in range(2):
        assert 2.94 <= draws[:, axis].std(ddof=1) <= 3.06
        assert -0.03 <= draws[:, axis].mean() <= 0.03
    assert abs(np.corrcoef(draws.T)[0, 1]) < 0.02


def test_negative_sigma_rejected():
    with pytest.raises(ValueError):
        MisalignmentModel(-1.0)
