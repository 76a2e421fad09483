"""Straight-line reference computations used as independent test oracles.

Nothing here imports from ``fdaerial``; every quantity is recomputed from
raw coordinates with numpy so that a shared bug cannot hide on both sides.
"""
import numpy as np

LIGHT_SPEED = 299792458.0


def sinc2_pattern_linear(peak_dbi, hpbw_h, hpbw_v, floor_db, d_az, d_el):
    d_az = (d_az + 180.0) % 360.0 - 180.0
    d_el = (d_el + 180.0) % 360.0 - 180.0
    g_h = np.sinc(0.8858 * d_az / hpbw_h) ** 2
    g_v = np.sinc(0.8858 * d_el / hpbw_v) ** 2
    rel = max(g_h * g_v, 10.0 ** (floor_db / 10.0))
    return 10.0 ** (peak_dbi / 10.0) * rel


def az_el(frm, to):
    d = np.asarray(to, float) - np.asarray(frm, float)
    az = np.degrees(np.arctan2(d[1], d[0]))
    el = np.degrees(np.arctan2(d[2], np.sqrt(d[0] ** 2 + d[1] ** 2)))
    return az, el


def two_ray_total_gain(p_t, p_r, bs_t, bs_r, pat_t, pat_r, freq_hz, refl):
    """Two-ray total gain with antenna weighting on each ray.

    ``bs_*`` are (azimuth, elevation) boresights in degrees; ``pat_*`` are
    (peak_dbi, hpbw_h, hpbw_v, floor_db) tuples.
    """
    p_t = np.asarray(p_t, float)
    p_r = np.asarray(p_r, float)
    lam = LIGHT_SPEED / freq_hz
    image = p_r * np.array([1.0, 1.0, -1.0])
    D_L = np.sqrt(np.sum((p_r - p_t) ** 2))
    D_R = np.sqrt(np.sum((image - p_t) ** 2))
    s = p_t[2] / (p_t[2] + p_r[2])
    refl_pt = p_t + s * (image - p_t)
    refl_pt[2] = 0.0

    def g(pat, bs, frm, to):
        az, el = az_el(frm, to)
        return sinc2_pattern_linear(*pat, az - bs[0], el - bs[1])

    G_L = g(pat_t, bs_t, p_t, p_r) * g(pat_r, bs_r, p_r, p_t)
    G_R = g(pat_t, bs_t, p_t, refl_pt) * g(pat_r, bs_r, p_r, refl_pt)
    dphi = 2.0 * np.pi * (D_R - D_L) / lam
    field = np.sqrt(G_L) / D_L + refl * np.sqrt(G_R) * np.exp(-1j * dphi) / D_R
    return (lam / (4.0 * np.pi)) ** 2 * np.abs(field) ** 2


def shannon_bps(bandwidth_hz, signal_w, noise_w, interference_w=0.0):
    return bandwidth_hz * np.log2(1.0 + signal_w / (noise_w + interference_w))


def noise_watts(bandwidth_hz, density_dbm_hz, figure_db):
    dbm = density_dbm_hz + 10.0 * np.log10(bandwidth_hz) + figure_db
    return 10.0 ** ((dbm - 30.0) / 10.0)
