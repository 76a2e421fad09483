import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fdaerial.geometry import Position3, bearing, distance, mirror_across_ground, reflection_geometry

coord = st.floats(-1e4, 1e4, allow_nan=False)
height = st.floats(0.1, 1e3, allow_nan=False)
points = st.builds(Position3, coord, coord, st.floats(0, 1e3, allow_nan=False))
above = st.builds(Position3, coord, coord, height)


@pytest.mark.parametrize(
    "a, b, expected, tol",
    [
        ((0, 0, 0), (3, 4, 0), 5.0, 0.0),
        ((1, 2, 3), (1, 2, 3), 0.0, 0.0),
        # sqrt(5000^2 + 90^2) by hand
        ((0, 0, 10), (5000, 0, 100), 5000.81, 0.01),
    ],
)
def test_distance_examples(a, b, expected, tol):
    assert distance(a, b) == pytest.approx(expected, abs=tol)


@pytest.mark.parametrize(
    "p, expected",
    [((1, 2, 3), (1, 2, -3)), ((0, 0, 0), (0, 0, 0)), ((5000, 0, 100), (5000, 0, -100))],
)
def test_mirror(p, expected):
    assert mirror_across_ground(p) == Position3(*expected)


def test_bearing_examples():
    assert bearing((0, 0, 0), (1, 0, 0)) == (0.0, 0.0)
    assert bearing((0, 0, 0), (0, 0, 5)).elevation == 90.0
    assert bearing((0, 0, 10), (100, 0, 10)) == (0.0, 0.0)


def test_bearing_degenerate():
    with pytest.raises(ValueError, match="degenerate bearing"):
        bearing((1, 2, 3), (1, 2, 3))


def test_bearing_ranges():
    b = bearing((0, 0, 0), (-1, 0, 0))
    assert b.azimuth == -180.0


def test_reflection_examples():
    g = reflection_geometry((0, 0, 10), (100, 0, 10))
    assert g.d_los == 100.0
    assert g.d_refl == pytest.approx(math.sqrt(100**2 + 20**2), abs=1e-3)

    g = reflection_geometry((0, 0, 10), (0, 0, 20))
    assert g.d_los == 10.0
    assert g.d_refl == 30.0
    assert g.reflection_point == (0.0, 0.0, 0.0)

    g = reflection_geometry((0, 0, 10), (5000, 0, 100))
    assert g.d_refl == pytest.approx(5001.210, abs=1e-3)


def test_reflection_degenerate():
    with pytest.raises(ValueError, match="degenerate two-ray geometry"):
        reflection_geometry((0, 0, 0), (10, 0, 0))


def test_one_endpoint_on_ground():
    g = reflection_geometry((0, 0, 0), (100, 0, 10))
    assert g.d_refl == pytest.approx(g.d_los)
    assert g.tx_refl_bearing == g.tx_los_bearing


@given(points, points, points)
def test_distance_is_metric(a, b, c):
    assert distance(a, b) == distance(b, a)
    assert distance(a, b) >= 0.0
    assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9


@given(above, above)
def test_reflection_properties(p_t, p_r):
    assume(distance(p_t, p_r) > 1e-6)
    g = reflection_geometry(p_t, p_r)
    assert g.d_refl >= g.d_los
    assert g.reflection_point.z == 0.0

    # specular point lies on the segment p_t -> mirror(p_r)
    m = mirror_across_ground(p_r)
    seg = distance(p_t, m)
    assert distance(p_t, g.reflection_point) + distance(g.reflection_point, m) == pytest.approx(seg, abs=1e-9)

    # angle of incidence equals angle of reflection
    if distance(g.reflection_point, p_t) > 1e-6 and distance(g.reflection_point, p_r) > 1e-6:
        inc = bearing(g.reflection_point, p_t).elevation
        dep = bearing(g.reflection_point, p_r).elevation
        assert abs(inc) == pytest.approx(abs(dep), abs=1e-9)
