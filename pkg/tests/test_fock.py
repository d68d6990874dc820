import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.special import i0

from phasebell.fock import (Source, bessel_i0, circle_coeffs, circle_unnormalized,
                            custom_coeffs, equal_coeffs, read_coeff_file, tms_coeffs)


@pytest.mark.parametrize("s, expected", [
    (0, [1.0]),
    (1, [0.7071067812, 0.7071067812]),
    (3, [0.5] * 4),
])
def test_equal_coeffs(s, expected):
    c = equal_coeffs(s)
    assert c.source is Source.EQUAL
    np.testing.assert_allclose(c.coeffs, expected, atol=1e-10)
    assert abs(c.norm_sq - 1) < 1e-12
    assert c.is_normalized


def test_tms_examples():
    np.testing.assert_array_equal(tms_coeffs(0.0, 3).coeffs, [1.0, 0.0, 0.0])
    np.testing.assert_allclose(tms_coeffs(0.5, 3).coeffs, [0.8660254, 0.4330127, 0.2165064], atol=1e-7)


def test_tms_approaches_equal_weights():
    c = tms_coeffs(0.999999, 10).coeffs
    np.testing.assert_allclose(c[1:] / c[:-1], 1.0, atol=1e-5)


@pytest.mark.parametrize("lam", [-0.1, 1.0, 1.5])
def test_tms_rejects_bad_lambda(lam):
    with pytest.raises(ValueError):
        tms_coeffs(lam, 3)


@given(st.floats(0.01, 0.99), st.integers(2, 40))
def test_tms_geometric_ratio(lam, count):
    c = tms_coeffs(lam, count).coeffs
    np.testing.assert_allclose(c[1:] / c[:-1], lam, rtol=1e-15)
    assert np.all(np.diff(c) < 0)


def test_tms_norm_tends_to_one():
    assert abs(tms_coeffs(0.6, 200).raw_norm_sq - 1) < 1e-12
    assert tms_coeffs(0.6, 5).raw_norm_sq < 1
    c = tms_coeffs(0.6, 5, normalize=True)
    assert c.is_normalized
    assert c.raw_norm_sq < 1


def test_circle_examples():
    np.testing.assert_array_equal(circle_coeffs(0.0, 5).coeffs, [1, 0, 0, 0, 0])
    c = circle_coeffs(1.0, 20).coeffs
    assert c[0] == pytest.approx(1 / math.sqrt(i0(2.0)), rel=1e-12)
    assert c[0] == pytest.approx(0.6623264, abs=1e-7)
    assert c[2] / c[0] == pytest.approx(0.5, rel=1e-14)
    with pytest.raises(ValueError):
        circle_coeffs(-0.5, 3)


@given(st.floats(0.05, 3.0), st.integers(2, 60))
def test_circle_ratio_and_norm(r, count):
    cv = circle_coeffs(r, count)
    assert abs(cv.norm_sq - 1) < 1e-12
    c = cv.coeffs
    n = np.arange(1, count)
    ok = c[:-1] > 1e-300
    np.testing.assert_allclose((c[1:] * n / c[:-1])[ok], r * r, rtol=1e-12)


@pytest.mark.parametrize("r", [0.3, 1.0, 1.5, 2.0])
def test_circle_norm_converges_to_bessel(r):
    raw = circle_coeffs(r, 60).raw_norm_sq
    assert raw == pytest.approx(bessel_i0(2 * r * r), rel=1e-9)
    t = circle_unnormalized(r, 60)
    assert math.fsum(t * t) == pytest.approx(raw, rel=1e-15)


@pytest.mark.parametrize("x, expected", [(0.0, 1.0), (2.0, 2.2795853), (1.0, 1.2660659)])
def test_bessel_i0_values(x, expected):
    assert bessel_i0(x) == pytest.approx(expected, abs=1e-7)


@given(st.floats(0, 20))
def test_bessel_i0_matches_scipy(x):
    assert bessel_i0(x, 1e-15) == pytest.approx(float(i0(x)), rel=1e-13)


def test_custom_coeffs():
    assert custom_coeffs([1.0]).raw_norm_sq == 1
    assert custom_coeffs([0.6, 0.8]).raw_norm_sq == pytest.approx(1.0, abs=1e-15)
    c = custom_coeffs([1.0, 1.0])
    assert c.raw_norm_sq == 2.0
    assert not c.is_normalized
    np.testing.assert_array_equal(c.coeffs, [1.0, 1.0])


@pytest.mark.parametrize("bad", [[], [1.0, float("nan")], [float("inf")]])
def test_custom_coeffs_rejects(bad):
    with pytest.raises(ValueError):
        custom_coeffs(bad)


def test_coefficients_immutable():
    c = equal_coeffs(2)
    with pytest.raises(ValueError):
        c.coeffs[0] = 3.0


def test_projection_pads_and_truncates():
    c = custom_coeffs([0.6, 0.8])
    np.testing.assert_array_equal(c.projected(3), [0.6, 0.8, 0, 0])
    np.testing.assert_array_equal(c.projected(0), [0.6])
    assert c.retained_mass(0) == pytest.approx(0.36)


def test_read_coeff_file(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("# two-term state\n0.6\n\n0.8\n")
    c = read_coeff_file(f)
    np.testing.assert_array_equal(c.coeffs, [0.6, 0.8])
    f.write_text("0.5\nabc\n")
    with pytest.raises(ValueError, match="not a number"):
        read_coeff_file(f)
