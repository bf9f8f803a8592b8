"""Catalog sanity: derivatives match finite differences, supports hold."""
import math

import numpy as np
import pytest

from projdunkl import MPoly, catalog, get_function
from projdunkl.functions import exp_i_lambda, from_poly


SMOOTH_POINTS = [-1.7, -0.4, 0.31, 0.9, 1.6, 2.2]


@pytest.mark.parametrize("name", ["exp", "gaussian", "bump", "ind13"])
def test_gradient_matches_finite_differences(name):
    f = get_function(name)
    f.check_gradient_fd(SMOOTH_POINTS, rel_tol=2e-5)


@pytest.mark.parametrize("name", ["exp", "gaussian", "bump"])
def test_second_derivative_matches_finite_differences(name):
    f = get_function(name)
    h = 1e-5
    for x in SMOOTH_POINTS:
        fd = (f.value(x + h) - 2 * f.value(x) + f.value(x - h)) / h ** 2
        an = f.second_derivative(x)
        assert an == pytest.approx(fd, rel=3e-5, abs=3e-5)


def test_support_bounds_hold():
    for name in ("bump", "indicator"):
        f = get_function(name)
        a = f.support_bound
        for x in (a + 1e-9, -a - 1e-9, a + 2.5):
            assert f.value(x) == 0.0
    ind13 = get_function("ind13")
    assert ind13.value(0.99) == 0.0
    assert ind13.value(3.01) == 0.0
    assert ind13.value(-2.0) == 0.0
    assert ind13.value(2.0) == 1.0


def test_corner_metadata():
    assert get_function("bump").corners == (-1.0, 1.0)
    assert get_function("indicator").corners == (-1.0, 1.0)
    assert get_function("ind13").corners == (1.0, 1.5, 2.5, 3.0)
    assert get_function("gaussian").corners == ()


def test_bump_normalization():
    f = get_function("bump")
    assert f.value(0.0) == 1.0
    assert f.value(np.array([0.5]))[0] == pytest.approx(math.exp(1 - 1 / 0.75))


def test_indicator_flags():
    f = get_function("indicator")
    assert not f.smooth
    assert f.value(0.3) == 1.0
    assert f.gradient(0.3) == 0.0


def test_vectorized_value():
    f = get_function("gaussian")
    xs = np.linspace(-2, 2, 9)
    np.testing.assert_allclose(f.value(xs), np.exp(-xs ** 2 / 2), rtol=1e-15)


def test_unknown_name():
    with pytest.raises(ValueError, match="unknown catalog function"):
        get_function("nope")


def test_catalog_names_are_keys():
    for name, f in catalog().items():
        assert f.name == name


def test_from_poly_one_var():
    f = from_poly(MPoly.from_text("x1^3 - 2*x1"))
    assert f.value(2.0) == pytest.approx(4.0)
    assert f.gradient(2.0) == pytest.approx(10.0)
    assert f.second_derivative(2.0) == pytest.approx(12.0)


def test_from_poly_multivar_gradient():
    f = from_poly(MPoly.from_text("x1^2*x2", 2))
    g = f.gradient(np.array([1.0, 3.0]))
    np.testing.assert_allclose(g, [6.0, 1.0])


def test_scalar_derivative_guard():
    f = from_poly(MPoly.from_text("x1*x2", 2))
    with pytest.raises(ValueError):
        f.derivative(np.array([1.0, 2.0]))


def test_exp_i_lambda_one_var():
    f = exp_i_lambda([2.0])
    assert f.value(0.5) == pytest.approx(complex(math.cos(1.0), math.sin(1.0)))
    assert f.gradient(0.5) == pytest.approx(2j * f.value(0.5))
    assert f.second_derivative(0.5) == pytest.approx(-4.0 * f.value(0.5))


def test_exp_i_lambda_multivar():
    lam = [1.0, -0.5]
    f = exp_i_lambda(lam)
    x = np.array([0.3, 0.8])
    want = np.exp(1j * (1.0 * 0.3 - 0.5 * 0.8))
    assert f.value(x) == pytest.approx(want)
    np.testing.assert_allclose(f.gradient(x), 1j * np.array(lam) * want, rtol=1e-14)
