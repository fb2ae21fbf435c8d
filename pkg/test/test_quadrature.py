#!/usr/bin/env python
"""Tests for the quadrature engine"""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from compton_width.constants import CutoffPolicy
from compton_width.exception import ConvergenceError
from compton_width.exception import DomainError
from compton_width.quadrature import abel_sine_integral
from compton_width.quadrature import axisym_fourier3d
from compton_width.quadrature import axisym_fourier3d_grid
from compton_width.quadrature import composite_gauss_legendre
from compton_width.quadrature import damped_sine_integral
from compton_width.quadrature import integrate_adaptive
from compton_width.quadrature import integrate_panels
from compton_width.quadrature import momentum_integral
from compton_width.quadrature import MomentumWindow
from compton_width.quadrature import QuadratureSpec
from compton_width.quadrature import QuadResult
from compton_width.quadrature import radial_fourier3d
from compton_width.quadrature import radial_fourier3d_grid
from compton_width.quadrature import regulated_oscillatory
from compton_width.quadrature import RegulatorSpec
from compton_width.quadrature import support_window

# pylint: disable=line-too-long
# flake8: noqa: E501


def gaussian_profile(sigma_p: float):
    prefactor = (2.0 * math.pi * sigma_p**2) ** -0.75

    def profile(p):
        return prefactor * np.exp(-np.asarray(p) ** 2 / (4.0 * sigma_p**2))

    return profile


def gaussian_position(sigma_p: float, r: float) -> float:
    sigma_x = 0.5 / sigma_p
    return (2.0 * math.pi * sigma_x**2) ** -0.75 * math.exp(-(r**2) / (4.0 * sigma_x**2))


def test_quadrature_spec_defaults() -> None:
    spec = QuadratureSpec()
    assert spec.rel_tol == 1e-10
    assert spec.abs_tol == 1e-13
    assert spec.max_subdivisions == 12
    assert spec.semi_infinite_cutoff_policy == CutoffPolicy.TAIL_ESTIMATE


@pytest.mark.parametrize(
    "kwargs",
    [
        {"rel_tol": 0.0},
        {"abs_tol": -1e-3},
        {"max_subdivisions": 0},
        {"max_subdivisions": 2.5},
        {"semi_infinite_cutoff_policy": CutoffPolicy.FIXED_CUTOFF},
        {"semi_infinite_cutoff_policy": CutoffPolicy.FIXED_CUTOFF, "p_max": -1.0},
    ],
)
def test_quadrature_spec_invalid(kwargs: dict) -> None:
    with pytest.raises(DomainError):
        QuadratureSpec(**kwargs)


def test_tolerance_is_mixed() -> None:
    spec = QuadratureSpec(rel_tol=1e-6, abs_tol=1e-9)
    assert spec.tolerance(0.0) == 1e-9
    assert spec.tolerance(10.0) == pytest.approx(1e-5)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"epsilon_ladder": (0.1, 0.2, 0.05, 0.025)},
        {"epsilon_ladder": (0.1, 0.1, 0.05, 0.025)},
        {"epsilon_ladder": (0.1, 0.05)},
        {"epsilon_ladder": (0.1, 0.0, -0.1, -0.2)},
        {"extrapolation_order": 0},
    ],
)
def test_regulator_spec_invalid(kwargs: dict) -> None:
    with pytest.raises(DomainError):
        RegulatorSpec(**kwargs)


def test_quad_result_rejects_negative_error() -> None:
    with pytest.raises(DomainError):
        QuadResult(1.0, -1e-3)
    scaled = QuadResult(2.0, 1e-3, 5).scaled(-3.0)
    assert scaled.value == -6.0
    assert scaled.est_error == pytest.approx(3e-3)
    assert scaled.evaluations == 5


def test_momentum_window() -> None:
    ball = MomentumWindow.ball(2.0)
    assert ball.perp == (0.0, 2.0)
    assert ball.par == (-2.0, 2.0)
    assert ball.radius == pytest.approx(2.0 * math.sqrt(2.0))

    other = MomentumWindow((0.0, 1.0), (1.0, 5.0))
    overlap = ball.intersect(other)
    assert overlap == MomentumWindow((0.0, 1.0), (1.0, 2.0))
    assert ball.intersect(MomentumWindow((0.0, 1.0), (3.0, 4.0))) is None

    with pytest.raises(DomainError):
        MomentumWindow((1.0, 1.0), (0.0, 1.0))
    with pytest.raises(DomainError):
        MomentumWindow((0.0, 1.0), (2.0, 1.0))


def test_composite_gauss_legendre_polynomial() -> None:
    nodes, weights = composite_gauss_legendre(np.array([0.0, 1.0, 3.0]), order=4)
    assert len(nodes) == 8
    assert weights @ nodes**5 == pytest.approx(3.0**6 / 6.0, rel=1e-14)


def test_integrate_adaptive_basic(spec: QuadratureSpec) -> None:
    result = integrate_adaptive(math.sin, 0.0, math.pi, spec)
    assert result.value == pytest.approx(2.0, abs=1e-12)
    assert result.est_error >= 0
    assert result.evaluations > 0


def test_integrate_adaptive_complex(spec: QuadratureSpec) -> None:
    result = integrate_adaptive(lambda x: complex(math.cos(x), math.sin(x)), 0.0, 1.0, spec)
    assert result.value.real == pytest.approx(math.sin(1.0), abs=1e-12)
    assert result.value.imag == pytest.approx(1.0 - math.cos(1.0), abs=1e-12)


def test_integrate_adaptive_semi_infinite(spec: QuadratureSpec) -> None:
    result = integrate_adaptive(lambda x: math.exp(-x), 0.0, math.inf, spec)
    assert result.value == pytest.approx(1.0, abs=1e-10)


def test_integrate_adaptive_fixed_cutoff() -> None:
    spec = QuadratureSpec(semi_infinite_cutoff_policy=CutoffPolicy.FIXED_CUTOFF, p_max=2.0)
    result = integrate_adaptive(lambda x: math.exp(-x), 0.0, math.inf, spec)
    assert result.value == pytest.approx(1.0 - math.exp(-2.0), abs=1e-12)


def test_integrate_adaptive_empty_and_invalid_ranges(spec: QuadratureSpec) -> None:
    assert integrate_adaptive(math.exp, 1.0, 1.0, spec).value == 0
    with pytest.raises(DomainError):
        integrate_adaptive(math.exp, 1.0, 0.0, spec)
    with pytest.raises(DomainError):
        integrate_adaptive(math.exp, -math.inf, 0.0, spec)


def test_integrate_adaptive_non_finite_integrand(spec: QuadratureSpec) -> None:
    with pytest.raises(DomainError):
        integrate_adaptive(lambda x: math.nan, 0.0, 1.0, spec)


def test_integrate_adaptive_subdivisions_exhausted() -> None:
    spec = QuadratureSpec(rel_tol=1e-14, abs_tol=1e-15, max_subdivisions=1)
    with pytest.raises(ConvergenceError) as excinfo:
        integrate_adaptive(lambda x: math.sin(1.0 / x), 1e-3, 1.0, spec)
    assert excinfo.value.best_estimate.est_error >= 0


@settings(derandomize=True, max_examples=25, deadline=None)
@given(
    a=st.floats(min_value=-10.0, max_value=10.0),
    b=st.floats(min_value=-10.0, max_value=10.0),
)
def test_integrate_adaptive_linear(a: float, b: float) -> None:
    def f(x: float) -> float:
        return math.exp(-x)

    def g(x: float) -> float:
        return math.sin(3.0 * x)

    combined = integrate_adaptive(lambda x: a * f(x) + b * g(x), 0.0, 1.0).value
    separate = a * integrate_adaptive(f, 0.0, 1.0).value + b * integrate_adaptive(g, 0.0, 1.0).value
    assert abs(combined - separate) < 1e-10 * (1.0 + abs(a) + abs(b))


def test_integrate_panels(spec: QuadratureSpec) -> None:
    result = integrate_panels(np.cos, np.linspace(0.0, 10.0, 5), spec)
    assert result.value == pytest.approx(math.sin(10.0), abs=1e-13)


@pytest.mark.parametrize("sigma_p", [0.2, 1.0, 2.0])
@pytest.mark.parametrize("r_widths", [0.0, 0.5, 1.0, 3.0])
def test_radial_fourier3d_gaussian(spec: QuadratureSpec, sigma_p: float, r_widths: float) -> None:
    profile = gaussian_profile(sigma_p)
    r = r_widths * 0.5 / sigma_p
    peak = gaussian_position(sigma_p, 0.0)
    bounded = radial_fourier3d(lambda p: complex(profile(p)), r, spec, p_max=12.0 * sigma_p)
    unbounded = radial_fourier3d(lambda p: complex(profile(p)), r, spec)
    assert abs(bounded.value - gaussian_position(sigma_p, r)) < 1e-9 * peak
    assert abs(unbounded.value - gaussian_position(sigma_p, r)) < 1e-9 * peak


def test_radial_fourier3d_rejects_negative_radius() -> None:
    with pytest.raises(DomainError):
        radial_fourier3d(lambda p: 1.0, -1.0)


def test_radial_fourier3d_grid_matches_closed_form(spec: QuadratureSpec) -> None:
    sigma_p = 1.0
    r = np.linspace(0.0, 3.0, 13)
    values, errors = radial_fourier3d_grid(gaussian_profile(sigma_p), r, 12.0 * sigma_p, spec)
    expected = np.array([gaussian_position(sigma_p, ri) for ri in r])
    assert np.max(np.abs(values - expected)) < 1e-10
    assert np.all(errors >= 0)


def test_axisym_matches_radial(spec: QuadratureSpec) -> None:
    sigma_p = 0.5
    profile = gaussian_profile(sigma_p)
    window = MomentumWindow.ball(12.0 * sigma_p)
    rng = np.random.default_rng(11)
    for x_perp, x_par in zip(rng.uniform(0.0, 3.0, 20), rng.uniform(-3.0, 3.0, 20)):
        axisym = axisym_fourier3d(lambda pt, pz: profile(np.hypot(pt, pz)), x_perp, x_par, spec, window=window)
        radial = radial_fourier3d(profile, math.hypot(x_perp, x_par), spec, p_max=12.0 * sigma_p)
        assert abs(axisym.value - radial.value) <= 1e-7 * max(1.0, abs(radial.value))
        assert abs(radial.value - gaussian_position(sigma_p, math.hypot(x_perp, x_par))) < 1e-9


def test_axisym_grid_shape(spec: QuadratureSpec) -> None:
    profile = gaussian_profile(1.0)
    values, errors = axisym_fourier3d_grid(
        lambda pt, pz: profile(np.hypot(pt, pz)),
        np.linspace(0.0, 1.0, 4),
        np.linspace(-1.0, 1.0, 5),
        MomentumWindow.ball(12.0),
        spec,
    )
    assert values.shape == (4, 5)
    assert errors.shape == (4, 5)
    # real, even profile: the amplitude is real and even in x_par
    assert np.max(np.abs(values.imag)) < 1e-12
    assert np.max(np.abs(values[:, 0] - values[:, -1])) < 1e-12


def test_axisym_rejects_negative_x_perp() -> None:
    with pytest.raises(DomainError):
        axisym_fourier3d(lambda pt, pz: np.ones_like(pt * pz), -1.0, 0.0, window=MomentumWindow.ball(1.0))


def test_support_window() -> None:
    window = support_window(lambda pt, pz: np.exp(-(pt**2 + pz**2) / 4.0))
    assert 12.0 < window.perp[1] < 16.0
    with pytest.raises(DomainError):
        support_window(lambda pt, pz: np.zeros_like(pt * pz))


def test_momentum_integral_normalization(spec: QuadratureSpec) -> None:
    sigma_p = 0.7
    profile = gaussian_profile(sigma_p)
    value = momentum_integral(
        lambda pt, pz: np.abs(profile(np.hypot(pt, pz))) ** 2,
        MomentumWindow.ball(12.0 * sigma_p),
        spec,
    )
    assert float(np.real(value)) == pytest.approx(1.0, abs=1e-10)


def test_momentum_integral_vector(spec: QuadratureSpec) -> None:
    sigma_p = 1.0
    profile = gaussian_profile(sigma_p)

    def integrand(pt, pz):
        density = np.abs(profile(np.hypot(pt, pz))) ** 2
        return np.stack([density, density * pz**2, density * pt**2], axis=-1)

    norm, pz_sq, pt_sq = np.real(momentum_integral(integrand, MomentumWindow.ball(12.0), spec))
    assert norm == pytest.approx(1.0, abs=1e-10)
    # |Psi|^2 has variance sigma_p^2 per Cartesian axis
    assert pz_sq == pytest.approx(sigma_p**2, rel=1e-9)
    assert pt_sq == pytest.approx(2.0 * sigma_p**2, rel=1e-9)


def test_damped_sine_integral_closed_form(spec: QuadratureSpec) -> None:
    # int_0^inf sin(pr) e^{-eps p} dp = r / (r^2 + eps^2)
    for r, eps in ((1.0, 0.1), (2.5, 0.05), (0.3, 0.4)):
        result = damped_sine_integral(np.ones_like, r, eps, spec)
        assert result.value == pytest.approx(r / (r * r + eps * eps), abs=1e-10)


def test_damped_sine_integral_domain() -> None:
    with pytest.raises(DomainError):
        damped_sine_integral(np.ones_like, 1.0, 0.0)
    with pytest.raises(DomainError):
        damped_sine_integral(np.ones_like, 0.0, 0.1)


def test_abel_sine_integral_constant(spec: QuadratureSpec) -> None:
    # Abel limit of int_0^inf sin(p) dp is 1; the damped values are 1/(1 + eps^2)
    result = abel_sine_integral(np.ones_like, 1.0, RegulatorSpec(), spec)
    assert abs(result.value - 1.0) < 1e-8
    assert 0 <= result.est_error < 1e-6


@pytest.mark.parametrize("r", [0.3, 1.0, 2.5])
def test_abel_sine_integral_constant_radius(spec: QuadratureSpec, r: float) -> None:
    assert abel_sine_integral(np.ones_like, r, spec=spec).value == pytest.approx(1.0 / r, abs=1e-8)


def test_abel_sine_integral_without_extensions(spec: QuadratureSpec) -> None:
    # the bare default ladder leaves a residual of order prod(eps) ~ 1e-5
    coarse = abel_sine_integral(np.ones_like, 1.0, RegulatorSpec(max_extensions=0), spec)
    assert 1e-8 < abs(coarse.value - 1.0) < 1e-3
    assert coarse.est_error > 1e-8

    finer = RegulatorSpec(epsilon_ladder=(0.04, 0.02, 0.01, 0.005, 0.0025), max_extensions=0)
    assert abs(abel_sine_integral(np.ones_like, 1.0, finer, spec).value - 1.0) < 1e-8


def test_abel_sine_integral_domain() -> None:
    with pytest.raises(DomainError):
        abel_sine_integral(np.ones_like, 0.0)
    with pytest.raises(DomainError):
        RegulatorSpec(max_extensions=-1)


def test_regulated_oscillatory_sine(spec: QuadratureSpec) -> None:
    # f = 1/p turns the integrand into sin(pr); sqrt(2/pi)/r is the radial-Fourier normalization
    result = regulated_oscillatory(lambda p: 1.0 / p, 1.0, RegulatorSpec(), spec)
    assert result.value == pytest.approx(math.sqrt(2.0 / math.pi), abs=1e-8)


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
def test_regulated_oscillatory_matches_absolute_integral(spec: QuadratureSpec, r: float) -> None:
    sigma_p = 1.0
    profile = gaussian_profile(sigma_p)
    peak = gaussian_position(sigma_p, 0.0)
    direct = radial_fourier3d(lambda p: complex(profile(p)), r, spec)
    regulated = regulated_oscillatory(profile, r, RegulatorSpec(), spec)
    assert abs(regulated.value - direct.value) < 1e-8 * peak
    bounded = regulated_oscillatory(profile, r, RegulatorSpec(), spec, p_max=12.0 * sigma_p)
    assert abs(bounded.value - direct.value) < 1e-8 * peak


@settings(derandomize=True, max_examples=10, deadline=None)
@given(
    a=st.floats(min_value=-2.0, max_value=2.0),
    b=st.floats(min_value=-2.0, max_value=2.0),
    r=st.floats(min_value=0.2, max_value=3.0),
)
def test_radial_fourier3d_linear(a: float, b: float, r: float) -> None:
    f, g = gaussian_profile(1.0), gaussian_profile(0.5)
    spec = QuadratureSpec(abs_tol=1e-11)
    combined = radial_fourier3d(lambda p: a * f(p) + b * g(p), r, spec).value
    separate = a * radial_fourier3d(f, r, spec).value + b * radial_fourier3d(g, r, spec).value
    assert abs(combined - separate) < 1e-9 * (1.0 + abs(a) + abs(b))


@settings(derandomize=True, max_examples=10, deadline=None)
@given(
    a=st.floats(min_value=-2.0, max_value=2.0),
    b=st.floats(min_value=-2.0, max_value=2.0),
    x_perp=st.floats(min_value=0.0, max_value=2.0),
    x_par=st.floats(min_value=-2.0, max_value=2.0),
)
def test_axisym_fourier3d_linear(a: float, b: float, x_perp: float, x_par: float) -> None:
    window = MomentumWindow.ball(12.0)
    f, g = gaussian_profile(1.0), gaussian_profile(0.5)

    def along(profile):
        return lambda pt, pz: profile(np.hypot(pt, pz - 0.3))

    combined = axisym_fourier3d(lambda pt, pz: a * along(f)(pt, pz) + b * along(g)(pt, pz), x_perp, x_par, window=window).value
    separate = a * axisym_fourier3d(along(f), x_perp, x_par, window=window).value + b * axisym_fourier3d(along(g), x_perp, x_par, window=window).value
    assert abs(combined - separate) < 1e-9 * (1.0 + abs(a) + abs(b))


@settings(derandomize=True, max_examples=5, deadline=None)
@given(
    a=st.floats(min_value=-2.0, max_value=2.0),
    b=st.floats(min_value=-2.0, max_value=2.0),
)
def test_regulated_oscillatory_linear(a: float, b: float) -> None:
    f, g = gaussian_profile(1.0), gaussian_profile(0.5)
    r, p_max = 1.0, 12.0
    combined = regulated_oscillatory(lambda p: a * f(p) + b * g(p), r, p_max=p_max).value
    separate = a * regulated_oscillatory(f, r, p_max=p_max).value + b * regulated_oscillatory(g, r, p_max=p_max).value
    assert abs(combined - separate) < 1e-8 * (1.0 + abs(a) + abs(b))
