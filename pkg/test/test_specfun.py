#!/usr/bin/env python
"""Tests for the Bessel kernels"""
import math

import numpy as np
import pytest
from scipy import special

from compton_width.exception import DomainError
from compton_width.specfun import asymptotic_coefficients
from compton_width.specfun import bessel_j0
from compton_width.specfun import bessel_k
from compton_width.specfun import j0
from compton_width.specfun import localized_scalar_shape

# pylint: disable=line-too-long
# flake8: noqa: E501


def test_j0_at_zero() -> None:
    result = bessel_j0(0.0)
    assert result.value == pytest.approx(1.0, abs=1e-15)
    assert result.est_abs_error >= 0


@pytest.mark.parametrize(
    "x",
    [0.1, 1.0, 2.404825557695773, 5.0, 10.0, 24.9, 25.1, 30.0, 100.0, 1e3, -7.5],
)
def test_j0_against_scipy(x: float) -> None:
    result = bessel_j0(x)
    assert abs(result.value - special.j0(x)) < 1e-12
    assert result.est_abs_error < 1e-10


def test_j0_even() -> None:
    assert bessel_j0(-3.7).value == bessel_j0(3.7).value


def test_j0_crossover_continuity() -> None:
    below = bessel_j0(25.0 - 1e-9).value
    above = bessel_j0(25.0 + 1e-9).value
    assert abs(below - above) < 1e-12


def test_j0_vectorized_matches_scalar() -> None:
    x = np.array([0.0, 0.3, 4.0, 12.5, 24.99, 25.01, 60.0, 512.0])
    values = j0(x)
    assert values.shape == x.shape
    for xi, vi in zip(x, values):
        assert abs(vi - special.j0(xi)) < 1e-12


def test_j0_keeps_shape() -> None:
    x = np.linspace(0.0, 50.0, 12).reshape(3, 4)
    assert j0(x).shape == (3, 4)


@pytest.mark.parametrize("x", [math.inf, -math.inf, math.nan])
def test_j0_rejects_non_finite(x: float) -> None:
    with pytest.raises(DomainError):
        bessel_j0(x)
    with pytest.raises(DomainError):
        j0(np.array([0.0, x]))


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 1.25, 2.0, 3.0])
@pytest.mark.parametrize("x", [0.01, 0.1, 1.0, 5.0, 19.9, 20.0, 50.0])
def test_bessel_k_against_scipy(nu: float, x: float) -> None:
    result = bessel_k(nu, x)
    expected = special.kv(nu, x)
    assert result.value == pytest.approx(expected, rel=1e-10)
    assert result.est_abs_error <= 1e-8 * expected


def test_bessel_k_half_order_closed_form() -> None:
    # K_1/2(x) = sqrt(pi / 2x) e^{-x}; the asymptotic series terminates
    for x in (0.5, 3.0, 25.0, 80.0):
        expected = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)
        assert bessel_k(0.5, x).value == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "nu, x",
    [
        (1.0, 0.0),
        (1.0, -1.0),
        (1.0, math.inf),
        (1.0, math.nan),
        (-0.5, 1.0),
        (3.5, 1.0),
        (math.nan, 1.0),
    ],
)
def test_bessel_k_domain(nu: float, x: float) -> None:
    with pytest.raises(DomainError):
        bessel_k(nu, x)


def test_domain_error_is_value_error() -> None:
    with pytest.raises(ValueError):
        bessel_k(1.0, 0.0)


def test_asymptotic_coefficients() -> None:
    coefficients = asymptotic_coefficients(1.25, 3)
    assert coefficients[0] == 1.0
    assert coefficients[1] == pytest.approx(0.65625, rel=1e-15)
    assert coefficients[2] == pytest.approx(0.65625 * (6.25 - 9.0) / 16.0, rel=1e-15)


def test_asymptotic_coefficients_order_zero() -> None:
    assert asymptotic_coefficients(0.0, 3) == pytest.approx([1.0, -0.125, 0.0703125])


def test_localized_scalar_shape_mass_scaling() -> None:
    # (2m / (r/2))^(5/4) = 2^(5/2) (m/r)^(5/4) at fixed mr
    for r in (0.5, 1.0, 3.0):
        ratio = localized_scalar_shape(2.0, 0.5 * r) / localized_scalar_shape(1.0, r)
        assert ratio == pytest.approx(2.0**2.5, rel=1e-13)


def test_localized_scalar_shape_value() -> None:
    assert localized_scalar_shape(1.0, 2.0) == pytest.approx(0.5**1.25 * special.kv(1.25, 2.0), rel=1e-10)
