#!/usr/bin/env python
"""Shared fixtures for the compton-width tests"""
import numpy as np
import pytest

from compton_width.quadrature import QuadratureSpec
from compton_width.states import Particle

# pylint: disable=line-too-long
# flake8: noqa: E501


@pytest.fixture
def particle() -> Particle:
    return Particle(1.0)


@pytest.fixture
def spec() -> QuadratureSpec:
    return QuadratureSpec()


@pytest.fixture
def gaussian_closed_form():
    """Position amplitude of the isotropic Gaussian, (2 pi sigma_x^2)^(-3/4) e^{-r^2/4 sigma_x^2}."""

    def closed_form(sigma_x: float, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return (2.0 * np.pi * sigma_x**2) ** -0.75 * np.exp(-(r**2) / (4.0 * sigma_x**2))

    return closed_form
