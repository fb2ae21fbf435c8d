#!/usr/bin/env python3
"""Expectation values and the Newton-Wigner operator identity.

Momentum-side expectations of an axisymmetric amplitude are computed about its
symmetry axis; vector components perpendicular to the axis vanish by symmetry
and are reported as zero.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

import numpy as np

from compton_width.boost import MeasurementGrid
from compton_width.constants import NORM_SPAN_WIDTHS
from compton_width.exception import DomainError
from compton_width.quadrature import composite_gauss_legendre
from compton_width.quadrature import momentum_integral
from compton_width.quadrature import MomentumWindow
from compton_width.quadrature import QuadratureSpec
from compton_width.states import axis_frame
from compton_width.states import common_axis
from compton_width.states import MomentumAmplitude
from compton_width.states import ScalarMomentumAmplitude
from compton_width.transforms import cylindrical_profile
from compton_width.transforms import scalar_radial_profile
from compton_width.transforms import with_time_phase


def _axis_variances(
    frame: typing.Tuple[np.ndarray, np.ndarray], var_perp: float, var_par: float
) -> np.ndarray:
    """Diagonal of the covariance diag(var_perp, var_perp, var_par) in the frame (e1, n x e1, n)."""
    n, e1 = frame
    e2 = np.cross(n, e1)
    return var_perp * (e1**2 + e2**2) + var_par * n**2


def _cartesian(frame: typing.Tuple[np.ndarray, np.ndarray], pz: np.ndarray, pt: np.ndarray) -> np.ndarray:
    n, e1 = frame
    return np.asarray(pz)[..., None] * n + np.asarray(pt)[..., None] * e1


@dataclass(frozen=True, eq=False)
class MomentumMoments:
    """Momentum-side first and second moments of the position operator i d/dp."""

    mean_par: float
    var_perp: float
    var_par: float
    mean_energy: float
    mean_momentum_par: float


def momentum_moments(
    psi: MomentumAmplitude, t: float = 0.0, spec: typing.Optional[QuadratureSpec] = None
) -> MomentumMoments:
    """<x_par>, per-axis variances and <omega>, <p_par> from the momentum amplitude at time t.

    <x_par> = Re int Psi_t* i dPsi_t/dp_par, <x_par^2> = int |dPsi_t/dp_par|^2 and
    <x_perp^2> per Cartesian axis is half of int |grad_perp Psi_t|^2.
    """
    evolved = with_time_phase(psi, t)
    frame = evolved.frame()
    n, e1 = frame
    particle = psi.particle

    def integrand(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
        p = _cartesian(frame, pz, pt)
        value = evolved.evaluate(p)
        grad = evolved.gradient(p)
        along, across = grad @ n, grad @ e1
        density = np.abs(value) ** 2
        return np.stack(
            [
                np.real(np.conj(value) * 1j * along),
                np.abs(along) ** 2,
                0.5 * np.abs(across) ** 2,
                density * particle.omega(p),
                density * (p @ n),
            ],
            axis=-1,
        )

    mean_par, x_par_sq, var_perp, energy, p_par = np.real(
        momentum_integral(integrand, evolved.window, spec)
    )
    return MomentumMoments(
        mean_par=float(mean_par),
        var_perp=float(var_perp),
        var_par=float(x_par_sq - mean_par**2),
        mean_energy=float(energy),
        mean_momentum_par=float(p_par),
    )


@dataclass(frozen=True, eq=False)
class PositionMoments:
    """Position-side norm, mean and per-axis variance of |psi(t, x)|^2."""

    t: float
    norm: float
    mean: np.ndarray
    variance_per_axis: np.ndarray

    @property
    def total_variance(self) -> float:
        """Sum of the per-axis variances."""
        return float(np.sum(self.variance_per_axis))


def position_grid(
    psi: MomentumAmplitude, t: float = 0.0, spec: typing.Optional[QuadratureSpec] = None
) -> MeasurementGrid:
    """Gauss-Legendre grid about the packet at time t, sized from momentum-side moments."""
    moments = momentum_moments(psi, t, spec)
    return MeasurementGrid.gauss(
        math.sqrt(moments.var_perp),
        math.sqrt(moments.var_par),
        center_par=moments.mean_par,
    )


def position_moments(
    psi: MomentumAmplitude,
    t: float = 0.0,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    grid: typing.Optional[MeasurementGrid] = None,
) -> PositionMoments:
    """Norm, mean and per-axis variance of |psi(t, x)|^2 by position-side quadrature."""
    grid = grid or position_grid(psi, t, spec)
    values, _ = cylindrical_profile(psi, t, grid.x_perp, grid.x_par, spec)
    widths = grid.widths(np.abs(values) ** 2)
    frame = psi.frame()
    return PositionMoments(
        t=t,
        norm=widths.norm,
        mean=widths.mean_par * frame[0],
        variance_per_axis=_axis_variances(frame, widths.sigma_perp**2, widths.sigma_par**2),
    )


def position_norm(
    psi: MomentumAmplitude, t: float = 0.0, spec: typing.Optional[QuadratureSpec] = None
) -> float:
    """int d3x |psi(t, x)|^2."""
    return position_moments(psi, t, spec).norm


def scalar_radial_width(
    phi: ScalarMomentumAmplitude,
    sigma_guess: float,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    span_widths: float = NORM_SPAN_WIDTHS,
    panels: int = 8,
) -> typing.Tuple[float, float]:
    """Per-axis width sqrt(<r^2>/3) and L2 norm of an isotropic scalar amplitude at t = 0.

    Moments of |phi|^2 on Gauss-Legendre nodes over [0, span_widths * sigma_guess].
    """
    if not sigma_guess > 0:
        raise DomainError(f"sigma_guess must be positive, got {sigma_guess}")
    r, w = composite_gauss_legendre(np.linspace(0.0, span_widths * sigma_guess, panels + 1))
    values, _ = scalar_radial_profile(phi, 0.0, r, spec)
    density = 4.0 * math.pi * r**2 * np.abs(values) ** 2
    norm = float(w @ density)
    if not norm > 0:
        raise DomainError("scalar amplitude vanishes on the radial grid")
    return math.sqrt(float(w @ (r**2 * density)) / norm / 3.0), norm


@dataclass(frozen=True, eq=False)
class ExpectationReport:
    """Norm, four-momentum, position mean and per-axis position variance at time t."""

    norm: float
    four_momentum: np.ndarray
    position_mean: np.ndarray
    position_variance_per_axis: np.ndarray

    def __post_init__(self) -> None:
        if self.four_momentum[0] < 0:
            raise DomainError(f"negative energy expectation {self.four_momentum[0]}")

    def to_dict(self) -> dict:
        """JSON representation."""
        return {
            "norm": self.norm,
            "four_momentum": list(self.four_momentum),
            "position_mean": list(self.position_mean),
            "position_variance_per_axis": list(self.position_variance_per_axis),
        }


def expectation_report(
    psi: MomentumAmplitude,
    t: float = 0.0,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    grid: typing.Optional[MeasurementGrid] = None,
) -> ExpectationReport:
    """Expectations of psi at time t.

    The mean position is <x(t)> = int d3p Psi* (i d/dp + t p/omega) Psi on the
    momentum side; the variance per axis comes from position-side quadrature.
    """
    n, _ = psi.frame()
    moments = momentum_moments(psi, t, spec)
    if grid is None:
        grid = MeasurementGrid.gauss(
            math.sqrt(moments.var_perp),
            math.sqrt(moments.var_par),
            center_par=moments.mean_par,
        )
    position = position_moments(psi, t, spec, grid=grid)
    four_momentum = np.concatenate([[moments.mean_energy], moments.mean_momentum_par * n])
    return ExpectationReport(
        norm=psi.norm(spec),
        four_momentum=four_momentum,
        position_mean=moments.mean_par * n,
        position_variance_per_axis=position.variance_per_axis,
    )


@dataclass(frozen=True, eq=False)
class NWIdentityResult:
    """Both sides of the Newton-Wigner matrix element identity."""

    lhs: np.ndarray
    rhs: np.ndarray
    scale: float

    @property
    def max_abs_diff(self) -> float:
        """max_i |lhs_i - rhs_i|."""
        return float(np.max(np.abs(self.lhs - self.rhs)))

    def to_dict(self) -> dict:
        """JSON representation (complex components as [re, im])."""
        return {
            "lhs": [[v.real, v.imag] for v in self.lhs],
            "rhs": [[v.real, v.imag] for v in self.rhs],
            "max_abs_diff": self.max_abs_diff,
            "scale": self.scale,
        }


def _window_along(
    source: typing.Union[MomentumAmplitude, ScalarMomentumAmplitude], n: np.ndarray
) -> MomentumWindow:
    window = source.window
    if source.axis is not None and float(source.axis @ n) < 0:
        return MomentumWindow(window.perp, (-window.par[1], -window.par[0]))
    return window


def nw_identity_check(
    phi1: ScalarMomentumAmplitude,
    phi2: ScalarMomentumAmplitude,
    spec: typing.Optional[QuadratureSpec] = None,
) -> NWIdentityResult:
    """Compare int (d3p/omega) Phi1* {i d/dp - i p / 2 omega^2} Phi2 with int d3p Psi1* i d/dp Psi2.

    The scalar side differentiates Phi2 by finite differences, the probability
    side uses the analytic gradient of Psi2.
    """
    psi1, psi2 = phi1.probability, phi2.probability
    if psi1 is None or psi2 is None:
        raise DomainError("nw_identity_check needs scalar amplitudes built from probability amplitudes")
    if phi1.particle != phi2.particle:
        raise DomainError("nw_identity_check needs amplitudes of the same particle")

    frame = axis_frame(common_axis(phi1.axis, phi2.axis))
    n = frame[0]
    window = _window_along(phi1, n).intersect(_window_along(phi2, n))
    if window is None:
        zero = np.zeros(3, dtype=complex)
        return NWIdentityResult(zero, zero.copy(), 0.0)
    particle = phi1.particle

    def integrand(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
        p = _cartesian(frame, pz, pt)
        omega = particle.omega(p)
        p_par = p @ n
        phi2_value = phi2.evaluate(p)
        scalar_side = np.conj(phi1.evaluate(p)) / omega * (
            1j * (phi2.gradient(p) @ n) - 1j * p_par / (2.0 * omega**2) * phi2_value
        )
        psi1_conj = np.conj(psi1.evaluate(p))
        d_psi2 = psi2.gradient(p) @ n
        return np.stack(
            [scalar_side, psi1_conj * 1j * d_psi2, np.abs(psi1_conj * d_psi2).astype(complex)],
            axis=-1,
        )

    lhs, rhs, scale = momentum_integral(integrand, window, spec)
    return NWIdentityResult(lhs * n, rhs * n, float(np.real(scale)))
