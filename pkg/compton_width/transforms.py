#!/usr/bin/env python3
"""Position-space amplitudes.

    psi(t, x) = (2pi)^(-3/2) int d3p        e^{-i omega t + i p.x} Psi(p)
    phi(t, x) = (2pi)^(-3/2) int (d3p/omega) e^{-i omega t + i p.x} Phi(p)

Isotropic amplitudes use the spherical reduction, all others the axisymmetric
one about their symmetry axis. The localized state with flat momentum weight has
a delta-function position amplitude but a scalar amplitude of Compton-wavelength
extent; both are evaluated here.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from compton_width.constants import GAUSSIAN_SUPPORT_WIDTHS
from compton_width.exception import DomainError
from compton_width.quadrature import axisym_fourier3d
from compton_width.quadrature import axisym_fourier3d_grid
from compton_width.quadrature import integrate_panels
from compton_width.quadrature import QuadratureSpec
from compton_width.quadrature import QuadResult
from compton_width.quadrature import radial_fourier3d
from compton_width.quadrature import radial_fourier3d_grid
from compton_width.quadrature import regulated_oscillatory
from compton_width.quadrature import RegulatorSpec
from compton_width.specfun import asymptotic_coefficients
from compton_width.specfun import localized_scalar_shape
from compton_width.states import MomentumAmplitude
from compton_width.states import Particle
from compton_width.states import PhaseShiftedAmplitude
from compton_width.states import ScalarMomentumAmplitude
from compton_width.states import TimePhaseAmplitude
from compton_width.utils import write_csv

INV_2PI_3_2 = (2.0 * math.pi) ** -1.5


@dataclass(frozen=True, eq=False)
class PositionSample:
    """Amplitude value at time t and position x."""

    t: float
    x: np.ndarray
    value: complex
    est_error: float

    @property
    def r(self) -> float:
        """|x|."""
        return float(np.linalg.norm(self.x))


def _position(x: typing.Union[float, typing.Sequence[float]]) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim == 0:
        if x < 0:
            raise DomainError(f"radius must be non-negative, got {float(x)}")
        # radial position on the z axis
        return np.array([0.0, 0.0, float(x)])
    if x.shape != (3,) or not np.all(np.isfinite(x)):
        raise DomainError(f"position must be a finite 3-vector or a radius, got {x}")
    return x


def _cylindrical_point(x: np.ndarray, n: np.ndarray) -> typing.Tuple[float, float]:
    x_par = float(x @ n)
    return float(np.linalg.norm(x - x_par * n)), x_par


def with_time_phase(psi: MomentumAmplitude, t: float) -> MomentumAmplitude:
    """Psi e^{-i omega t} as an amplitude (time evolution folded into Psi)."""
    if t == 0.0:
        return psi
    return TimePhaseAmplitude(psi, t)


def _evolved(
    evaluate: typing.Callable[[np.ndarray], np.ndarray], particle: Particle, t: float
) -> typing.Callable[[np.ndarray], np.ndarray]:
    if t == 0.0:
        return evaluate

    def evolved(p: np.ndarray) -> np.ndarray:
        return evaluate(p) * np.exp(-1j * particle.omega(p) * t)

    return evolved


def _on_axis(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return np.stack([np.zeros_like(p), np.zeros_like(p), p], axis=-1)


def _fourier(
    evaluate: typing.Callable[[np.ndarray], np.ndarray],
    source: typing.Union[MomentumAmplitude, ScalarMomentumAmplitude],
    isotropic: bool,
    x: np.ndarray,
    spec: typing.Optional[QuadratureSpec],
) -> QuadResult:
    """(2pi)^(-3/2) int d3p e^{ip.x} evaluate(p) in the geometry of ``source``."""
    window = source.window
    if isotropic:
        return radial_fourier3d(
            lambda p: complex(evaluate(_on_axis(p))),
            float(np.linalg.norm(x)),
            spec,
            p_max=window.radius,
        )
    n, e1 = source.frame()
    x_perp, x_par = _cylindrical_point(x, n)

    def cylindrical(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
        return evaluate(np.asarray(pz)[..., None] * n + np.asarray(pt)[..., None] * e1)

    return axisym_fourier3d(cylindrical, x_perp, x_par, spec, window=window)


def position_amplitude(
    psi: MomentumAmplitude,
    t: float,
    x: typing.Union[float, typing.Sequence[float]],
    spec: typing.Optional[QuadratureSpec] = None,
) -> PositionSample:
    """Position probability amplitude psi(t, x); ``x`` is a 3-vector or a radius."""
    x = _position(x)
    if isinstance(psi, PhaseShiftedAmplitude):
        # e^{-ip.a} translates the packet by a
        inner = position_amplitude(psi.inner, t, x - psi.a, spec)
        return PositionSample(t, x, inner.value, inner.est_error)

    result = _fourier(
        _evolved(psi.evaluate, psi.particle, t), psi, psi.is_isotropic, x, spec
    )
    return PositionSample(t, x, result.value, result.est_error)


def radial_profile(
    psi: MomentumAmplitude,
    t: float,
    r: np.ndarray,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """psi(t, r) of an isotropic amplitude on a grid of radii (values, errors)."""
    if not psi.is_isotropic:
        raise DomainError(f"radial_profile needs an isotropic amplitude, got {psi!r}")
    evolved = _evolved(psi.evaluate, psi.particle, t)
    return radial_fourier3d_grid(
        lambda p: evolved(_on_axis(p)), np.asarray(r, dtype=float), psi.window.radius, spec
    )


def cylindrical_profile(
    psi: MomentumAmplitude,
    t: float,
    x_perp: np.ndarray,
    x_par: np.ndarray,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """psi(t, x) on the tensor grid (x_perp, x_par) about the amplitude's axis."""
    evolved = _evolved(psi.evaluate, psi.particle, t)
    n, e1 = psi.frame()

    def cylindrical(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
        return evolved(np.asarray(pz)[..., None] * n + np.asarray(pt)[..., None] * e1)

    return axisym_fourier3d_grid(cylindrical, x_perp, x_par, psi.window, spec)


def _scalar_integrand(
    phi: ScalarMomentumAmplitude, t: float
) -> typing.Callable[[np.ndarray], np.ndarray]:
    def weighted(p: np.ndarray) -> np.ndarray:
        return phi.evaluate(p) / phi.particle.omega(p)

    return _evolved(weighted, phi.particle, t)


def scalar_amplitude(
    phi: ScalarMomentumAmplitude,
    t: float,
    x: typing.Union[float, typing.Sequence[float]],
    spec: typing.Optional[QuadratureSpec] = None,
) -> PositionSample:
    """Scalar amplitude phi(t, x) with the invariant measure d3p/omega."""
    x = _position(x)
    result = _fourier(_scalar_integrand(phi, t), phi, phi.axis is None, x, spec)
    return PositionSample(t, x, result.value, result.est_error)


def scalar_radial_profile(
    phi: ScalarMomentumAmplitude,
    t: float,
    r: np.ndarray,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """phi(t, r) of an isotropic scalar amplitude on a grid of radii."""
    if phi.axis is not None:
        raise DomainError("scalar_radial_profile needs an isotropic scalar amplitude")
    integrand = _scalar_integrand(phi, t)
    return radial_fourier3d_grid(
        lambda p: integrand(_on_axis(p)), np.asarray(r, dtype=float), phi.window.radius, spec
    )


def scalar_cylindrical_profile(
    phi: ScalarMomentumAmplitude,
    t: float,
    x_perp: np.ndarray,
    x_par: np.ndarray,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """phi(t, x) on the tensor grid (x_perp, x_par) about the scalar amplitude's axis."""
    integrand = _scalar_integrand(phi, t)
    n, e1 = phi.frame()

    def cylindrical(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
        return integrand(np.asarray(pz)[..., None] * n + np.asarray(pt)[..., None] * e1)

    return axisym_fourier3d_grid(cylindrical, x_perp, x_par, phi.window, spec)


def nw_localized_scalar(
    particle: Particle,
    r: float,
    reg: typing.Optional[RegulatorSpec] = None,
    spec: typing.Optional[QuadratureSpec] = None,
) -> PositionSample:
    """Scalar amplitude of the state localized at the origin, int d3p e^{ip.x}/((2pi)^3 sqrt(omega)).

    The radial integrand grows like sqrt(p); the value is the Abel limit.
    """
    if not (math.isfinite(r) and r > 0):
        raise DomainError(f"nw_localized_scalar requires r > 0, got {r}")
    m_sq = particle.mass**2
    result = regulated_oscillatory(
        lambda p: (p * p + m_sq) ** -0.25,
        r,
        reg,
        spec,
        length_scale=particle.lambda_c,
    ).scaled(INV_2PI_3_2)
    return PositionSample(0.0, _position(r), result.value.real, result.est_error)


def nw_profile_ratio(
    particle: Particle,
    r: float,
    reg: typing.Optional[RegulatorSpec] = None,
    spec: typing.Optional[QuadratureSpec] = None,
) -> float:
    """nw_localized_scalar / ((m/r)^(5/4) K_5/4(mr)); independent of r."""
    value = nw_localized_scalar(particle, r, reg, spec).value.real
    return value / localized_scalar_shape(particle.mass, r)


def nw_tail_invariant(particle: Particle, r: float, value: float) -> float:
    """value e^{mr} r^(7/4) with the first two asymptotic corrections divided out.

    Constant in r for large mr when value follows the (m/r)^(5/4) K_5/4(mr) shape.
    """
    mr = particle.mass * r
    _, a_1, a_2 = asymptotic_coefficients(1.25, 3)
    correction = 1.0 + a_1 / mr + a_2 / mr**2
    return value * math.exp(mr) * r**1.75 / correction


def _sharp_cutoff_kernel(x: np.ndarray) -> np.ndarray:
    """(sin x - x cos x) / x^3, with its series below x = 0.1."""
    x = np.asarray(x, dtype=float)
    small = x < 0.1
    xs = np.where(small, 1.0, x)
    exact = (np.sin(xs) - xs * np.cos(xs)) / xs**3
    x_sq = x * x
    series = 1.0 / 3.0 - x_sq / 30.0 + x_sq**2 / 840.0 - x_sq**3 / 45360.0
    return np.where(small, series, exact)


def nw_delta_smeared(
    w: float, cutoff: float, spec: typing.Optional[QuadratureSpec] = None
) -> float:
    """int d3x psi_P(x) g(x) for the localized state truncated at |p| <= cutoff.

    psi_P(r) = (sin Pr - Pr cos Pr) / (2 pi^2 r^3) is a nascent delta; g is the
    Gaussian e^{-r^2 / 2w^2}, so the result tends to g(0) = 1.
    """
    if not (w > 0 and cutoff > 0):
        raise DomainError("nw_delta_smeared requires w > 0 and cutoff > 0")
    r_max = GAUSSIAN_SUPPORT_WIDTHS * w
    half_period = math.pi / cutoff
    n_panels = max(4, int(math.ceil(r_max / half_period)))
    breaks = np.linspace(0.0, r_max, n_panels + 1)
    prefactor = 4.0 * math.pi * cutoff**3 / (2.0 * math.pi**2)

    def integrand(r: np.ndarray) -> np.ndarray:
        return prefactor * r * r * _sharp_cutoff_kernel(cutoff * r) * np.exp(-r * r / (2.0 * w * w))

    return float(integrate_panels(integrand, breaks, spec, what="nascent-delta pairing").value.real)


def nw_delta_closed_form(w: float, cutoff: float) -> float:
    """Momentum-side value of nw_delta_smeared.

    (2pi)^(-3/2) w^3 4pi int_0^P p^2 e^{-a p^2} dp with a = w^2/2.
    """
    a = 0.5 * w * w
    inner = math.sqrt(math.pi) / (4.0 * a**1.5) * math.erf(cutoff * math.sqrt(a)) - cutoff * math.exp(
        -a * cutoff**2
    ) / (2.0 * a)
    return (2.0 * math.pi) ** -1.5 * w**3 * 4.0 * math.pi * inner


def write_radial_profile_csv(path: str | Path, r: np.ndarray, values: np.ndarray) -> Path:
    """Radial profile CSV: r,re,im,abs2."""
    rows = ((ri, v.real, v.imag, abs(v) ** 2) for ri, v in zip(r, np.asarray(values, dtype=complex)))
    return write_csv(path, ["r", "re", "im", "abs2"], rows)


def write_cylindrical_profile_csv(
    path: str | Path, x_perp: np.ndarray, x_par: np.ndarray, values: np.ndarray
) -> Path:
    """Axisymmetric profile CSV: x_perp,x_par,re,im,abs2, x_perp index outermost."""
    values = np.asarray(values, dtype=complex)
    rows = (
        (xt, xz, values[i, j].real, values[i, j].imag, abs(values[i, j]) ** 2)
        for i, xt in enumerate(x_perp)
        for j, xz in enumerate(x_par)
    )
    return write_csv(path, ["x_perp", "x_par", "re", "im", "abs2"], rows)
