#!/usr/bin/env python3
"""Lorentz contraction of a boosted Gaussian wavepacket.

A Gaussian of momentum width sigma_p boosted by beta0 along the z axis has, at
t = 0 and for sigma_p / (m beta0) << 1, the normalized position amplitude

    psi'(x) = gamma0^(1/2) (2 pi sigma_x^2)^(-3/4) e^{i m gamma0 beta0 x_par}
              e^{-x_perp^2 / 4 sigma_x^2} e^{-gamma0^2 x_par^2 / 4 sigma_x^2},

contracted along the boost by 1/gamma0. The exact amplitude is evaluated by
quadrature and compared with this closed form.
"""
from __future__ import annotations

import math
import typing
from dataclasses import asdict
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from compton_width.checks import CheckLog
from compton_width.constants import CheckCode
from compton_width.constants import DEFAULT_GRID_POINTS
from compton_width.constants import DEFAULT_SPAN_WIDTHS
from compton_width.constants import NORM_SPAN_WIDTHS
from compton_width.constants import VALIDITY_LIMIT
from compton_width.constants import VALIDITY_WARN
from compton_width.exception import DomainError
from compton_width.exception import ValidityError
from compton_width.quadrature import composite_gauss_legendre
from compton_width.quadrature import momentum_integral
from compton_width.quadrature import QuadratureSpec
from compton_width.states import axis_frame
from compton_width.states import boost_amplitude
from compton_width.states import BoostParams
from compton_width.states import GaussianAmplitude
from compton_width.states import make_gaussian
from compton_width.states import MomentumAmplitude
from compton_width.states import Particle
from compton_width.states import ScalarMomentumAmplitude
from compton_width.transforms import cylindrical_profile
from compton_width.transforms import position_amplitude
from compton_width.transforms import PositionSample
from compton_width.transforms import scalar_amplitude
from compton_width.transforms import scalar_cylindrical_profile

# pylint: disable=too-many-arguments
# pylint: disable=too-many-locals


@dataclass(frozen=True)
class ContractionReport:
    """Widths of the boosted packet against the contraction prediction."""

    sigma_x_unboosted: float
    predicted_parallel: float
    measured_parallel: float
    measured_perp: float
    validity_ratio: float
    max_pointwise_rel_err: float

    def __post_init__(self) -> None:
        widths = (
            self.sigma_x_unboosted,
            self.predicted_parallel,
            self.measured_parallel,
            self.measured_perp,
        )
        if not all(w > 0 for w in widths) or not self.validity_ratio > 0:
            raise DomainError(f"Invalid contraction report {self}")

    @property
    def parallel_deviation(self) -> float:
        """Relative deviation of the measured parallel width from sigma_x/gamma0."""
        return self.measured_parallel / self.predicted_parallel - 1.0

    @property
    def perp_deviation(self) -> float:
        """Relative deviation of the perpendicular width from sigma_x."""
        return self.measured_perp / self.sigma_x_unboosted - 1.0

    def to_dict(self) -> dict:
        """JSON representation (the six report fields)."""
        return asdict(self)


@dataclass(frozen=True)
class WidthMeasurement:
    """Second-moment widths of a density about the symmetry axis."""

    sigma_perp: float
    sigma_par: float
    norm: float
    mean_par: float

    def to_dict(self) -> dict:
        """{sigma_perp, sigma_par, norm, mean_par}."""
        return asdict(self)


@dataclass(frozen=True, eq=False)
class MeasurementGrid:
    """Sampling grid for width measurements.

    Cylindrical grids have x_perp >= 0 and the measure 2 pi x_perp; planar grids
    treat both coordinates as Cartesian with unit weight. Uniform grids are
    integrated with Simpson's rule, grids with ``weights`` by those weights.
    """

    x_perp: np.ndarray
    x_par: np.ndarray
    cylindrical: bool = True
    weights: typing.Optional[typing.Tuple[np.ndarray, np.ndarray]] = None

    def __post_init__(self) -> None:
        x_perp = np.asarray(self.x_perp, dtype=float)
        x_par = np.asarray(self.x_par, dtype=float)
        if x_perp.ndim != 1 or x_par.ndim != 1 or len(x_perp) < 3 or len(x_par) < 3:
            raise DomainError("measurement grid needs at least 3 points per axis")
        if self.cylindrical and x_perp[0] < 0:
            raise DomainError("cylindrical grid needs x_perp >= 0")
        object.__setattr__(self, "x_perp", x_perp)
        object.__setattr__(self, "x_par", x_par)

    @classmethod
    def gauss(
        cls,
        sigma_perp: float,
        sigma_par: float,
        *,
        span_widths: float = NORM_SPAN_WIDTHS,
        panels: int = 8,
        center_par: float = 0.0,
    ) -> MeasurementGrid:
        """Cylindrical grid of composite Gauss-Legendre nodes, for spectral accuracy."""
        if not (sigma_perp > 0 and sigma_par > 0 and span_widths > 0):
            raise DomainError("grid widths and span must be positive")
        x_perp, w_perp = composite_gauss_legendre(
            np.linspace(0.0, span_widths * sigma_perp, panels + 1)
        )
        x_par, w_par = composite_gauss_legendre(
            center_par + np.linspace(-1.0, 1.0, 2 * panels + 1) * span_widths * sigma_par
        )
        return cls(x_perp, x_par, weights=(w_perp, w_par))

    @classmethod
    def around(
        cls,
        sigma_perp: float,
        sigma_par: float,
        *,
        points: int = DEFAULT_GRID_POINTS,
        span_widths: float = DEFAULT_SPAN_WIDTHS,
        center_par: float = 0.0,
    ) -> MeasurementGrid:
        """Cylindrical grid spanning ``span_widths`` predicted widths per axis."""
        if not (sigma_perp > 0 and sigma_par > 0 and span_widths > 0):
            raise DomainError("grid widths and span must be positive")
        return cls(
            np.linspace(0.0, span_widths * sigma_perp, points),
            np.linspace(
                center_par - span_widths * sigma_par,
                center_par + span_widths * sigma_par,
                points,
            ),
        )

    @classmethod
    def planar(
        cls, half_width_perp: float, half_width_par: float, points: int = DEFAULT_GRID_POINTS
    ) -> MeasurementGrid:
        """Symmetric Cartesian grid."""
        return cls(
            np.linspace(-half_width_perp, half_width_perp, points),
            np.linspace(-half_width_par, half_width_par, points),
            cylindrical=False,
        )

    def integrate(self, density: np.ndarray) -> float:
        """Integral of a density sampled on the grid (shape (n_perp, n_par))."""
        density = np.asarray(density)
        if self.cylindrical:
            density = 2.0 * math.pi * self.x_perp[:, None] * density
        if self.weights is not None:
            w_perp, w_par = self.weights
            return float(w_perp @ density @ w_par)
        return float(simpson(simpson(density, x=self.x_par, axis=1), x=self.x_perp))

    def widths(self, density: np.ndarray) -> WidthMeasurement:
        """Second central moments of a sampled density, normalized by its integral."""
        density = np.asarray(density, dtype=float)
        if density.shape != (len(self.x_perp), len(self.x_par)):
            raise DomainError(f"density shape {density.shape} does not match the grid")
        norm = self.integrate(density)
        if not norm > 0:
            raise DomainError(f"density is not normalizable on the grid (integral {norm})")

        x_perp, x_par = self.x_perp[:, None], self.x_par[None, :]
        mean_par = self.integrate(x_par * density) / norm
        var_par = self.integrate((x_par - mean_par) ** 2 * density) / norm
        if self.cylindrical:
            # <x_perp^2> covers two Cartesian axes
            var_perp = self.integrate(x_perp**2 * density) / norm / 2.0
        else:
            mean_perp = self.integrate(x_perp * density) / norm
            var_perp = self.integrate((x_perp - mean_perp) ** 2 * density) / norm
        return WidthMeasurement(math.sqrt(var_perp), math.sqrt(var_par), norm, mean_par)


def measure_widths(
    abs2_sampler: typing.Callable[[np.ndarray, np.ndarray], np.ndarray],
    grid: MeasurementGrid,
) -> WidthMeasurement:
    """Widths of the density ``abs2_sampler(x_perp, x_par)`` on ``grid``."""
    density = abs2_sampler(grid.x_perp[:, None], grid.x_par[None, :])
    density = np.broadcast_to(density, (len(grid.x_perp), len(grid.x_par)))
    return grid.widths(density)


def validity_ratio(particle: Particle, sigma_p: float, beta0: float) -> float:
    """sigma_p / (m beta0); inf for beta0 = 0."""
    if beta0 == 0.0:
        return math.inf
    return sigma_p / (particle.mass * abs(beta0))


def _cartesian(boost: BoostParams, x_perp: float, x_par: float) -> np.ndarray:
    n, e1 = axis_frame(boost.axis)
    return x_par * n + x_perp * e1


def _require_gaussian(psi: MomentumAmplitude) -> GaussianAmplitude:
    if not isinstance(psi, GaussianAmplitude):
        raise DomainError(f"boosts are supported for Gaussian packets only, got {psi!r}")
    return psi


def boosted_position_exact(
    psi: MomentumAmplitude,
    boost: BoostParams,
    x_perp: float,
    x_par: float,
    spec: typing.Optional[QuadratureSpec] = None,
) -> PositionSample:
    """Position amplitude at t = 0 of the boosted packet, by axisymmetric quadrature.

    Uses the exact slow factor sqrt(gamma0 (1 - beta0.beta)) and the exact
    Lambda^-1 argument.
    """
    boosted = boost_amplitude(_require_gaussian(psi), boost)
    return position_amplitude(boosted, 0.0, _cartesian(boost, x_perp, x_par), spec)


def gaussian_contracted(
    sigma_x: float,
    mass: float,
    beta0: float,
    x_perp: np.ndarray,
    x_par: np.ndarray,
) -> np.ndarray:
    """Closed-form contracted amplitude on arrays (broadcast x_perp against x_par)."""
    gamma = 1.0 / math.sqrt(1.0 - beta0 * beta0)
    x_perp = np.asarray(x_perp, dtype=float)
    x_par = np.asarray(x_par, dtype=float)
    prefactor = math.sqrt(gamma) * (2.0 * math.pi * sigma_x**2) ** -0.75
    envelope = np.exp(-(x_perp**2 + gamma**2 * x_par**2) / (4.0 * sigma_x**2))
    return prefactor * envelope * np.exp(1j * mass * gamma * beta0 * x_par)


def boosted_position_gaussian(
    psi: MomentumAmplitude, boost: BoostParams, x_perp: float, x_par: float
) -> PositionSample:
    """Closed-form boosted amplitude: widths sigma_x (perpendicular) and sigma_x/gamma0."""
    gaussian = _require_gaussian(psi)
    value = gaussian_contracted(
        gaussian.sigma_x, gaussian.particle.mass, boost.speed, x_perp, x_par
    )
    return PositionSample(0.0, _cartesian(boost, x_perp, x_par), complex(value), 0.0)


def boosted_scalar_gaussian(
    psi: MomentumAmplitude, boost: BoostParams, x_perp: float, x_par: float
) -> PositionSample:
    """Closed-form boosted scalar amplitude: the contracted Gaussian times 1/(m gamma0)."""
    sample = boosted_position_gaussian(psi, boost, x_perp, x_par)
    factor = 1.0 / (psi.particle.mass * boost.gamma0)
    return PositionSample(sample.t, sample.x, sample.value * factor, 0.0)


def _weighted_scalar(boosted: MomentumAmplitude) -> ScalarMomentumAmplitude:
    # Phi = Psi' so that the scalar transform carries the bare 1/omega weight
    return ScalarMomentumAmplitude(
        boosted.particle,
        boosted.evaluate,
        1.0,
        window=boosted.window,
        momentum_scale=boosted.momentum_scale,
        axis=boosted.axis,
        check_norm=False,
    )


def boosted_scalar_exact(
    psi: MomentumAmplitude,
    boost: BoostParams,
    x_perp: float,
    x_par: float,
    spec: typing.Optional[QuadratureSpec] = None,
) -> PositionSample:
    """(2pi)^(-3/2) int (d3p/omega) e^{ip.x} Psi'(p) by axisymmetric quadrature."""
    boosted = boost_amplitude(_require_gaussian(psi), boost)
    return scalar_amplitude(
        _weighted_scalar(boosted), 0.0, _cartesian(boost, x_perp, x_par), spec
    )


def boosted_momentum_quadratic(
    psi: MomentumAmplitude,
    boost: BoostParams,
    p_perp: np.ndarray,
    p_par: np.ndarray,
) -> np.ndarray:
    """Boosted Gaussian with |Lambda^-1 p|^2 expanded to second order and omega'/omega -> 1/gamma0.

    |p'|^2 ~ p_perp^2 + (p_par - m gamma0 beta0)^2 / gamma0^2.
    """
    gaussian = _require_gaussian(psi)
    sigma_p, m = gaussian.sigma_p, gaussian.particle.mass
    gamma, beta = boost.gamma0, boost.speed
    p_sq = quadratic_exponent(m, beta, np.asarray(p_perp), np.asarray(p_par))
    prefactor = (2.0 * math.pi * sigma_p**2) ** -0.75 / math.sqrt(gamma)
    return (prefactor * np.exp(-p_sq / (4.0 * sigma_p**2))).astype(complex)


def quadratic_exponent(
    mass: float, beta0: float, p_perp: np.ndarray, p_par: np.ndarray
) -> np.ndarray:
    """Second-order expansion of |Lambda^-1 p|^2 about p = m gamma0 beta0."""
    gamma = 1.0 / math.sqrt(1.0 - beta0 * beta0)
    return p_perp**2 + (p_par - mass * gamma * beta0) ** 2 / gamma**2


def exact_exponent(
    mass: float, beta0: float, p_perp: np.ndarray, p_par: np.ndarray
) -> np.ndarray:
    """|Lambda^-1 p|^2 for a boost by beta0 along the axis."""
    gamma = 1.0 / math.sqrt(1.0 - beta0 * beta0)
    omega = np.sqrt(p_perp**2 + p_par**2 + mass**2)
    return p_perp**2 + gamma**2 * (p_par - beta0 * omega) ** 2


def exponent_expansion_error(
    psi: MomentumAmplitude, boost: BoostParams, widths: float = 4.0, points: int = 65
) -> float:
    """Largest error of the quadratic exponent, in units of 4 sigma_p^2.

    Sampled on the momentum box of ``widths`` boosted widths about the peak.
    """
    gaussian = _require_gaussian(psi)
    sigma_p, m = gaussian.sigma_p, gaussian.particle.mass
    gamma, beta = boost.gamma0, boost.speed
    p_perp = np.linspace(0.0, widths * sigma_p, points)[:, None]
    p_par = (m * gamma * beta + np.linspace(-1.0, 1.0, points) * widths * gamma * sigma_p)[None, :]
    error = exact_exponent(m, beta, p_perp, p_par) - quadratic_exponent(m, beta, p_perp, p_par)
    return float(np.max(np.abs(error)) / (4.0 * sigma_p**2))


def grid_profile(
    psi: MomentumAmplitude,
    boost: BoostParams,
    x_perp: np.ndarray,
    x_par: np.ndarray,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    scalar: bool = False,
) -> np.ndarray:
    """Exact boosted amplitude on the tensor grid (x_perp, x_par) about the boost axis.

    With ``scalar`` the 1/omega weighted scalar amplitude is returned instead.
    """
    boosted = boost_amplitude(_require_gaussian(psi), boost)
    if scalar:
        values, _ = scalar_cylindrical_profile(_weighted_scalar(boosted), 0.0, x_perp, x_par, spec)
    else:
        values, _ = cylindrical_profile(boosted, 0.0, x_perp, x_par, spec)
    return values


def carrier_wavenumber(
    psi: MomentumAmplitude,
    boost: BoostParams,
    spec: typing.Optional[QuadratureSpec] = None,
) -> float:
    """Wavenumber of the exact boosted amplitude along the boost axis.

    Phase slope of psi'(0, x_par) over one contracted width about the center.
    """
    gaussian = _require_gaussian(psi)
    if boost.axis is None:
        return 0.0
    half = gaussian.sigma_x / boost.gamma0
    expected = gaussian.particle.mass * boost.gamma0 * boost.speed
    # at least two samples per radian of the expected carrier
    n = max(33, int(math.ceil(2.0 * half * expected / 0.5)) + 1)
    x_par = np.linspace(-half, half, n)
    values = grid_profile(gaussian, boost, np.array([0.0]), x_par, spec)[0]
    phase = np.unwrap(np.angle(values))
    slope, _ = np.polyfit(x_par, phase, 1)
    return float(slope)


def scalar_norms(
    psi: MomentumAmplitude,
    boost: BoostParams,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[float, float]:
    """Position-space L2 norms of the scalar amplitude before and after the boost.

    By Parseval int d3x |phi|^2 = int d3p |Psi|^2 / omega^2.
    """
    psi = _require_gaussian(psi)
    boosted = boost_amplitude(psi, boost)
    norms = []
    for amplitude in (psi, boosted):
        n, e1 = amplitude.frame()

        def integrand(pt: np.ndarray, pz: np.ndarray, amplitude=amplitude, n=n, e1=e1) -> np.ndarray:
            p = pz[..., None] * n + pt[..., None] * e1
            return np.abs(amplitude.evaluate(p)) ** 2 / amplitude.particle.omega(p) ** 2

        norms.append(float(np.real(momentum_integral(integrand, amplitude.window, spec))))
    return norms[0], norms[1]


def max_pointwise_rel_err(exact: np.ndarray, approx: np.ndarray) -> float:
    """max |exact - approx| relative to the peak of |approx|."""
    peak = float(np.max(np.abs(approx)))
    if not peak > 0:
        raise DomainError("approximate profile vanishes on the grid")
    return float(np.max(np.abs(np.asarray(exact) - np.asarray(approx))) / peak)


@dataclass(frozen=True, eq=False)
class ContractionRun:
    """Report of a contraction experiment with the profiles it measured."""

    report: ContractionReport
    grid: MeasurementGrid
    exact: np.ndarray
    approx: np.ndarray
    gamma0: float
    checks: CheckLog


def check_validity(
    particle: Particle, sigma_p: float, beta0: float, checks: typing.Optional[CheckLog] = None
) -> float:
    """Validity ratio of the boosted-Gaussian expansion; refuses the non-small regime."""
    ratio = validity_ratio(particle, sigma_p, beta0)
    if beta0 == 0.0:
        raise ValidityError(
            "The contraction experiment needs a non-zero boost: the small sigma_p/(m beta0) "
            "regime of the quadratic momentum expansion is undefined at beta0 = 0",
            validity_ratio=ratio,
        )
    if ratio >= VALIDITY_LIMIT:
        raise ValidityError(
            f"Validity ratio sigma_p/(m beta0) = {ratio:.4g} is not below {VALIDITY_LIMIT}: "
            "outside the small sigma_p/(m beta0) regime of the quadratic momentum expansion",
            validity_ratio=ratio,
        )
    if ratio > VALIDITY_WARN and checks is not None:
        checks.warn(
            CheckCode.VALID_RATIO_HIGH,
            details=f"sigma_p/(m beta0) = {ratio:.4g} exceeds {VALIDITY_WARN}",
        )
    return ratio


def run_contraction(
    particle: Particle,
    sigma_p: float,
    beta0: float,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    grid_points: int = DEFAULT_GRID_POINTS,
    span_widths: float = DEFAULT_SPAN_WIDTHS,
    checks: typing.Optional[CheckLog] = None,
) -> ContractionRun:
    """Exact and closed-form boosted profiles on a common grid, with widths."""
    checks = checks if checks is not None else CheckLog("boost", silent=True)
    ratio = check_validity(particle, sigma_p, beta0, checks)

    psi = make_gaussian(particle, sigma_p)
    boost = BoostParams.along(beta0)
    sigma_x, gamma = psi.sigma_x, boost.gamma0
    predicted = sigma_x / gamma
    grid = MeasurementGrid.around(
        sigma_x, predicted, points=grid_points, span_widths=span_widths
    )

    exact = grid_profile(psi, boost, grid.x_perp, grid.x_par, spec)
    approx = gaussian_contracted(
        sigma_x, particle.mass, boost.speed, grid.x_perp[:, None], grid.x_par[None, :]
    )
    widths = grid.widths(np.abs(exact) ** 2)
    report = ContractionReport(
        sigma_x_unboosted=sigma_x,
        predicted_parallel=predicted,
        measured_parallel=widths.sigma_par,
        measured_perp=widths.sigma_perp,
        validity_ratio=ratio,
        max_pointwise_rel_err=max_pointwise_rel_err(exact, approx),
    )
    return ContractionRun(report, grid, exact, approx, gamma, checks)


def contraction_experiment(
    particle: Particle,
    sigma_p: float,
    beta0: float,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    grid_points: int = DEFAULT_GRID_POINTS,
    span_widths: float = DEFAULT_SPAN_WIDTHS,
    checks: typing.Optional[CheckLog] = None,
) -> ContractionReport:
    """Measure the parallel and perpendicular widths of the boosted packet."""
    return run_contraction(
        particle,
        sigma_p,
        beta0,
        spec,
        grid_points=grid_points,
        span_widths=span_widths,
        checks=checks,
    ).report
