#!/usr/bin/env python3
"""Momentum-space states: particles, boosts and momentum probability amplitudes.

Conventions: natural units (hbar = c = 1), metric signature (+,-,-,-), so that
e^{-i p.x} = e^{-i omega t + i p.x}. Amplitudes take momenta as arrays of shape
(..., 3) and return complex arrays of shape (...).
"""
from __future__ import annotations

import math
import typing
from abc import ABC
from abc import abstractmethod
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.interpolate import CubicHermiteSpline
from scipy.interpolate import CubicSpline

from compton_width.constants import AmplitudeKind
from compton_width.constants import GAUSSIAN_SUPPORT_WIDTHS
from compton_width.constants import NORM_TOLERANCE
from compton_width.exception import DomainError
from compton_width.exception import NormalizationError
from compton_width.exception import UnsupportedGeometryError
from compton_width.quadrature import integrate_adaptive
from compton_width.quadrature import momentum_integral
from compton_width.quadrature import MomentumWindow
from compton_width.quadrature import QuadratureSpec
from compton_width.utils import read_tabulated_csv

# pylint: disable=too-many-arguments

Z_AXIS = np.array([0.0, 0.0, 1.0])

_PARALLEL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Particle:
    """Spinless particle of mass m; lambda_C = 1/m is the Compton wavelength."""

    mass: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise DomainError(f"mass must be positive, got {self.mass}")

    @property
    def lambda_c(self) -> float:
        """Compton wavelength."""
        return 1.0 / self.mass

    def omega(self, p: np.ndarray) -> np.ndarray:
        """Energy sqrt(p^2 + m^2) of momenta of shape (..., 3)."""
        p = np.asarray(p, dtype=float)
        return np.sqrt(np.sum(p * p, axis=-1) + self.mass**2)


@dataclass(frozen=True, eq=False)
class MomentumPoint:
    """On-shell momentum with its energy and velocity."""

    p: np.ndarray
    omega: float
    beta: np.ndarray

    @classmethod
    def on_shell(cls, p: typing.Sequence[float], particle: Particle) -> MomentumPoint:
        """Momentum point with omega = sqrt(p^2 + m^2)."""
        p = np.asarray(p, dtype=float)
        if p.shape != (3,) or not np.all(np.isfinite(p)):
            raise DomainError(f"momentum must be a finite 3-vector, got {p}")
        omega = float(particle.omega(p))
        return cls(p, omega, p / omega)

    @property
    def mass(self) -> float:
        """Invariant mass sqrt(omega^2 - p^2)."""
        return math.sqrt(max(self.omega**2 - float(self.p @ self.p), 0.0))


@dataclass(frozen=True, eq=False)
class BoostParams:
    """Pure boost by velocity beta0 (|beta0| < 1)."""

    beta0: np.ndarray

    def __post_init__(self) -> None:
        beta0 = np.asarray(self.beta0, dtype=float)
        if beta0.shape != (3,) or not np.all(np.isfinite(beta0)):
            raise DomainError(f"beta0 must be a finite 3-vector, got {self.beta0}")
        if float(beta0 @ beta0) >= 1.0:
            raise DomainError(f"|beta0| must be below 1, got {np.linalg.norm(beta0)}")
        object.__setattr__(self, "beta0", beta0)

    @classmethod
    def along(
        cls, beta: float, axis: typing.Sequence[float] = (0.0, 0.0, 1.0)
    ) -> BoostParams:
        """Boost with speed |beta| along ``axis`` (negative beta reverses it)."""
        axis = np.asarray(axis, dtype=float)
        return cls(beta * axis / np.linalg.norm(axis))

    @property
    def speed(self) -> float:
        """|beta0|."""
        return float(np.linalg.norm(self.beta0))

    @property
    def gamma0(self) -> float:
        """Lorentz factor 1/sqrt(1 - beta0^2)."""
        return 1.0 / math.sqrt(1.0 - float(self.beta0 @ self.beta0))

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        """Unit vector along beta0, None for the identity boost."""
        speed = self.speed
        return None if speed == 0.0 else self.beta0 / speed

    def inverse(self) -> BoostParams:
        """Boost by -beta0."""
        return BoostParams(-self.beta0)

    def inverse_map(
        self, p: np.ndarray, omega: np.ndarray
    ) -> typing.Tuple[np.ndarray, np.ndarray]:
        """Lambda^-1: p'_perp = p_perp, p'_par = g(p_par - b omega), omega' = g(omega - b p_par)."""
        axis = self.axis
        if axis is None:
            return p, omega
        beta, gamma = self.speed, self.gamma0
        p_par = p @ axis
        p_prime = p + ((gamma - 1.0) * p_par - gamma * beta * omega)[..., None] * axis
        return p_prime, gamma * (omega - beta * p_par)


def lorentz_inverse_map(point: MomentumPoint, boost: BoostParams) -> MomentumPoint:
    """Apply Lambda^-1 of ``boost`` to an on-shell momentum."""
    p_prime, omega_prime = boost.inverse_map(point.p, np.asarray(point.omega))
    omega_prime = float(omega_prime)
    return MomentumPoint(np.asarray(p_prime, dtype=float), omega_prime, p_prime / omega_prime)


def axis_frame(axis: typing.Optional[np.ndarray]) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Axis and a unit vector perpendicular to it."""
    n = Z_AXIS if axis is None else axis
    helper = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = helper - (helper @ n) * n
    return n, e1 / np.linalg.norm(e1)


def common_axis(
    *axes: typing.Optional[np.ndarray],
) -> typing.Optional[np.ndarray]:
    """Shared symmetry axis of several amplitudes (None if all are isotropic)."""
    result: typing.Optional[np.ndarray] = None
    for axis in axes:
        if axis is None:
            continue
        if result is None:
            result = axis
        elif abs(abs(float(result @ axis)) - 1.0) > _PARALLEL_TOLERANCE:
            raise UnsupportedGeometryError(
                f"Amplitudes have no common symmetry axis ({result} vs {axis})"
            )
    return result


def _unit(vector: np.ndarray) -> typing.Optional[np.ndarray]:
    norm = float(np.linalg.norm(vector))
    return None if norm == 0.0 else vector / norm


def finite_difference_gradient(
    func: typing.Callable[[np.ndarray], np.ndarray], p: np.ndarray, step: float
) -> np.ndarray:
    """Central differences refined by one Richardson step (error O(h^4))."""
    p = np.asarray(p, dtype=float)
    grad = np.empty(p.shape, dtype=complex)
    for i in range(3):
        shift = np.zeros(3)
        shift[i] = step
        coarse = (func(p + shift) - func(p - shift)) / (2.0 * step)
        fine = (func(p + 0.5 * shift) - func(p - 0.5 * shift)) / step
        grad[..., i] = (4.0 * fine - coarse) / 3.0
    return grad


class MomentumAmplitude(ABC):
    """Normalized momentum probability amplitude Psi(p), int d3p |Psi|^2 = 1.

    Every amplitude is symmetric about an axis (``axis``, None when isotropic)
    and negligible outside ``window``, given in cylindrical coordinates about
    that axis.
    """

    kind: AmplitudeKind

    def __init__(self, particle: Particle) -> None:
        self.particle = particle

    @abstractmethod
    def evaluate(self, p: np.ndarray) -> np.ndarray:
        """Psi at momenta of shape (..., 3)."""

    @property
    @abstractmethod
    def axis(self) -> typing.Optional[np.ndarray]:
        """Symmetry axis (unit vector) or None."""

    @property
    @abstractmethod
    def window(self) -> MomentumWindow:
        """Support of the amplitude about its axis."""

    @property
    @abstractmethod
    def momentum_scale(self) -> float:
        """Momentum width used for finite-difference steps."""

    @property
    def is_isotropic(self) -> bool:
        """Psi depends on |p| only."""
        return False

    def __call__(self, p: np.ndarray) -> np.ndarray:
        return self.evaluate(p)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        """dPsi/dp of shape (..., 3); finite differences unless overridden."""
        return finite_difference_gradient(self.evaluate, p, 1e-4 * self.momentum_scale)

    def frame(self) -> typing.Tuple[np.ndarray, np.ndarray]:
        """Symmetry axis (z for isotropic states) and a perpendicular unit vector."""
        return axis_frame(self.axis)

    def cylindrical(self, p_perp: np.ndarray, p_par: np.ndarray) -> np.ndarray:
        """Psi at cylindrical momentum coordinates about the symmetry axis."""
        n, e1 = self.frame()
        p = np.asarray(p_par)[..., None] * n + np.asarray(p_perp)[..., None] * e1
        return self.evaluate(p)

    def norm(self, spec: typing.Optional[QuadratureSpec] = None) -> float:
        """int d3p |Psi|^2."""
        value = momentum_integral(
            lambda pt, pz: np.abs(self.cylindrical(pt, pz)) ** 2, self.window, spec
        )
        return float(np.real(value))

    def _check_norm(self) -> None:
        norm = self.norm()
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise NormalizationError(f"{self.kind.value} amplitude is not normalized", norm=norm)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(kind={self.kind.value}, m={self.particle.mass})"


class GaussianAmplitude(MomentumAmplitude):
    """Psi(p) = exp(-|p|^2 / 4 sigma_p^2) / (2 pi sigma_p^2)^(3/4)."""

    kind = AmplitudeKind.ISOTROPIC_GAUSSIAN

    def __init__(self, particle: Particle, sigma_p: float) -> None:
        super().__init__(particle)
        if not (math.isfinite(sigma_p) and sigma_p > 0):
            raise DomainError(f"sigma_p must be positive, got {sigma_p}")
        self.sigma_p = float(sigma_p)
        self._prefactor = (2.0 * math.pi * sigma_p**2) ** -0.75
        self._check_norm()

    @property
    def sigma_x(self) -> float:
        """Position width 1/(2 sigma_p)."""
        return 0.5 / self.sigma_p

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return None

    @property
    def is_isotropic(self) -> bool:
        return True

    @property
    def window(self) -> MomentumWindow:
        return MomentumWindow.ball(GAUSSIAN_SUPPORT_WIDTHS * self.sigma_p)

    @property
    def momentum_scale(self) -> float:
        return self.sigma_p

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        p_sq = np.sum(p * p, axis=-1)
        return (self._prefactor * np.exp(-p_sq / (4.0 * self.sigma_p**2))).astype(complex)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return -p / (2.0 * self.sigma_p**2) * self.evaluate(p)[..., None]


class BoostedAmplitude(MomentumAmplitude):
    """Psi'(p) = sqrt(gamma0 (1 - beta0.beta)) Psi(Lambda^-1 p), beta = p/omega.

    gamma0 (1 - beta0.beta) equals omega'/omega with omega' the energy of Lambda^-1 p.
    """

    kind = AmplitudeKind.BOOSTED

    def __init__(self, inner: MomentumAmplitude, boost: BoostParams) -> None:
        super().__init__(inner.particle)
        self.inner = inner
        self.boost = boost
        self._axis = common_axis(inner.axis, boost.axis)
        self._check_norm()

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return self._axis

    @property
    def momentum_scale(self) -> float:
        return self.inner.momentum_scale

    @property
    def window(self) -> MomentumWindow:
        inner = self.inner.window
        n, _ = self.frame()
        # signed speed along our axis; the inner window uses the same axis
        beta = float(self.boost.beta0 @ n)
        gamma, m = self.boost.gamma0, self.particle.mass
        corners = [
            gamma * (p_par + beta * math.sqrt(p_par**2 + p_perp**2 + m**2))
            for p_par in inner.par
            for p_perp in inner.perp
        ]
        return MomentumWindow(inner.perp, (min(corners), max(corners)))

    def _slow_factor(
        self, p: np.ndarray
    ) -> typing.Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        omega = self.particle.omega(p)
        p_prime, omega_prime = self.boost.inverse_map(p, omega)
        return np.sqrt(omega_prime / omega), p_prime, omega, omega_prime

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        factor, p_prime, _, _ = self._slow_factor(p)
        return factor * self.inner.evaluate(p_prime)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        factor, p_prime, omega, omega_prime = self._slow_factor(p)
        inner_value = self.inner.evaluate(p_prime)
        inner_grad = self.inner.gradient(p_prime)
        axis = self.boost.axis
        if axis is None:
            return inner_grad

        beta, gamma = self.boost.speed, self.boost.gamma0
        # chain rule through dp'_j/dp_i = delta_ij + (g-1) n_j n_i - g b n_j p_i / omega
        along = inner_grad @ axis
        chained = (
            inner_grad
            + (gamma - 1.0) * along[..., None] * axis
            - gamma * beta * along[..., None] * p / omega[..., None]
        )
        # d(omega'/omega)/dp_i = g (p_i/omega - b n_i) / omega - omega' p_i / omega^3
        d_ratio = (
            gamma * (p / omega[..., None] - beta * axis) / omega[..., None]
            - (omega_prime / omega**3)[..., None] * p
        )
        d_factor = d_ratio / (2.0 * factor[..., None])
        return d_factor * inner_value[..., None] + factor[..., None] * chained


class PhaseShiftedAmplitude(MomentumAmplitude):
    """Psi(p) e^{-i p.a}: the same state translated by a in position space."""

    kind = AmplitudeKind.PHASE_SHIFTED

    def __init__(self, inner: MomentumAmplitude, a: typing.Sequence[float]) -> None:
        super().__init__(inner.particle)
        self.inner = inner
        self.a = np.asarray(a, dtype=float)
        if self.a.shape != (3,):
            raise DomainError(f"shift must be a 3-vector, got {a}")
        self._axis = common_axis(inner.axis, _unit(self.a))
        self._check_norm()

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return self._axis

    @property
    def window(self) -> MomentumWindow:
        return self.inner.window

    @property
    def momentum_scale(self) -> float:
        return self.inner.momentum_scale

    @property
    def is_isotropic(self) -> bool:
        return self.inner.is_isotropic and not np.any(self.a)

    def _phase(self, p: np.ndarray) -> np.ndarray:
        return np.exp(-1j * (p @ self.a))

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return self.inner.evaluate(p) * self._phase(p)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        inner = self.inner.evaluate(p)[..., None]
        return (self.inner.gradient(p) - 1j * self.a * inner) * self._phase(p)[..., None]


class MomentumShiftedAmplitude(MomentumAmplitude):
    """Psi(p - k): translation in momentum space."""

    kind = AmplitudeKind.MOMENTUM_SHIFTED

    def __init__(self, inner: MomentumAmplitude, k: typing.Sequence[float]) -> None:
        super().__init__(inner.particle)
        self.inner = inner
        self.k = np.asarray(k, dtype=float)
        if self.k.shape != (3,):
            raise DomainError(f"momentum shift must be a 3-vector, got {k}")
        self._axis = common_axis(inner.axis, _unit(self.k))
        self._check_norm()

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return self._axis

    @property
    def window(self) -> MomentumWindow:
        n, _ = self.frame()
        shift = float(self.k @ n)
        inner = self.inner.window
        return MomentumWindow(inner.perp, (inner.par[0] + shift, inner.par[1] + shift))

    @property
    def momentum_scale(self) -> float:
        return self.inner.momentum_scale

    @property
    def is_isotropic(self) -> bool:
        return self.inner.is_isotropic and not np.any(self.k)

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        return self.inner.evaluate(np.asarray(p, dtype=float) - self.k)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        return self.inner.gradient(np.asarray(p, dtype=float) - self.k)


class GlobalPhaseAmplitude(MomentumAmplitude):
    """e^{i theta} Psi(p)."""

    kind = AmplitudeKind.GLOBAL_PHASE

    def __init__(self, inner: MomentumAmplitude, theta: float) -> None:
        super().__init__(inner.particle)
        self.inner = inner
        self.theta = float(theta)
        self._phase = complex(math.cos(theta), math.sin(theta))
        self._check_norm()

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return self.inner.axis

    @property
    def window(self) -> MomentumWindow:
        return self.inner.window

    @property
    def momentum_scale(self) -> float:
        return self.inner.momentum_scale

    @property
    def is_isotropic(self) -> bool:
        return self.inner.is_isotropic

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        return self._phase * self.inner.evaluate(p)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        return self._phase * self.inner.gradient(p)


class TimePhaseAmplitude(MomentumAmplitude):
    """Psi(p) e^{-i omega t}: free evolution folded into the amplitude."""

    kind = AmplitudeKind.TIME_PHASE

    def __init__(self, inner: MomentumAmplitude, t: float) -> None:
        super().__init__(inner.particle)
        if not math.isfinite(t):
            raise DomainError(f"time must be finite, got {t}")
        self.inner = inner
        self.t = float(t)
        self._check_norm()

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return self.inner.axis

    @property
    def window(self) -> MomentumWindow:
        return self.inner.window

    @property
    def momentum_scale(self) -> float:
        return self.inner.momentum_scale

    @property
    def is_isotropic(self) -> bool:
        return self.inner.is_isotropic

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return self.inner.evaluate(p) * np.exp(-1j * self.particle.omega(p) * self.t)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        omega = self.particle.omega(p)
        phase = np.exp(-1j * omega * self.t)[..., None]
        inner = self.inner.evaluate(p)[..., None]
        beta = p / omega[..., None]
        return (self.inner.gradient(p) - 1j * self.t * beta * inner) * phase


class TabulatedAmplitude(MomentumAmplitude):
    """Isotropic amplitude interpolated from a table by cubic splines in log |p|.

    A node at p = 0 is joined to the first positive node by a cubic Hermite
    segment with zero slope at the origin. Momenta outside the tabulated range
    evaluate to 0.
    """

    kind = AmplitudeKind.TABULATED

    def __init__(
        self,
        particle: Particle,
        p_grid: typing.Sequence[float],
        values: typing.Sequence[complex],
        *,
        check_norm: bool = True,
    ) -> None:
        super().__init__(particle)
        p_grid = np.asarray(p_grid, dtype=float)
        values = np.asarray(values, dtype=complex)
        if p_grid.ndim != 1 or p_grid.shape != values.shape or len(p_grid) < 4:
            raise DomainError("tabulated amplitude needs matching 1D grids of >= 4 points")
        if p_grid[0] < 0 or np.any(np.diff(p_grid) <= 0):
            raise DomainError("tabulated momenta must be non-negative and strictly increasing")
        if not (np.all(np.isfinite(p_grid)) and np.all(np.isfinite(values))):
            raise DomainError("tabulated amplitude contains non-finite entries")
        self.p_grid = p_grid
        self.values = values

        positive = p_grid > 0
        self._p_first = float(p_grid[positive][0])
        parts = (values.real, values.imag)
        self._log_splines = tuple(CubicSpline(np.log(p_grid[positive]), part[positive]) for part in parts)
        self._origin: typing.Optional[typing.Tuple[CubicHermiteSpline, ...]] = None
        if p_grid[0] == 0.0:
            u_first = math.log(self._p_first)
            self._origin = tuple(
                CubicHermiteSpline(
                    [0.0, self._p_first],
                    [part[0], part[1]],
                    # d/dp = (d/du) / p
                    [0.0, float(spline(u_first, 1)) / self._p_first],
                )
                for part, spline in zip(parts, self._log_splines)
            )
        if check_norm:
            self._check_norm()

    @property
    def axis(self) -> typing.Optional[np.ndarray]:
        return None

    @property
    def is_isotropic(self) -> bool:
        return True

    @property
    def window(self) -> MomentumWindow:
        return MomentumWindow.ball(float(self.p_grid[-1]))

    @property
    def momentum_scale(self) -> float:
        return float(self.p_grid[-1]) / GAUSSIAN_SUPPORT_WIDTHS

    def radial(self, p_abs: np.ndarray) -> np.ndarray:
        """Psi as a function of |p|."""
        p_abs = np.asarray(p_abs, dtype=float)
        inside = (p_abs >= self.p_grid[0]) & (p_abs <= self.p_grid[-1])
        u = np.log(np.clip(p_abs, self._p_first, self.p_grid[-1]))
        real, imag = (spline(u) for spline in self._log_splines)
        if self._origin is not None:
            near = p_abs < self._p_first
            q = np.clip(p_abs, 0.0, self._p_first)
            real = np.where(near, self._origin[0](q), real)
            imag = np.where(near, self._origin[1](q), imag)
        return np.where(inside, real + 1j * imag, 0.0)

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return self.radial(np.sqrt(np.sum(p * p, axis=-1)))

    def norm(self, spec: typing.Optional[QuadratureSpec] = None) -> float:
        # 4 pi int p^2 |Psi|^2 with an 8-point Gauss rule per knot interval
        x, w = leggauss(8)
        left, right = self.p_grid[:-1, None], self.p_grid[1:, None]
        nodes = 0.5 * (right - left) * (x + 1.0) + left
        weights = 0.5 * (right - left) * w
        values = np.abs(self.radial(nodes)) ** 2
        return float(4.0 * math.pi * np.sum(weights * nodes**2 * values))


class ScalarMomentumAmplitude:
    """Klein-Gordon momentum amplitude Phi(p) with int (d3p/omega) |Phi|^2 = 1.

    ``probability`` is the probability amplitude Psi = Phi/sqrt(omega) when the
    scalar amplitude was built from one.
    """

    def __init__(
        self,
        particle: Particle,
        profile: typing.Callable[[np.ndarray], np.ndarray],
        norm_factor: float,
        *,
        window: MomentumWindow,
        momentum_scale: float,
        axis: typing.Optional[np.ndarray] = None,
        probability: typing.Optional[MomentumAmplitude] = None,
        check_norm: bool = True,
    ) -> None:
        if not norm_factor > 0:
            raise DomainError(f"norm_factor must be positive, got {norm_factor}")
        self.particle = particle
        self.profile = profile
        self.norm_factor = float(norm_factor)
        self.window = window
        self.momentum_scale = momentum_scale
        self.axis = axis
        self.probability = probability
        if check_norm:
            norm = self.kg_norm()
            if abs(norm - 1.0) > NORM_TOLERANCE:
                raise NormalizationError("scalar amplitude has no unit KG norm", norm=norm)

    def evaluate(self, p: np.ndarray) -> np.ndarray:
        """Phi at momenta of shape (..., 3)."""
        return self.profile(np.asarray(p, dtype=float))

    def __call__(self, p: np.ndarray) -> np.ndarray:
        return self.evaluate(p)

    def frame(self) -> typing.Tuple[np.ndarray, np.ndarray]:
        """Symmetry axis (z for isotropic profiles) and a perpendicular unit vector."""
        return axis_frame(self.axis)

    def cylindrical(self, p_perp: np.ndarray, p_par: np.ndarray) -> np.ndarray:
        """Phi at cylindrical momentum coordinates about the symmetry axis."""
        n, e1 = self.frame()
        p = np.asarray(p_par)[..., None] * n + np.asarray(p_perp)[..., None] * e1
        return self.evaluate(p)

    def gradient(self, p: np.ndarray) -> np.ndarray:
        """dPhi/dp by Richardson-refined central differences."""
        return finite_difference_gradient(self.evaluate, p, 1e-4 * self.momentum_scale)

    def kg_norm(self, spec: typing.Optional[QuadratureSpec] = None) -> float:
        """int (d3p/omega) |Phi|^2."""
        n, e1 = self.frame()

        def integrand(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
            p = pz[..., None] * n + pt[..., None] * e1
            return np.abs(self.evaluate(p)) ** 2 / self.particle.omega(p)

        return float(np.real(momentum_integral(integrand, self.window, spec)))


def make_gaussian(particle: Particle, sigma_p: float) -> GaussianAmplitude:
    """Isotropic Gaussian amplitude of momentum width sigma_p."""
    return GaussianAmplitude(particle, sigma_p)


def boost_amplitude(psi: MomentumAmplitude, boost: BoostParams) -> MomentumAmplitude:
    """Amplitude of the state boosted by ``boost``; the identity boost returns psi."""
    if boost.axis is None:
        return psi
    return BoostedAmplitude(psi, boost)


def phase_shifted(psi: MomentumAmplitude, a: typing.Sequence[float]) -> MomentumAmplitude:
    """Psi(p) e^{-i p.a}, the state translated by a."""
    return PhaseShiftedAmplitude(psi, a)


def momentum_shifted(psi: MomentumAmplitude, k: typing.Sequence[float]) -> MomentumAmplitude:
    """Psi(p - k)."""
    return MomentumShiftedAmplitude(psi, k)


def global_phase(psi: MomentumAmplitude, theta: float) -> MomentumAmplitude:
    """e^{i theta} Psi."""
    return GlobalPhaseAmplitude(psi, theta)


def make_tabulated(
    particle: Particle,
    p_grid: typing.Sequence[float],
    values: typing.Sequence[complex],
    *,
    check_norm: bool = True,
) -> TabulatedAmplitude:
    """Isotropic amplitude from tabulated |p| and complex values."""
    return TabulatedAmplitude(particle, p_grid, values, check_norm=check_norm)


def load_tabulated(path: str | Path, particle: Particle) -> TabulatedAmplitude:
    """Read a tabulated amplitude from a ``p,re,im`` CSV file."""
    p_grid, values = read_tabulated_csv(path)
    return make_tabulated(particle, p_grid, values)


def mean_energy_gaussian(
    particle: Particle, sigma_p: float, spec: typing.Optional[QuadratureSpec] = None
) -> float:
    """<omega> of the sigma_p Gaussian, 4 pi int p^2 omega |G|^2 dp."""
    if not (math.isfinite(sigma_p) and sigma_p > 0):
        raise DomainError(f"sigma_p must be positive, got {sigma_p}")
    upper = GAUSSIAN_SUPPORT_WIDTHS * sigma_p
    prefactor = 4.0 * math.pi * (2.0 * math.pi * sigma_p**2) ** -1.5
    m_sq = particle.mass**2
    result = integrate_adaptive(
        lambda p: prefactor * p * p * math.sqrt(p * p + m_sq)
        * math.exp(-p * p / (2.0 * sigma_p**2)),
        0.0,
        upper,
        spec,
    )
    return float(result.value.real)


def make_scalar_choice(
    particle: Particle, sigma_p: float, spec: typing.Optional[QuadratureSpec] = None
) -> ScalarMomentumAmplitude:
    """Phi(p) = N (omega/sqrt(m)) G(p) with N = sqrt(m/<omega>_G) (unit KG norm)."""
    gaussian = make_gaussian(particle, sigma_p)
    norm_factor = math.sqrt(particle.mass / mean_energy_gaussian(particle, sigma_p, spec))
    root_m = math.sqrt(particle.mass)

    def profile(p: np.ndarray) -> np.ndarray:
        return norm_factor * particle.omega(p) / root_m * gaussian.evaluate(p)

    return ScalarMomentumAmplitude(
        particle,
        profile,
        norm_factor,
        window=gaussian.window,
        momentum_scale=sigma_p,
    )


def scalar_from_probability(psi: MomentumAmplitude) -> ScalarMomentumAmplitude:
    """Phi = sqrt(omega) Psi, the scalar amplitude of a probability amplitude."""
    particle = psi.particle

    def profile(p: np.ndarray) -> np.ndarray:
        return np.sqrt(particle.omega(p)) * psi.evaluate(p)

    return ScalarMomentumAmplitude(
        particle,
        profile,
        1.0,
        window=psi.window,
        momentum_scale=psi.momentum_scale,
        axis=psi.axis,
        probability=psi,
    )
