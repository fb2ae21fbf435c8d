#!/usr/bin/env python3
"""Quadrature engine.

Adaptive 1D quadrature (scipy QUADPACK), the spherical and axisymmetric reductions
of 3D Fourier integrals, momentum-space integrals over axisymmetric windows, and
Abel-regularized evaluation of sine integrals that do not converge absolutely.

Reductions used throughout (natural units):

    (2pi)^(-3/2) int d3p e^{ip.x} f(|p|)    = sqrt(2/pi) / r int_0^inf p sin(pr) f(p) dp
    (2pi)^(-3/2) int d3p e^{ip.x} f(pt, pz) = (2pi)^(-1/2) int dpz e^{i pz xz}
                                             int_0^inf pt J0(pt xt) f(pt, pz) dpt
"""
from __future__ import annotations

import functools
import math
import typing
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate

from compton_width.constants import CutoffPolicy
from compton_width.constants import DEFAULT_ABS_TOL
from compton_width.constants import DEFAULT_EPSILON_LADDER
from compton_width.constants import DEFAULT_EXTRAPOLATION_ORDER
from compton_width.constants import DEFAULT_LADDER_EXTENSIONS
from compton_width.constants import DEFAULT_MAX_SUBDIVISIONS
from compton_width.constants import DEFAULT_REL_TOL
from compton_width.constants import GAUSS_LEGENDRE_NODES
from compton_width.exception import ConvergenceError
from compton_width.exception import DomainError
from compton_width.specfun import j0

# pylint: disable=too-many-arguments

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# e^-40 is below double precision relative to any integrand of order one
_DAMPING_EXPONENT = 40.0


@dataclass(frozen=True)
class QuadratureSpec:
    """Accuracy targets and subdivision limit of a quadrature.

    ``max_subdivisions`` is the number of interval bisection levels: QUADPACK may
    use up to ``2**max_subdivisions`` subintervals and the Gauss-Legendre panel
    engine may double its panel count ``max_subdivisions`` times.
    """

    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS
    semi_infinite_cutoff_policy: CutoffPolicy = CutoffPolicy.TAIL_ESTIMATE
    p_max: typing.Optional[float] = None

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("rel_tol and abs_tol must be positive")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be a positive integer")
        if self.semi_infinite_cutoff_policy == CutoffPolicy.FIXED_CUTOFF:
            if self.p_max is None or not self.p_max > 0:
                raise DomainError("fixed_cutoff policy requires p_max > 0")

    def tolerance(self, value: typing.Union[complex, np.ndarray]) -> typing.Any:
        """Mixed tolerance max(abs_tol, rel_tol*|value|)."""
        return np.maximum(self.abs_tol, self.rel_tol * np.abs(value))


@dataclass(frozen=True)
class RegulatorSpec:
    """Ladder of Abel regulators e^{-eps p} and the polynomial extrapolation order.

    ``extrapolation_order`` is the lowest order used; the ladder is extended by
    up to ``max_extensions`` halvings of its smallest entry while the
    extrapolation has not settled.
    """

    epsilon_ladder: typing.Tuple[float, ...] = DEFAULT_EPSILON_LADDER
    extrapolation_order: int = DEFAULT_EXTRAPOLATION_ORDER
    max_extensions: int = DEFAULT_LADDER_EXTENSIONS

    def __post_init__(self) -> None:
        ladder = tuple(float(e) for e in self.epsilon_ladder)
        object.__setattr__(self, "epsilon_ladder", ladder)
        if self.extrapolation_order < 1:
            raise DomainError("extrapolation_order must be positive")
        if self.max_extensions < 0:
            raise DomainError("max_extensions must not be negative")
        if len(ladder) < self.extrapolation_order + 1:
            raise DomainError(
                "epsilon_ladder needs at least extrapolation_order + 1 entries"
            )
        if any(e <= 0 for e in ladder) or any(
            b >= a for a, b in zip(ladder, ladder[1:])
        ):
            raise DomainError("epsilon_ladder must be positive and strictly decreasing")


@dataclass(frozen=True)
class QuadResult:
    """Value of an integral with its error estimate and number of integrand calls."""

    value: complex
    est_error: float
    evaluations: int = 0

    def __post_init__(self) -> None:
        if not self.est_error >= 0:
            raise DomainError(f"est_error must be non-negative, got {self.est_error}")

    def scaled(self, factor: complex) -> QuadResult:
        """Result multiplied by a constant."""
        return QuadResult(self.value * factor, self.est_error * abs(factor), self.evaluations)


@dataclass(frozen=True)
class MomentumWindow:
    """Momentum region outside of which an integrand is negligible.

    Cylindrical coordinates relative to a symmetry axis: ``perp`` is the range of
    the distance from the axis, ``par`` the range along it.
    """

    perp: typing.Tuple[float, float]
    par: typing.Tuple[float, float]

    def __post_init__(self) -> None:
        if not (0.0 <= self.perp[0] < self.perp[1]) or not self.par[0] < self.par[1]:
            raise DomainError(f"Empty momentum window {self}")

    @classmethod
    def ball(cls, radius: float) -> MomentumWindow:
        """Window enclosing the ball |p| <= radius."""
        return cls((0.0, radius), (-radius, radius))

    @property
    def radius(self) -> float:
        """Largest |p| inside the window."""
        return math.hypot(self.perp[1], max(abs(self.par[0]), abs(self.par[1])))

    def intersect(self, other: MomentumWindow) -> typing.Optional[MomentumWindow]:
        """Overlap of two windows (product integrands); None if disjoint."""
        perp = (max(self.perp[0], other.perp[0]), min(self.perp[1], other.perp[1]))
        par = (max(self.par[0], other.par[0]), min(self.par[1], other.par[1]))
        if perp[0] >= perp[1] or par[0] >= par[1]:
            return None
        return MomentumWindow(perp, par)


@functools.lru_cache(maxsize=8)
def _legendre_rule(order: int) -> typing.Tuple[np.ndarray, np.ndarray]:
    return leggauss(order)


def composite_gauss_legendre(
    breaks: np.ndarray, order: int = GAUSS_LEGENDRE_NODES
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of Gauss-Legendre rules on consecutive panels."""
    x, w = _legendre_rule(order)
    left = breaks[:-1, None]
    half = 0.5 * np.diff(breaks)[:, None]
    nodes = left + half * (x[None, :] + 1.0)
    weights = half * w[None, :]
    return nodes.ravel(), weights.ravel()


def _bisect(breaks: np.ndarray) -> np.ndarray:
    mids = 0.5 * (breaks[:-1] + breaks[1:])
    out = np.empty(2 * len(breaks) - 1)
    out[0::2] = breaks
    out[1::2] = mids
    return out


_PanelSums = typing.Tuple[np.ndarray, np.ndarray]

# rounding floor of a sum, in units of the sum of absolute terms
_ROUNDING_FLOOR = 64.0 * np.finfo(float).eps


def refine_panels(
    evaluate: typing.Callable[[typing.List[typing.Tuple[np.ndarray, np.ndarray]]], _PanelSums],
    breaks: typing.Sequence[np.ndarray],
    spec: QuadratureSpec,
    *,
    what: str = "integral",
) -> typing.Tuple[np.ndarray, np.ndarray, int]:
    """Refine a tensor-product panel rule until consecutive levels agree.

    ``evaluate`` receives, per dimension, the (nodes, weights) of the current
    composite rule and returns the integral(s) together with the sums of the
    absolute terms. Every dimension is bisected at each level; the error
    estimate is |I_2n - I_n| per entry, which is accepted once it is below the
    tolerance or the rounding floor of the sum.
    """
    breaks = [np.asarray(b, dtype=float) for b in breaks]
    rules = [composite_gauss_legendre(b) for b in breaks]
    previous, _ = evaluate(rules)
    evaluations = int(np.prod([len(r[0]) for r in rules]))

    for _ in range(spec.max_subdivisions):
        breaks = [_bisect(b) for b in breaks]
        rules = [composite_gauss_legendre(b) for b in breaks]
        current, magnitude = evaluate(rules)
        evaluations += int(np.prod([len(r[0]) for r in rules]))
        error = np.abs(current - previous)
        accepted = np.maximum(spec.tolerance(current), _ROUNDING_FLOOR * magnitude)
        if np.all(error <= accepted):
            return current, error, evaluations
        previous = current

    worst = int(np.argmax(error - accepted))
    raise ConvergenceError(
        f"{what} did not converge within {spec.max_subdivisions} refinements",
        best_estimate=QuadResult(
            complex(current.ravel()[worst]), float(error.ravel()[worst]), evaluations
        ),
    )


def integrate_panels(
    f: typing.Callable[[np.ndarray], np.ndarray],
    breaks: typing.Sequence[float],
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    what: str = "panel integral",
) -> QuadResult:
    """int f over [breaks[0], breaks[-1]] with Gauss-Legendre panels; ``f`` takes arrays.

    Panels should resolve the integrand's features (e.g. one per half-period).
    """
    spec = spec or QuadratureSpec()

    def evaluate(rules: typing.List[typing.Tuple[np.ndarray, np.ndarray]]) -> _PanelSums:
        p, w = rules[0]
        terms = w * f(p)
        return np.sum(terms), np.sum(np.abs(terms))

    value, error, evaluations = refine_panels(
        evaluate, [np.asarray(breaks, dtype=float)], spec, what=what
    )
    return QuadResult(complex(value), float(error), evaluations)


def _initial_breaks(a: float, b: float, oscillation: float = 0.0) -> np.ndarray:
    # one panel per half-period of the Fourier kernel, at least two
    n_panels = max(2, int(math.ceil(abs(b - a) * oscillation / math.pi)))
    return np.linspace(a, b, n_panels + 1)


def _finite_checked(
    f: typing.Callable[[float], complex]
) -> typing.Tuple[typing.Callable[[float], complex], typing.List[int]]:
    counter = [0]

    def checked(z: float) -> complex:
        counter[0] += 1
        value = complex(f(z))
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise DomainError(f"Integrand is not finite at {z!r}: {value}")
        return value

    return checked, counter


def integrate_adaptive(
    f: typing.Callable[[float], complex],
    a: float,
    b: float,
    spec: typing.Optional[QuadratureSpec] = None,
) -> QuadResult:
    """Adaptive Gauss-Kronrod quadrature of a complex integrand on [a, b].

    ``b`` may be ``math.inf``; [a, inf) is mapped to [0, 1) by p = a + t/(1-t).
    Under the fixed-cutoff policy the range is truncated at ``spec.p_max`` instead.
    """
    spec = spec or QuadratureSpec()
    if not math.isfinite(a) or math.isnan(b) or b < a:
        raise DomainError(f"Invalid integration range [{a}, {b}]")
    if a == b:
        return QuadResult(0j, 0.0, 0)

    checked, counter = _finite_checked(f)
    if math.isinf(b):
        if spec.semi_infinite_cutoff_policy == CutoffPolicy.FIXED_CUTOFF:
            integrand, lower, upper = checked, a, max(a, typing.cast(float, spec.p_max))
        else:

            def integrand(t: float) -> complex:
                one_minus = 1.0 - t
                return checked(a + t / one_minus) / (one_minus * one_minus)

            lower, upper = 0.0, 1.0
    else:
        integrand, lower, upper = checked, a, b

    limit = 2**spec.max_subdivisions
    value, error, failures = 0j, 0.0, []
    for part, unit in ((lambda z: integrand(z).real, 1.0), (lambda z: integrand(z).imag, 1j)):
        result = integrate.quad(
            part,
            lower,
            upper,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=limit,
            full_output=1,
        )
        value += unit * result[0]
        error += result[1]
        if len(result) > 3:
            failures.append((result[2].get("last", limit), result[3]))

    quad_result = QuadResult(value, float(error), counter[0])
    for last, message in failures:
        if last >= limit or error > spec.tolerance(value):
            raise ConvergenceError(
                f"Adaptive quadrature failed: {message}", best_estimate=quad_result
            )
    return quad_result


def _radial_upper(spec: QuadratureSpec, p_max: typing.Optional[float]) -> float:
    if spec.semi_infinite_cutoff_policy == CutoffPolicy.FIXED_CUTOFF:
        return typing.cast(float, spec.p_max)
    return math.inf if p_max is None else p_max


def radial_fourier3d(
    f: typing.Callable[[float], complex],
    r: float,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    p_max: typing.Optional[float] = None,
) -> QuadResult:
    """3D Fourier integral (2pi)^(-3/2) int d3p e^{ip.x} f(|p|) at radius r.

    ``p_max`` bounds the support of ``f`` when it is known.
    """
    spec = spec or QuadratureSpec()
    if not math.isfinite(r) or r < 0:
        raise DomainError(f"radius must be finite and non-negative, got {r}")
    upper = _radial_upper(spec, p_max)

    if r == 0.0:
        result = integrate_adaptive(lambda p: p * p * f(p), 0.0, upper, spec)
        return result.scaled(SQRT_2_OVER_PI)

    result = integrate_adaptive(lambda p: p * math.sin(p * r) * f(p), 0.0, upper, spec)
    return result.scaled(SQRT_2_OVER_PI / r)


def radial_fourier3d_grid(
    f: typing.Callable[[np.ndarray], np.ndarray],
    r: np.ndarray,
    p_max: float,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Vectorized radial_fourier3d on a grid of radii; ``f`` takes arrays.

    Returns (values, error estimates).
    """
    spec = spec or QuadratureSpec()
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or not np.all(np.isfinite(r)):
        raise DomainError("radii must be finite and non-negative")

    def evaluate(rules: typing.List[typing.Tuple[np.ndarray, np.ndarray]]) -> _PanelSums:
        p, w = rules[0]
        weighted = w * p * f(p)
        kernel = np.where(
            r[:, None] > 0,
            np.sin(np.outer(r, p)) / np.where(r > 0, r, 1.0)[:, None],
            p[None, :],
        )
        return (
            SQRT_2_OVER_PI * (kernel @ weighted),
            SQRT_2_OVER_PI * (np.abs(kernel) @ np.abs(weighted)),
        )

    breaks = _initial_breaks(0.0, p_max, float(np.max(r, initial=0.0)))
    values, errors, _ = refine_panels(evaluate, [breaks], spec, what="radial Fourier grid")
    return values, errors


def support_window(
    f: typing.Callable[[np.ndarray, np.ndarray], np.ndarray],
    threshold: float = 1e-17,
) -> MomentumWindow:
    """Probe a generic integrand for its support along and around the axis.

    Suitable for integrands concentrated near the origin; amplitudes pass their
    own windows instead.
    """
    p = np.geomspace(1e-6, 1e6, 481)
    zeros = np.zeros_like(p)
    directions = [(p, zeros), (zeros, p), (zeros, -p), (p, p), (p, -p)]
    magnitudes = [np.abs(f(pt, pz)) for pt, pz in directions]
    peak = max(float(np.max(m)) for m in magnitudes)
    if not peak > 0:
        raise DomainError("Integrand vanishes along all sampled directions; no support found")
    extent = max(
        float(np.max(p[m > threshold * peak], initial=p[0])) for m in magnitudes
    )
    # two grid steps beyond the last significant sample
    return MomentumWindow.ball(extent * (p[1] / p[0]) ** 2)


def axisym_fourier3d_grid(
    f: typing.Callable[[np.ndarray, np.ndarray], np.ndarray],
    x_perp: np.ndarray,
    x_par: np.ndarray,
    window: MomentumWindow,
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Axisymmetric 3D Fourier integral on the tensor grid x_perp x x_par.

    ``f(p_perp, p_par)`` is called with broadcast arrays. Returns complex values
    and error estimates of shape (len(x_perp), len(x_par)).
    """
    spec = spec or QuadratureSpec()
    x_perp = np.atleast_1d(np.asarray(x_perp, dtype=float))
    x_par = np.atleast_1d(np.asarray(x_par, dtype=float))
    if np.any(x_perp < 0):
        raise DomainError("x_perp must be non-negative")

    def evaluate(rules: typing.List[typing.Tuple[np.ndarray, np.ndarray]]) -> _PanelSums:
        (pt, wt), (pz, wz) = rules
        values = f(pt[:, None], pz[None, :])
        bessel = j0(np.outer(x_perp, pt)) * (wt * pt)[None, :]
        phases = np.exp(1j * np.outer(pz, x_par)) * wz[:, None]
        magnitude = np.abs(bessel) @ np.abs(values) @ np.abs(phases)
        return INV_SQRT_2PI * (bessel @ values @ phases), INV_SQRT_2PI * magnitude

    breaks = [
        _initial_breaks(*window.perp, float(np.max(x_perp))),
        _initial_breaks(*window.par, float(np.max(np.abs(x_par)))),
    ]
    values, errors, _ = refine_panels(evaluate, breaks, spec, what="axisymmetric Fourier grid")
    return values, errors


def axisym_fourier3d(
    f: typing.Callable[[np.ndarray, np.ndarray], np.ndarray],
    x_perp: float,
    x_par: float,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    window: typing.Optional[MomentumWindow] = None,
) -> QuadResult:
    """Axisymmetric 3D Fourier integral at the cylindrical point (x_perp, x_par)."""
    spec = spec or QuadratureSpec()
    if not (math.isfinite(x_perp) and math.isfinite(x_par)) or x_perp < 0:
        raise DomainError(f"Invalid cylindrical point ({x_perp}, {x_par})")
    window = window or support_window(f)
    values, errors = axisym_fourier3d_grid(f, [x_perp], [x_par], window, spec)
    return QuadResult(complex(values[0, 0]), float(errors[0, 0]))


def momentum_integral(
    f: typing.Callable[[np.ndarray, np.ndarray], np.ndarray],
    window: MomentumWindow,
    spec: typing.Optional[QuadratureSpec] = None,
) -> np.ndarray:
    """int d3p F over an axisymmetric window, 2pi int int p_perp F dp_perp dp_par.

    ``f`` may return extra trailing axes (vector integrands); the result has
    those trailing axes.
    """
    spec = spec or QuadratureSpec()

    def evaluate(rules: typing.List[typing.Tuple[np.ndarray, np.ndarray]]) -> _PanelSums:
        (pt, wt), (pz, wz) = rules
        values = np.asarray(f(pt[:, None], pz[None, :]))
        weights = 2.0 * math.pi * (wt * pt)[:, None] * wz[None, :]
        return (
            np.tensordot(weights, values, axes=([0, 1], [0, 1])),
            np.tensordot(weights, np.abs(values), axes=([0, 1], [0, 1])),
        )

    breaks = [_initial_breaks(*window.perp), _initial_breaks(*window.par)]
    values, _, _ = refine_panels(evaluate, breaks, spec, what="momentum integral")
    return values


def damped_sine_integral(
    g: typing.Callable[[np.ndarray], np.ndarray],
    r: float,
    epsilon: float,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    p_max: typing.Optional[float] = None,
) -> QuadResult:
    """int_0^inf g(p) sin(pr) e^{-eps p} dp, integrated half-period by half-period.

    The range ends where the damping reaches e^-40 (or at ``p_max``); the
    neglected tail is bounded by |g(P)| e^{-eps P} / eps.
    """
    spec = spec or QuadratureSpec()
    if not r > 0 or not epsilon > 0:
        raise DomainError("damped_sine_integral requires r > 0 and epsilon > 0")

    upper = _DAMPING_EXPONENT / epsilon
    if spec.semi_infinite_cutoff_policy == CutoffPolicy.FIXED_CUTOFF:
        upper = min(upper, typing.cast(float, spec.p_max))
    if p_max is not None:
        upper = min(upper, p_max)

    half_period = math.pi / r
    breaks = half_period * np.arange(int(upper / half_period) + 1)
    if breaks[-1] < upper:
        breaks = np.append(breaks, upper)
    if len(breaks) < 3:
        breaks = np.linspace(0.0, upper, 3)

    result = integrate_panels(
        lambda p: g(p) * np.sin(p * r) * np.exp(-epsilon * p),
        breaks,
        spec,
        what="damped sine integral",
    )
    end = breaks[-1]
    tail = float(np.abs(g(np.array([end])))[0]) * math.exp(-epsilon * end) / epsilon
    if spec.semi_infinite_cutoff_policy == CutoffPolicy.FIXED_CUTOFF:
        tail = 0.0
    return QuadResult(result.value, result.est_error + tail, result.evaluations)


def _neville_to_zero(
    eps: typing.Sequence[float], values: typing.Sequence[complex]
) -> typing.List[complex]:
    """Polynomial extrapolations to eps=0 of increasing order.

    Entry k uses the k+1 smallest regulators.
    """
    eps = list(eps)[::-1]
    values = list(values)[::-1]
    estimates = []
    for order in range(len(eps)):
        xs, ys = eps[: order + 1], list(values[: order + 1])
        # Neville tableau evaluated at 0
        for level in range(1, len(xs)):
            for i in range(len(xs) - level):
                ys[i] = (xs[i + level] * ys[i] - xs[i] * ys[i + 1]) / (
                    xs[i + level] - xs[i]
                )
        estimates.append(ys[0])
    return estimates


def _best_extrapolation(
    ladder: typing.Sequence[float], values: typing.Sequence[complex], min_order: int
) -> typing.Tuple[complex, float, typing.List[float]]:
    """Estimate of order >= min_order with the smallest residual to the order below.

    Also returns the residuals of all orders >= min_order.
    """
    estimates = _neville_to_zero(ladder, values)
    residuals = [abs(b - a) for a, b in zip(estimates, estimates[1:])][min_order - 1 :]
    best = min(range(len(residuals)), key=residuals.__getitem__)
    return estimates[min_order + best], residuals[best], residuals


def abel_sine_integral(
    g: typing.Callable[[np.ndarray], np.ndarray],
    r: float,
    reg: typing.Optional[RegulatorSpec] = None,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    length_scale: float = 1.0,
    p_max: typing.Optional[float] = None,
) -> QuadResult:
    """Abel-regularized value lim_{eps->0} int_0^inf g(p) sin(pr) e^{-eps p} dp.

    The ladder is applied in units of min(length_scale, r). Neville
    extrapolations of every order from ``reg.extrapolation_order`` up to the
    ladder length are compared and the one closest to its predecessor is kept;
    while that residual exceeds the quadrature tolerance, the smallest
    regulator is halved and appended.
    """
    reg = reg or RegulatorSpec()
    spec = spec or QuadratureSpec()
    if not r > 0:
        raise DomainError(f"abel_sine_integral requires r > 0, got {r}")

    scale = min(length_scale, r)
    ladder = [e * scale for e in reg.epsilon_ladder]
    samples = [damped_sine_integral(g, r, e, spec, p_max=p_max) for e in ladder]
    for extension in range(reg.max_extensions + 1):
        value, residual, residuals = _best_extrapolation(
            ladder, [s.value for s in samples], reg.extrapolation_order
        )
        accepted = spec.tolerance(value) + max(s.est_error for s in samples)
        if residual <= accepted or extension == reg.max_extensions:
            break
        ladder.append(0.5 * ladder[-1])
        samples.append(damped_sine_integral(g, r, ladder[-1], spec, p_max=p_max))

    result = QuadResult(
        value,
        residual + max(s.est_error for s in samples),
        sum(s.evaluations for s in samples),
    )
    diverging = len(residuals) > 1 and all(
        b >= a for a, b in zip(residuals, residuals[1:])
    )
    if diverging and residual > accepted:
        raise ConvergenceError(
            "Regulator extrapolation diverges (residuals non-decreasing)",
            best_estimate=result,
        )
    return result


def regulated_oscillatory(
    f: typing.Callable[[np.ndarray], np.ndarray],
    r: float,
    reg: typing.Optional[RegulatorSpec] = None,
    spec: typing.Optional[QuadratureSpec] = None,
    *,
    length_scale: float = 1.0,
    p_max: typing.Optional[float] = None,
) -> QuadResult:
    """Radial Fourier integral sqrt(2/pi)/r int p sin(pr) f(p) dp, Abel-regularized.

    Normalized like radial_fourier3d so both can be compared directly.
    """
    result = abel_sine_integral(
        lambda p: p * f(p), r, reg, spec, length_scale=length_scale, p_max=p_max
    )
    return result.scaled(SQRT_2_OVER_PI / r)
