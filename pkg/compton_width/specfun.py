#!/usr/bin/env python3
"""Bessel kernels: J0 (cylindrical Fourier kernel) and K_nu (localized-state profile).

Both functions are evaluated from integral representations for small and moderate
arguments and from their large-argument asymptotic series beyond a frozen crossover:

    J0(x)   = (1/pi) int_0^pi cos(x sin t) dt       midpoint rule (periodic integrand)
    K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt  trapezoid rule (analytic in a strip)

Both quadratures converge geometrically in the number of nodes, so the error
estimate is the difference to the rule with half the nodes.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass

import numpy as np

from compton_width.constants import J0_ASYMPTOTIC_CROSSOVER
from compton_width.constants import K_ASYMPTOTIC_CROSSOVER
from compton_width.constants import K_TRAPEZOID_STEP
from compton_width.exception import DomainError

NU_MAX = 3.0
_J0_ASYMPTOTIC_TERMS = 24


@dataclass(frozen=True)
class SpecFunResult:
    """Value of a special function with an absolute error estimate."""

    value: float
    est_abs_error: float


def asymptotic_coefficients(nu: float, n_terms: int) -> typing.List[float]:
    """Hankel coefficients a_k(nu) = prod_j (4nu^2 - (2j-1)^2) / (k! 8^k), k < n_terms."""
    mu = 4.0 * nu * nu
    coefficients = [1.0]
    for k in range(1, n_terms):
        coefficients.append(coefficients[-1] * (mu - (2 * k - 1) ** 2) / (8.0 * k))
    return coefficients


def _j0_midpoint(ax: float, n_nodes: int) -> float:
    theta = math.pi * (np.arange(n_nodes) + 0.5) / n_nodes
    return float(np.mean(np.cos(ax * np.sin(theta))))


def _j0_asymptotic(ax: float) -> SpecFunResult:
    # J0(x) ~ sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4))
    p_sum, q_sum = 0.0, 0.0
    term, last = 1.0, math.inf
    k = 0
    while True:
        if k > 0:
            term *= -((2 * k - 1) ** 2) / (8.0 * k * ax)
        if abs(term) > last or abs(term) < 1e-17:
            break
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            p_sum += sign * term
        else:
            q_sum += sign * term
        last = abs(term)
        k += 1
    chi = ax - math.pi / 4.0
    prefactor = math.sqrt(2.0 / (math.pi * ax))
    value = prefactor * (p_sum * math.cos(chi) - q_sum * math.sin(chi))
    return SpecFunResult(value, prefactor * max(abs(term), 1e-17) + 1e-16 * abs(value))


def bessel_j0(x: float) -> SpecFunResult:
    """Bessel function of the first kind of order zero."""
    if not math.isfinite(x):
        raise DomainError(f"bessel_j0 requires a finite argument, got {x}")

    ax = abs(float(x))
    if ax > J0_ASYMPTOTIC_CROSSOVER:
        return _j0_asymptotic(ax)

    n_nodes = 40 + math.ceil(ax)
    value = _j0_midpoint(ax, n_nodes)
    coarse = _j0_midpoint(ax, n_nodes // 2)
    return SpecFunResult(value, abs(value - coarse) + 1e-16)


def j0(x: np.ndarray) -> np.ndarray:
    """Vectorized J0 for quadrature kernels (same representations as bessel_j0)."""
    ax = np.abs(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(ax)):
        raise DomainError("j0 requires finite arguments")
    out = np.empty_like(ax)

    small = ax <= J0_ASYMPTOTIC_CROSSOVER
    if np.any(small):
        xs = ax[small]
        n_nodes = 40 + math.ceil(J0_ASYMPTOTIC_CROSSOVER)
        acc = np.zeros_like(xs)
        for theta in math.pi * (np.arange(n_nodes) + 0.5) / n_nodes:
            acc += np.cos(xs * math.sin(theta))
        out[small] = acc / n_nodes

    large = ~small
    if np.any(large):
        xl = ax[large]
        coefficients = asymptotic_coefficients(0.0, _J0_ASYMPTOTIC_TERMS)
        p_sum = np.zeros_like(xl)
        q_sum = np.zeros_like(xl)
        for k, a_k in enumerate(coefficients):
            sign = -1.0 if (k // 2) % 2 else 1.0
            term = sign * a_k / xl**k
            if k % 2 == 0:
                p_sum += term
            else:
                q_sum += term
        chi = xl - math.pi / 4.0
        out[large] = np.sqrt(2.0 / (math.pi * xl)) * (
            p_sum * np.cos(chi) - q_sum * np.sin(chi)
        )
    return out


def _k_trapezoid(nu: float, x: float, step: float) -> float:
    t_max = max(2.0, math.log(2.0 * (60.0 + 20.0 * nu) / x) + 1.0)
    t = np.arange(0.0, t_max + step, step)
    exponent = -x * np.cosh(t)
    values = 0.5 * (np.exp(exponent + nu * t) + np.exp(exponent - nu * t))
    return float(step * (np.sum(values) - 0.5 * values[0]))


def _k_asymptotic(nu: float, x: float) -> SpecFunResult:
    mu = 4.0 * nu * nu
    total, term, last = 1.0, 1.0, math.inf
    k = 1
    while True:
        term *= (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(term) > last or abs(term) < 1e-17:
            break
        total += term
        last = abs(term)
        k += 1
    prefactor = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)
    value = prefactor * total
    return SpecFunResult(value, prefactor * max(abs(term), 1e-17) + 1e-16 * value)


def bessel_k(nu: float, x: float) -> SpecFunResult:
    """Modified Bessel function of the second kind K_nu(x), 0 <= nu <= 3, x > 0."""
    if not (math.isfinite(nu) and 0.0 <= nu <= NU_MAX):
        raise DomainError(f"bessel_k supports 0 <= nu <= {NU_MAX}, got nu={nu}")
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_k requires x > 0, got x={x}")

    if x >= K_ASYMPTOTIC_CROSSOVER:
        return _k_asymptotic(nu, x)

    value = _k_trapezoid(nu, x, K_TRAPEZOID_STEP)
    coarse = _k_trapezoid(nu, x, 2.0 * K_TRAPEZOID_STEP)
    return SpecFunResult(value, abs(value - coarse) + 1e-16 * value)


def localized_scalar_shape(m: float, r: float) -> float:
    """(m/r)^(5/4) K_5/4(mr), the shape of the localized scalar profile."""
    return (m / r) ** 1.25 * bessel_k(1.25, m * r).value
