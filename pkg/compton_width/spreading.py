#!/usr/bin/env python3
"""Spreading of free wavepackets.

The total position variance of a free packet evolves as

    sigma^2(t) = sigma^2(0) + {<beta^2> - <beta>^2} t^2,

so the spreading velocity d sigma/dt stays below sqrt(<beta^2>) < 1 however
small the initial width. For isotropic packets each Cartesian width spreads at
1/sqrt(3) of the total rate.
"""
from __future__ import annotations

import math
import typing
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path

import numpy as np

from compton_width.exception import DomainError
from compton_width.exception import InvariantViolationError
from compton_width.observables import position_moments
from compton_width.quadrature import integrate_adaptive
from compton_width.quadrature import momentum_integral
from compton_width.quadrature import QuadratureSpec
from compton_width.states import make_gaussian
from compton_width.states import MomentumAmplitude
from compton_width.states import Particle
from compton_width.utils import format_float
from compton_width.utils import write_csv
from compton_width.utils import write_json

SQRT_3 = math.sqrt(3.0)

SPREADING_HEADER = ["t", "sigma_sq", "v_sp", "sigma_x", "v_x"]


@dataclass(frozen=True, eq=False)
class BetaMoments:
    """<beta> and <beta^2> of a momentum distribution."""

    mean_beta: np.ndarray
    mean_beta_sq: float

    def __post_init__(self) -> None:
        mean_beta = np.asarray(self.mean_beta, dtype=float)
        object.__setattr__(self, "mean_beta", mean_beta)
        if not 0.0 <= self.mean_beta_sq < 1.0:
            raise DomainError(f"<beta^2> must lie in [0, 1), got {self.mean_beta_sq}")
        # Cauchy-Schwarz, up to quadrature rounding
        if float(mean_beta @ mean_beta) > self.mean_beta_sq * (1.0 + 1e-9) + 1e-15:
            raise DomainError("|<beta>|^2 exceeds <beta^2>")

    @property
    def velocity_spread(self) -> float:
        """<beta^2> - |<beta>|^2."""
        return max(self.mean_beta_sq - float(self.mean_beta @ self.mean_beta), 0.0)


def beta_moments(
    psi: MomentumAmplitude, spec: typing.Optional[QuadratureSpec] = None
) -> BetaMoments:
    """<beta> = int d3p |Psi|^2 p/omega and <beta^2> = int d3p |Psi|^2 p^2/omega^2."""
    particle = psi.particle
    m_sq = particle.mass**2
    if psi.is_isotropic:
        # odd integrand: <beta> vanishes
        def radial(p: float) -> float:
            value = complex(psi.evaluate(np.array([0.0, 0.0, p])))
            return 4.0 * math.pi * p**4 * abs(value) ** 2 / (p * p + m_sq)

        result = integrate_adaptive(radial, 0.0, psi.window.radius, spec)
        return BetaMoments(np.zeros(3), float(result.value.real))

    n, e1 = psi.frame()

    def integrand(pt: np.ndarray, pz: np.ndarray) -> np.ndarray:
        p = pz[..., None] * n + pt[..., None] * e1
        density = np.abs(psi.evaluate(p)) ** 2
        omega_sq = np.sum(p * p, axis=-1) + m_sq
        return np.stack(
            [density * (p @ n) / np.sqrt(omega_sq), density * (omega_sq - m_sq) / omega_sq],
            axis=-1,
        )

    mean_par, mean_sq = np.real(momentum_integral(integrand, psi.window, spec))
    return BetaMoments(float(mean_par) * n, float(mean_sq))


@dataclass(frozen=True)
class SpreadingPoint:
    """Total and per-axis width with their growth rates at time t."""

    t: float
    sigma_sq: float
    v_sp: float
    sigma_x: float
    v_x: float

    def row(self) -> typing.Tuple[float, ...]:
        """CSV row in SPREADING_HEADER order."""
        return (self.t, self.sigma_sq, self.v_sp, self.sigma_x, self.v_x)


@dataclass(frozen=True, eq=False)
class SpreadingReport:
    """Variance trajectory of one packet."""

    sigma_sq_initial: float
    trajectory: typing.List[SpreadingPoint]
    asymptotic_rate_total: float
    asymptotic_rate_per_axis: float
    moments: BetaMoments
    sigma_p: typing.Optional[float] = None
    labels: typing.Dict[str, str] = field(default_factory=dict)

    @property
    def max_v_sp(self) -> float:
        """Largest spreading velocity on the trajectory."""
        return max((p.v_sp for p in self.trajectory), default=0.0)

    def to_dict(self) -> dict:
        """JSON summary (without the trajectory)."""
        return {
            "sigma_p": self.sigma_p,
            "sigma_sq_initial": self.sigma_sq_initial,
            "asymptotic_rate_total": self.asymptotic_rate_total,
            "asymptotic_rate_per_axis": self.asymptotic_rate_per_axis,
            "mean_beta": list(self.moments.mean_beta),
            "mean_beta_sq": self.moments.mean_beta_sq,
            "max_v_sp": self.max_v_sp,
            **self.labels,
        }


def variance_evolution(
    moments: BetaMoments,
    sigma_sq_initial: float,
    times: typing.Sequence[float],
    *,
    sigma_p: typing.Optional[float] = None,
) -> SpreadingReport:
    """sigma^2(t) and v_sp(t) = {<beta^2> - <beta>^2} t / sigma(t) on ``times``.

    Per-axis columns are the isotropic values sigma_x = sigma / sqrt(3) and
    v_x = v_sp / sqrt(3). v_sp(0) is 0.
    """
    times = np.asarray(times, dtype=float)
    if not sigma_sq_initial > 0:
        raise DomainError(f"sigma_sq_initial must be positive, got {sigma_sq_initial}")
    if np.any(times < 0) or np.any(np.diff(times) < 0) or not np.all(np.isfinite(times)):
        raise DomainError("times must be finite, non-negative and sorted")

    spread = moments.velocity_spread
    trajectory = []
    for t in times:
        sigma_sq = sigma_sq_initial + spread * t * t
        v_sp = spread * t / math.sqrt(sigma_sq) if t > 0 else 0.0
        trajectory.append(
            SpreadingPoint(
                t=float(t),
                sigma_sq=sigma_sq,
                v_sp=v_sp,
                sigma_x=math.sqrt(sigma_sq / 3.0),
                v_x=v_sp / SQRT_3,
            )
        )

    rate = math.sqrt(spread)
    labels = {}
    if np.any(moments.mean_beta):
        labels["note"] = "non-zero <beta>: moving packet"
    return SpreadingReport(
        sigma_sq_initial=sigma_sq_initial,
        trajectory=trajectory,
        asymptotic_rate_total=rate,
        asymptotic_rate_per_axis=rate / SQRT_3,
        moments=moments,
        sigma_p=sigma_p,
        labels=labels,
    )


def per_axis_width(report: SpreadingReport, t: float) -> float:
    """sigma_x(t) = sqrt(sigma^2(t) / 3) of an isotropic packet."""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    spread = report.moments.velocity_spread
    return math.sqrt((report.sigma_sq_initial + spread * t * t) / 3.0)


def spreading_times(sigma_x0: float, t_max_widths: float, points: int = 41) -> np.ndarray:
    """0 followed by log-spaced times up to ``t_max_widths`` initial widths."""
    if not (sigma_x0 > 0 and t_max_widths > 0 and points >= 2):
        raise DomainError("spreading_times needs positive width, horizon and >= 2 points")
    upper = t_max_widths * sigma_x0
    return np.concatenate([[0.0], np.geomspace(upper * 1e-4, upper, points - 1)])


def gaussian_spreading(
    particle: Particle,
    sigma_p: float,
    times: typing.Sequence[float],
    spec: typing.Optional[QuadratureSpec] = None,
) -> SpreadingReport:
    """Spreading report of the isotropic Gaussian, sigma^2(0) = 3 sigma_x^2."""
    psi = make_gaussian(particle, sigma_p)
    return variance_evolution(
        beta_moments(psi, spec), 3.0 * psi.sigma_x**2, times, sigma_p=sigma_p
    )


def causality_scan(
    particle: Particle,
    sigma_p_list: typing.Sequence[float],
    t_grid: typing.Sequence[float],
    spec: typing.Optional[QuadratureSpec] = None,
) -> typing.List[SpreadingReport]:
    """Spreading reports of Gaussians of several widths; every v_sp must stay below 1."""
    if not sigma_p_list or any(not s > 0 for s in sigma_p_list):
        raise DomainError("sigma_p_list must hold positive momentum widths")

    reports = []
    for sigma_p in sigma_p_list:
        report = gaussian_spreading(particle, sigma_p, t_grid, spec)
        if report.max_v_sp >= 1.0 or report.asymptotic_rate_total >= 1.0:
            raise InvariantViolationError(
                f"Spreading velocity {report.max_v_sp:.12g} reaches the speed of light "
                f"for sigma_p={sigma_p}",
                report=report,
            )
        reports.append(report)
    return reports


def direct_variance(
    psi: MomentumAmplitude, t: float, spec: typing.Optional[QuadratureSpec] = None
) -> float:
    """Total variance of |psi(t, x)|^2 by position-side quadrature."""
    return position_moments(psi, t, spec).total_variance


def spreading_file_name(sigma_p: float) -> str:
    """CSV file name of the report for ``sigma_p``."""
    return f"spreading_sigma_p_{format_float(sigma_p)}.csv"


def write_spreading_csv(path: str | Path, report: SpreadingReport) -> Path:
    """Trajectory CSV with header t,sigma_sq,v_sp,sigma_x,v_x."""
    return write_csv(path, SPREADING_HEADER, (p.row() for p in report.trajectory))


def write_spreading_outputs(
    reports: typing.Sequence[SpreadingReport], out_dir: str | Path
) -> typing.List[Path]:
    """One CSV per report plus spreading_index.json mapping sigma_p to the file."""
    out_dir = Path(out_dir)
    paths, index = [], {}
    for report in reports:
        if report.sigma_p is None:
            raise DomainError("spreading reports need sigma_p to be written")
        name = spreading_file_name(report.sigma_p)
        paths.append(write_spreading_csv(out_dir / name, report))
        index[format_float(report.sigma_p)] = name
    paths.append(write_json(out_dir / "spreading_index.json", index))
    return paths
