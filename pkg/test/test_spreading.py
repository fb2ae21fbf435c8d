#!/usr/bin/env python
"""Tests for the spreading of free wavepackets"""
import json
import math
from pathlib import Path

import numpy as np
import pytest

from compton_width.exception import DomainError
from compton_width.quadrature import QuadratureSpec
from compton_width.spreading import beta_moments
from compton_width.spreading import BetaMoments
from compton_width.spreading import causality_scan
from compton_width.spreading import direct_variance
from compton_width.spreading import gaussian_spreading
from compton_width.spreading import per_axis_width
from compton_width.spreading import spreading_file_name
from compton_width.spreading import spreading_times
from compton_width.spreading import variance_evolution
from compton_width.spreading import write_spreading_outputs
from compton_width.states import boost_amplitude
from compton_width.states import BoostParams
from compton_width.states import make_gaussian
from compton_width.states import Particle

# pylint: disable=line-too-long
# flake8: noqa: E501


def test_beta_moments_nonrelativistic(particle: Particle, spec: QuadratureSpec) -> None:
    moments = beta_moments(make_gaussian(particle, 0.01), spec)
    assert moments.mean_beta_sq == pytest.approx(3e-4, rel=1e-3)
    assert np.all(moments.mean_beta == 0.0)


def test_beta_moments_ultrarelativistic(particle: Particle, spec: QuadratureSpec) -> None:
    # 1 - <beta^2> = <m^2 / omega^2> ~ <1 / p^2> = 1 / sigma_p^2
    sigma_p = 100.0
    moments = beta_moments(make_gaussian(particle, sigma_p), spec)
    assert moments.mean_beta_sq < 1.0
    assert 1.0 - moments.mean_beta_sq == pytest.approx(1.0 / sigma_p**2, rel=3e-2)


def test_beta_moments_of_moving_packet(particle: Particle, spec: QuadratureSpec) -> None:
    boosted = boost_amplitude(make_gaussian(particle, 0.05), BoostParams.along(0.8))
    moments = beta_moments(boosted, spec)
    assert moments.mean_beta[2] == pytest.approx(0.8, rel=1e-2)
    assert moments.mean_beta[:2] == pytest.approx([0.0, 0.0], abs=1e-15)
    assert 0.0 <= moments.velocity_spread < 0.01


def test_beta_moments_validation() -> None:
    with pytest.raises(DomainError):
        BetaMoments(np.zeros(3), 1.0)
    with pytest.raises(DomainError):
        BetaMoments(np.zeros(3), -0.1)
    with pytest.raises(DomainError):
        BetaMoments(np.array([0.0, 0.0, 0.9]), 0.5)
    assert BetaMoments(np.array([0.0, 0.0, 0.5]), 0.5).velocity_spread == pytest.approx(0.25)


def test_variance_evolution() -> None:
    report = variance_evolution(BetaMoments(np.zeros(3), 0.75), 1.0, [0.0, 1.0, 2.0])
    first, _, last = report.trajectory
    assert first.v_sp == 0.0
    assert first.sigma_sq == 1.0
    assert last.sigma_sq == pytest.approx(4.0)
    assert last.v_sp == pytest.approx(0.75)
    assert last.sigma_x == pytest.approx(math.sqrt(4.0 / 3.0))
    assert last.v_x == pytest.approx(0.75 / math.sqrt(3.0))
    assert report.asymptotic_rate_total == pytest.approx(math.sqrt(0.75))
    assert report.asymptotic_rate_per_axis == pytest.approx(0.5)
    assert report.max_v_sp == pytest.approx(0.75)
    assert "note" not in report.to_dict()


def test_spreading_velocity_approaches_rate() -> None:
    report = variance_evolution(BetaMoments(np.zeros(3), 0.75), 1e-6, np.geomspace(1e-8, 1e2, 60))
    velocities = [p.v_sp for p in report.trajectory]
    assert velocities == sorted(velocities)
    assert velocities[-1] < report.asymptotic_rate_total
    assert velocities[-1] == pytest.approx(report.asymptotic_rate_total, rel=1e-9)


def test_variance_evolution_of_moving_packet() -> None:
    report = variance_evolution(BetaMoments(np.array([0.0, 0.0, 0.5]), 0.5), 1.0, [0.0, 2.0])
    assert report.trajectory[1].sigma_sq == pytest.approx(1.0 + 0.25 * 4.0)
    assert report.to_dict()["note"] == "non-zero <beta>: moving packet"


@pytest.mark.parametrize(
    "sigma_sq, times",
    [
        (0.0, [0.0, 1.0]),
        (1.0, [1.0, 0.0]),
        (1.0, [-1.0, 0.0]),
        (1.0, [0.0, math.inf]),
    ],
)
def test_variance_evolution_domain(sigma_sq: float, times: list) -> None:
    with pytest.raises(DomainError):
        variance_evolution(BetaMoments(np.zeros(3), 0.5), sigma_sq, times)


def test_gaussian_spreading_nonrelativistic_limit(particle: Particle, spec: QuadratureSpec) -> None:
    # sigma_x(t)^2 -> sigma_x^2 + (sigma_p t / m)^2
    sigma_p = 0.01
    sigma_x = 0.5 / sigma_p
    report = gaussian_spreading(particle, sigma_p, [0.0, 1e3, 1e4], spec)
    assert report.sigma_sq_initial == pytest.approx(3.0 * sigma_x**2)
    assert report.sigma_p == sigma_p
    for t in (1e3, 1e4):
        assert per_axis_width(report, t) == pytest.approx(math.hypot(sigma_x, sigma_p * t), rel=1e-3)
    assert report.trajectory[2].sigma_x == pytest.approx(per_axis_width(report, 1e4))
    with pytest.raises(DomainError):
        per_axis_width(report, -1.0)


def test_causality_scan(particle: Particle, spec: QuadratureSpec) -> None:
    sigmas = [0.1, 1.0, 10.0, 100.0]
    reports = causality_scan(particle, sigmas, spreading_times(0.5 / 0.1, 1e6), spec)
    rates = [r.asymptotic_rate_total for r in reports]
    assert rates == sorted(rates)
    for report in reports:
        assert report.max_v_sp < 1.0
        assert report.asymptotic_rate_total < 1.0
        assert report.asymptotic_rate_per_axis < 1.0 / math.sqrt(3.0)


def test_causality_scan_domain(particle: Particle) -> None:
    with pytest.raises(DomainError):
        causality_scan(particle, [], [0.0, 1.0])
    with pytest.raises(DomainError):
        causality_scan(particle, [1.0, -1.0], [0.0, 1.0])


@pytest.mark.parametrize("sigma_p,t", [(0.5, 4.0), (0.2, 1.0), (0.2, 5.0)])
def test_direct_variance_agrees(particle: Particle, spec: QuadratureSpec, sigma_p: float, t: float) -> None:
    psi = make_gaussian(particle, sigma_p)
    predicted = gaussian_spreading(particle, sigma_p, [t], spec).trajectory[0].sigma_sq
    assert direct_variance(psi, t, spec) == pytest.approx(predicted, rel=1e-4)


@pytest.mark.parametrize("sigma_p", [0.01, 0.5, 50.0])
def test_per_axis_velocity_reaches_rate(particle: Particle, spec: QuadratureSpec, sigma_p: float) -> None:
    sigma_x0 = 0.5 / sigma_p
    report = gaussian_spreading(particle, sigma_p, [1e4 * sigma_x0], spec)
    expected = math.sqrt(report.moments.mean_beta_sq / 3.0)
    assert report.asymptotic_rate_per_axis == pytest.approx(expected, rel=1e-12)
    assert report.trajectory[0].v_x == pytest.approx(expected, rel=1e-3)


def test_compton_scale_packet_approaches_light_cone(particle: Particle, spec: QuadratureSpec) -> None:
    # sigma_x(0) = 0.01 Compton wavelengths
    report = gaussian_spreading(particle, 50.0, [100.0], spec)
    assert abs(report.asymptotic_rate_per_axis - 1.0 / math.sqrt(3.0)) < 2e-3
    assert abs(report.trajectory[0].v_x - 1.0 / math.sqrt(3.0)) < 2e-3
    assert report.asymptotic_rate_per_axis < 1.0 / math.sqrt(3.0)


def test_spreading_times() -> None:
    times = spreading_times(2.0, 50.0, points=5)
    assert len(times) == 5
    assert times[0] == 0.0
    assert times[-1] == pytest.approx(100.0)
    assert np.all(np.diff(times) > 0)
    with pytest.raises(DomainError):
        spreading_times(0.0, 50.0)
    with pytest.raises(DomainError):
        spreading_times(1.0, 50.0, points=1)


def test_spreading_outputs(particle: Particle, spec: QuadratureSpec, tmp_path: Path) -> None:
    report = gaussian_spreading(particle, 0.5, [0.0, 1.0], spec)
    paths = write_spreading_outputs([report], tmp_path)
    assert [p.name for p in paths] == [spreading_file_name(0.5), "spreading_index.json"]
    assert spreading_file_name(0.5) == "spreading_sigma_p_0.5.csv"

    lines = (tmp_path / "spreading_sigma_p_0.5.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("# units:")
    assert lines[1] == "t,sigma_sq,v_sp,sigma_x,v_x"
    assert lines[2] == "0,3,0,1,0"
    assert len(lines) == 4

    index = json.loads((tmp_path / "spreading_index.json").read_text(encoding="utf-8"))
    assert index == {"0.5": "spreading_sigma_p_0.5.csv"}


def test_spreading_outputs_need_sigma_p(tmp_path: Path) -> None:
    report = variance_evolution(BetaMoments(np.zeros(3), 0.5), 1.0, [0.0])
    with pytest.raises(DomainError):
        write_spreading_outputs([report], tmp_path)
