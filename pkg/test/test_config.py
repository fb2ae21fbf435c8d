#!/usr/bin/env python
"""Tests for the experiment configuration"""
import json
from pathlib import Path

import pytest

from compton_width.config import ExperimentConfig
from compton_width.config import load_config
from compton_width.exception import DomainError

# pylint: disable=line-too-long
# flake8: noqa: E501


def test_defaults() -> None:
    config = ExperimentConfig()
    assert config.sigma_p == pytest.approx(0.01)
    assert config.particle.mass == 1.0
    spec = config.quadrature_spec()
    assert spec.rel_tol == 1e-10
    assert spec.abs_tol == 1e-13
    assert spec.max_subdivisions == 12


def test_sigma_p_in_units_of_mass() -> None:
    config = ExperimentConfig(mass=2.0, sigma_p_over_m=0.5)
    assert config.sigma_p == pytest.approx(1.0)
    assert config.particle.lambda_c == pytest.approx(0.5)


@pytest.mark.parametrize(
    "overrides",
    [
        {"mass": 0.0},
        {"mass": -1.0},
        {"mass": True},
        {"sigma_p_over_m": float("inf")},
        {"beta0": 1.0},
        {"beta0": -0.1},
        {"grid_points": 2},
        {"grid_points": 17.5},
        {"max_subdivisions": 0},
        {"tol_rel": 0.0},
        {"sigma_p_list": []},
        {"sigma_p_list": [1.0, -1.0]},
        {"output_dir": ""},
    ],
)
def test_invalid_config(overrides: dict) -> None:
    with pytest.raises(DomainError):
        ExperimentConfig(**overrides)


def test_updated_ignores_none() -> None:
    config = ExperimentConfig().updated(mass=2.0, beta0=None)
    assert config.mass == 2.0
    assert config.beta0 == 0.8
    with pytest.raises(DomainError):
        config.updated(beta0=1.5)


def test_save_and_load(tmp_path: Path) -> None:
    config = ExperimentConfig(beta0=0.6, sigma_p_list=[1.0, 2.0], output_dir=str(tmp_path / "out"))
    path = config.save()
    assert path == tmp_path / "out" / "config.json"
    assert load_config(path) == config


def test_load_partial_config(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"beta0": 0.9, "grid_points": 65}), encoding="utf-8")
    config = load_config(path)
    assert config.beta0 == 0.9
    assert config.grid_points == 65
    assert config.mass == 1.0


def test_load_rejects_unknown_keys(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"beta": 0.9}), encoding="utf-8")
    with pytest.raises(DomainError, match="Unknown config keys: beta"):
        load_config(path)


def test_load_rejects_non_objects(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(DomainError):
        load_config(path)
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "missing.json")
