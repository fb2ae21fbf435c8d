#!/usr/bin/env python3
"""Experiment configuration."""
from __future__ import annotations

import json
import math
import typing
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from pathlib import Path

from compton_width.constants import DEFAULT_ABS_TOL
from compton_width.constants import DEFAULT_GRID_POINTS
from compton_width.constants import DEFAULT_MAX_SUBDIVISIONS
from compton_width.constants import DEFAULT_REL_TOL
from compton_width.constants import DEFAULT_SPAN_WIDTHS
from compton_width.exception import DomainError
from compton_width.quadrature import QuadratureSpec
from compton_width.states import Particle

# pylint: disable=too-many-instance-attributes


@dataclass
class ExperimentConfig:
    """Settings of one experiment run.

    Momenta are given in units of the mass, ``rmax`` in Compton wavelengths and
    ``t_max_widths`` in initial position widths.
    """

    mass: float = 1.0
    sigma_p_over_m: float = 0.01
    beta0: float = 0.8
    grid_points: int = DEFAULT_GRID_POINTS
    span_widths: float = DEFAULT_SPAN_WIDTHS
    tol_rel: float = DEFAULT_REL_TOL
    tol_abs: float = DEFAULT_ABS_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS
    rmax: float = 4.0
    sigma_p_list: typing.List[float] = field(default_factory=lambda: [0.5, 5.0, 50.0])
    t_max_widths: float = 1e4
    output_dir: str = "output"

    def __post_init__(self) -> None:
        self.validate()

    @property
    def particle(self) -> Particle:
        """Particle of the configured mass."""
        return Particle(self.mass)

    @property
    def sigma_p(self) -> float:
        """Momentum width in absolute units."""
        return self.sigma_p_over_m * self.mass

    def quadrature_spec(self) -> QuadratureSpec:
        """QuadratureSpec from the tolerance fields."""
        return QuadratureSpec(
            rel_tol=self.tol_rel,
            abs_tol=self.tol_abs,
            max_subdivisions=self.max_subdivisions,
        )

    def validate(self) -> None:
        """Raise DomainError for out-of-range fields."""
        for name in ("mass", "sigma_p_over_m", "span_widths", "tol_rel", "tol_abs", "rmax", "t_max_widths"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise DomainError(f"{name} must be a number, got {value!r}")
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive, got {value}")
        if not (isinstance(self.beta0, (int, float)) and 0.0 <= self.beta0 < 1.0):
            raise DomainError(f"beta0 must lie in [0, 1), got {self.beta0}")
        for name in ("grid_points", "max_subdivisions"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if self.grid_points < 3:
            raise DomainError(f"grid_points must be at least 3, got {self.grid_points}")
        if self.max_subdivisions < 1:
            raise DomainError(f"max_subdivisions must be positive, got {self.max_subdivisions}")
        if not isinstance(self.sigma_p_list, list) or not self.sigma_p_list:
            raise DomainError("sigma_p_list must be a non-empty list")
        if any(not (isinstance(s, (int, float)) and s > 0) for s in self.sigma_p_list):
            raise DomainError(f"sigma_p_list must hold positive numbers, got {self.sigma_p_list}")
        if not isinstance(self.output_dir, str) or not self.output_dir:
            raise DomainError("output_dir must be a non-empty path")

    def to_dict(self) -> dict:
        """Convert the configuration to a dictionary."""
        return asdict(self)

    def save(self, filepath: typing.Optional[str | Path] = None) -> Path:
        """Save the configuration (default: output_dir/config.json)."""
        path = Path(filepath) if filepath else Path(self.output_dir) / "config.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(self.to_dict(), f, indent=4, sort_keys=True, ensure_ascii=False)
            f.write("\n")
        return path

    def updated(self, **overrides: typing.Any) -> ExperimentConfig:
        """Copy with the non-None overrides applied."""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return ExperimentConfig(**data)


def load_config(filepath: str | Path) -> ExperimentConfig:
    """Load an experiment configuration from a JSON file."""
    path = Path(filepath)
    if not path.exists():
        raise FileNotFoundError(f"File {path} does not exist.")
    with open(path, encoding="utf-8") as f:
        data = json.load(f)

    if not isinstance(data, dict):
        raise DomainError("Config file must contain a JSON object.")
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise DomainError(f"Unknown config keys: {', '.join(unknown)}")
    return ExperimentConfig(**data)
