"""Top-level package for compton-width."""

from compton_width.config import ExperimentConfig, load_config
from compton_width.quadrature import QuadratureSpec, RegulatorSpec
from compton_width.states import BoostParams, Particle, make_gaussian
from .__version__ import __version__

__all__ = [
    "__version__",
    "BoostParams",
    "ExperimentConfig",
    "Particle",
    "QuadratureSpec",
    "RegulatorSpec",
    "load_config",
    "make_gaussian",
]

# Instead of adding elements to __all__,
# prefixing methods/variables with "__" is preferred.
# Imports like "from x import *" are discouraged.
