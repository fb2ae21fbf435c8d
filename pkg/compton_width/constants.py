#!/usr/bin/env python
"""Constants for compton-width"""
from enum import Enum

# pylint: disable=too-few-public-methods

# Natural units (hbar = c = 1): masses, momenta and energies share one unit,
# lengths and times are measured in its inverse.
UNIT_NOTE = "natural units hbar=c=1; momenta in units of m, lengths and times in units of 1/m"

# Amplitudes of the Gaussian family are negligible (e^-36) beyond this many
# momentum widths from their peak.
GAUSSIAN_SUPPORT_WIDTHS = 12.0

NORM_TOLERANCE = 1e-6

# specfun crossover points (frozen)
J0_ASYMPTOTIC_CROSSOVER = 25.0
K_ASYMPTOTIC_CROSSOVER = 20.0
K_TRAPEZOID_STEP = 0.1

# quadrature defaults
DEFAULT_REL_TOL = 1e-10
DEFAULT_ABS_TOL = 1e-13
DEFAULT_MAX_SUBDIVISIONS = 12
GAUSS_LEGENDRE_NODES = 24
DEFAULT_EPSILON_LADDER = (0.4, 0.2, 0.1, 0.05, 0.025)
DEFAULT_EXTRAPOLATION_ORDER = 3
# halvings appended to the ladder until the extrapolation settles
DEFAULT_LADDER_EXTENSIONS = 6

# transforms / boost grids
DEFAULT_GRID_POINTS = 129
DEFAULT_SPAN_WIDTHS = 6.0
NORM_GRID_POINTS = 257
NORM_SPAN_WIDTHS = 8.0

# boosted-Gaussian expansion: validity ratio sigma_p / (m beta0)
VALIDITY_WARN = 0.05
VALIDITY_LIMIT = 0.1


class CutoffPolicy(Enum):
    """Treatment of semi-infinite integration ranges"""

    FIXED_CUTOFF = "fixed_cutoff"
    TAIL_ESTIMATE = "tail_estimate"


class AmplitudeKind(Enum):
    """Momentum amplitude families"""

    ISOTROPIC_GAUSSIAN = "isotropic_gaussian"
    BOOSTED = "boosted"
    PHASE_SHIFTED = "phase_shifted"
    MOMENTUM_SHIFTED = "momentum_shifted"
    GLOBAL_PHASE = "global_phase"
    TIME_PHASE = "time_phase"
    TABULATED = "tabulated"


class ExitCodes:
    """Exit codes"""

    SUCCESS = 0
    USAGE = 2
    CHECK_FAILED = 3
    CONVERGENCE = 4


class Colors:
    """Colors for CLI printing"""

    RED = "\033[91m"
    GREEN = "\033[92m"
    ORANGE = "\033[93m"
    BLUE = "\033[94m"
    GREY = "\033[90m"
    END = "\033[0m"


class CheckCode(Enum):
    """Codes of the numerical checks"""

    # -------------------------------------------------------
    # Kernels (special functions)
    # -------------------------------------------------------

    KERNEL_RATIO_CONSTANT = (
        "KERNEL_0001",
        "kernel-ratio-constant",
        "Regulated localized-state profile is proportional to (m/r)^(5/4) K_5/4(mr)",
    )
    KERNEL_EXPONENTIAL_TAIL = (
        "KERNEL_0002",
        "kernel-exponential-tail",
        "Localized-state profile decays like exp(-mr)",
    )
    KERNEL_MASS_SCALING = (
        "KERNEL_0003",
        "kernel-mass-scaling",
        "Localized-state profile scales as m^(5/2) at fixed mr",
    )
    KERNEL_DELTA_PAIRING = (
        "KERNEL_0004",
        "kernel-delta-pairing",
        "Smeared position amplitude of the localized state reproduces g(0)",
    )

    # -------------------------------------------------------
    # Norms and identities
    # -------------------------------------------------------

    NORM_MOMENTUM = (
        "NORM_0001",
        "norm-momentum",
        "Momentum probability amplitude is normalized",
    )
    NORM_POSITION = (
        "NORM_0002",
        "norm-position",
        "Position probability amplitude is normalized (Parseval)",
    )
    NORM_BOOST_UNITARY = (
        "NORM_0003",
        "norm-boost-unitary",
        "Boost preserves the probability norm",
    )
    NORM_SCALAR_KG = (
        "NORM_0004",
        "norm-scalar-kg",
        "Scalar momentum amplitude has unit Klein-Gordon norm",
    )
    NORM_NW_IDENTITY = (
        "NORM_0005",
        "norm-nw-identity",
        "Newton-Wigner operator identity holds",
    )
    NORM_SCALAR_NOT_CONSERVED = (
        "NORM_0006",
        "norm-scalar-not-conserved",
        "Scalar amplitude norm changes under the boost",
    )

    # -------------------------------------------------------
    # Quadrature
    # -------------------------------------------------------

    QUAD_AXISYM_RADIAL = (
        "QUAD_0001",
        "quad-axisym-radial",
        "Axisymmetric and spherical Fourier reductions agree",
    )
    QUAD_CONVERGENCE = (
        "QUAD_0002",
        "quad-convergence",
        "Quadrature did not converge",
    )

    # -------------------------------------------------------
    # Shapes and widths
    # -------------------------------------------------------

    SHAPE_MINIMAL_WIDTH = (
        "SHAPE_0001",
        "shape-minimal-width",
        "Gaussian packet has position width 1/(2 sigma_p)",
    )
    SHAPE_CONTRACTION = (
        "SHAPE_0002",
        "shape-contraction",
        "Parallel width is contracted to sigma_x / gamma0",
    )
    SHAPE_PERPENDICULAR = (
        "SHAPE_0003",
        "shape-perpendicular",
        "Perpendicular width is unchanged by the boost",
    )
    SHAPE_SUBMINIMAL_WIDTH = (
        "SHAPE_0004",
        "shape-subminimal-width",
        "Scalar amplitude width equals 1/(2 sigma_p)",
    )
    SHAPE_NOT_SUBMINIMAL = (
        "SHAPE_0005",
        "shape-not-subminimal",
        "Scalar amplitude is wider than the Compton wavelength",
    )

    # -------------------------------------------------------
    # Spreading
    # -------------------------------------------------------

    SPREAD_CAUSAL = (
        "SPREAD_0001",
        "spread-causal",
        "Spreading velocity stays below the speed of light",
    )
    SPREAD_ASYMPTOTIC_RATE = (
        "SPREAD_0002",
        "spread-asymptotic-rate",
        "Per-axis spreading rate approaches sqrt(<beta^2>/3)",
    )

    # -------------------------------------------------------
    # Validity
    # -------------------------------------------------------

    VALID_RATIO_HIGH = (
        "VALID_0001",
        "validity-ratio-high",
        "Validity ratio sigma_p/(m beta0) is not small",
    )

    def __init__(self, code: str, label: str, message: str) -> None:
        self.code = code
        self.label = label
        self.message = message
