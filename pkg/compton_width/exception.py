#! /usr/bin/env python
"""Exceptions of compton-width."""
from __future__ import annotations

import typing


if typing.TYPE_CHECKING:  # pragma: no cover
    from compton_width.checks import CheckLog
    from compton_width.quadrature import QuadResult
    from compton_width.spreading import SpreadingReport


class ComptonWidthException(Exception):
    """
    Base class for all exceptions raised by this package
    """


class DomainError(ComptonWidthException, ValueError):
    """Argument outside the domain of an operation"""


class NormalizationError(DomainError):
    """Amplitude fails its norm check"""

    def __init__(self, message: str, *, norm: float) -> None:
        self.norm = norm
        super().__init__(f"{message} (norm={norm:.12g})")


class UnsupportedGeometryError(DomainError):
    """Amplitudes share no symmetry axis"""


class ConvergenceError(ComptonWidthException):
    """ConvergenceError Exception"""

    def __init__(self, message: str, *, best_estimate: QuadResult) -> None:
        self.best_estimate = best_estimate
        super().__init__(
            f"{message} (best estimate {complex(best_estimate.value):.12g}, "
            f"error {best_estimate.est_error:.3g})"
        )


class ValidityError(ComptonWidthException):
    """Boost experiment outside the validity regime of the quadratic expansion"""

    def __init__(self, message: str, *, validity_ratio: float) -> None:
        self.validity_ratio = validity_ratio
        super().__init__(message)


class InvariantViolationError(ComptonWidthException):
    """InvariantViolationError Exception"""

    def __init__(self, message: str, *, report: SpreadingReport) -> None:
        self.report = report
        super().__init__(message)


class NumericalCheckError(ComptonWidthException):
    """NumericalCheckError Exception"""

    def __init__(self, checks: CheckLog) -> None:
        self.checks = checks
        super().__init__(
            ", ".join(m["code"] for m in checks.messages if m["is_fatal"])
        )
