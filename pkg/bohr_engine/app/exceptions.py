"""
Error types raised by the Bohr radius engine
"""

from typing import Optional


class BohrEngineError(Exception):
    """Base class for every error raised by the engine."""


class InvalidParameterError(BohrEngineError, ValueError):
    """A parameter is outside the set the computation supports."""


class DomainError(BohrEngineError, ValueError):
    """An argument lies outside the evaluation domain (e.g. r outside [0, 1 - 1e-6])."""


class BoundUnavailableError(BohrEngineError):
    """The geometric tail bound does not apply at this truncation order; increase K."""


class NoRootError(BohrEngineError):
    """No sign change of the gap function was found on (0, 1)."""


class NumericError(BohrEngineError):
    """A gap function evaluated to a nonfinite value."""

    def __init__(self, message: str, r: Optional[float] = None):
        super().__init__(message)
        self.r = r
