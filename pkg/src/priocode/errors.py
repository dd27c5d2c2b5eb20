"""Exception types shared across the package."""

from __future__ import annotations


class PRioError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(PRioError, ValueError):
    """An argument is outside the domain an operation accepts."""


class DimensionError(PRioError, ValueError):
    """Two vectors (or a vector and a matrix) have incompatible lengths."""


class ChainError(PRioError, ValueError):
    """A sequence of binary vectors is not monotone under the bitwise order."""


class CapacityExhausted(PRioError):
    """No admissible write exists for the requested datum."""


class DispatchGap(PRioError, RuntimeError):
    """A constructive solver met an input that none of its cases covers.

    This signals a bug or a hole in the case analysis, never bad user input.
    """
