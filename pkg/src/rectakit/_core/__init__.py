"""Core infrastructure shared by every rectakit module.

This module provides the exception hierarchy, configuration and size
guards, the pydantic base model for reports, and shared array types.
"""

from .base_models import BaseKitModel, CheckResult, CheckStatus
from .base_exceptions import (
    RectakitError,
    DimensionTooLargeError,
    QuotientTooLargeError,
    LengthMismatchError,
    LoopsError,
    DisconnectedError,
    TooLargeError,
    NotTransitiveError,
    NotAutomorphismError,
    NotEvenError,
    HypothesesFailError,
    InconsistentCoveringError,
    NonLinearKernelError,
    NotLocallyTriangularError,
    NotAutomorphismGroupError,
    InvalidFormatError,
    RegistryVerificationError,
)
from .configuration import KitConfiguration, Limits, LogLevel, OutputFormat, DEFAULT_CONFIGURATION, resolve_limits
from .types import IntArray, WordArray, BoolArray, UNREACHABLE, PermutationLike, VertexMap, as_int_array

__all__ = [
    # Models
    "BaseKitModel",
    "CheckResult",
    "CheckStatus",
    # Exceptions
    "RectakitError",
    "DimensionTooLargeError",
    "QuotientTooLargeError",
    "LengthMismatchError",
    "LoopsError",
    "DisconnectedError",
    "TooLargeError",
    "NotTransitiveError",
    "NotAutomorphismError",
    "NotEvenError",
    "HypothesesFailError",
    "InconsistentCoveringError",
    "NonLinearKernelError",
    "NotLocallyTriangularError",
    "NotAutomorphismGroupError",
    "InvalidFormatError",
    "RegistryVerificationError",
    # Configuration
    "KitConfiguration",
    "Limits",
    "LogLevel",
    "OutputFormat",
    "DEFAULT_CONFIGURATION",
    "resolve_limits",
    # Types
    "IntArray",
    "WordArray",
    "BoolArray",
    "UNREACHABLE",
    "PermutationLike",
    "VertexMap",
    "as_int_array",
]
