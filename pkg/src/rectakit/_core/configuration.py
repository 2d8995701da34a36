"""Configuration management for rectakit computations."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class LogLevel(str, Enum):
    """Logging levels for the toolkit."""

    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"


class OutputFormat(str, Enum):
    """Report output formats."""

    JSON = "json"
    TEXT = "text"


class Limits(BaseModel):
    """Size guards shared by every module."""

    max_enumeration_dimension: int = Field(default=16, description="Largest code dimension whose codewords are enumerated", ge=1, le=24)
    max_coset_dimension: int = Field(default=24, description="Largest codimension for which a coset space is built", ge=1, le=28)
    max_explicit_quotient_dimension: int = Field(default=20, description="Largest codimension for explicit coset graphs", ge=1, le=24)
    max_isomorphism_vertices: int = Field(default=4096, description="Largest graph accepted by isomorphic()", ge=1)
    max_brute_force_vertices: int = Field(default=10, description="Largest graph accepted by brute-force automorphism search", ge=1, le=12)
    max_ordered_pair_crosscheck: int = Field(default=2000, description="Largest domain on which ranks are cross-checked against ordered pairs", ge=0)
    max_materialized_action: int = Field(default=65536, description="Largest domain for which affine actions are turned into explicit permutations", ge=1)
    max_cube_dimension: int = Field(default=24, description="Largest cube dimension for covering construction", ge=1, le=30)
    covering_chunk_size: int = Field(default=1 << 20, description="Cube vertices processed per vectorized verification chunk", ge=1024)


class KitConfiguration(BaseModel):
    """Base configuration for every rectakit computation."""

    log_level: LogLevel = Field(default=LogLevel.WARNING, description="Logging level for the toolkit")
    threads: int = Field(default=1, description="Worker threads for independent checks; results never depend on it", ge=1, le=256)
    seed: Optional[int] = Field(default=None, description="Reserved; every algorithm is deterministic")
    output_format: OutputFormat = Field(default=OutputFormat.JSON, description="Report output format")
    limits: Limits = Field(default_factory=Limits, description="Size guards")

    def describe(self) -> str:
        """Get the tool identification string recorded in reports."""
        # Import here to avoid circular imports
        try:
            from .. import __version__

            return f"rectakit/{__version__}"
        except ImportError:
            return "rectakit/unknown"


DEFAULT_CONFIGURATION = KitConfiguration()


def resolve_limits(config: Optional[KitConfiguration] = None) -> Limits:
    """Return the limits of ``config`` or of the default configuration."""
    return (config or DEFAULT_CONFIGURATION).limits
