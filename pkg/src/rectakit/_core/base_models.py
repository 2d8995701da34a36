"""Base models for every serialized rectakit result."""

from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field


class BaseKitModel(BaseModel):
    """Base model for all reports and certificates.

    Field declaration order is the serialization order, so subclasses
    declare fields in the order they should appear in JSON output.
    """

    model_config = ConfigDict(
        # Allow extra fields for forward compatibility
        extra="ignore",
        # Use enum values instead of enum objects in serialization
        use_enum_values=True,
        # Validate assignments after model creation
        validate_assignment=True,
        # Allow population by field name or alias
        populate_by_name=True,
    )


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASS = "PASS"
    FAIL = "FAIL"
    ERROR = "ERROR"


class CheckResult(BaseKitModel):
    """Outcome of one named check with its supporting data."""

    name: str = Field(..., description="Check name")
    status: CheckStatus = Field(..., description="PASS, FAIL or ERROR")
    details: Dict[str, Any] = Field(default_factory=dict, description="Check-specific data")

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS
