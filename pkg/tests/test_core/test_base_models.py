"""Tests for base model functionality."""
import json

import pytest
from pydantic import ValidationError

from rectakit._core.base_models import BaseKitModel, CheckResult, CheckStatus
from rectakit.graph import DistanceProfile
from rectakit.rect import KernelReport, LocalRank3Certificate

pytestmark = [pytest.mark.unit, pytest.mark.models]


class TestBaseKitModel:
    """Test BaseKitModel functionality."""

    def test_base_model_creation(self):
        """Test creating a base kit model."""
        class TestModel(BaseKitModel):
            name: str
            value: int

        model = TestModel(name="test", value=42)
        assert model.name == "test"
        assert model.value == 42

    def test_base_model_extra_fields_ignored(self):
        """Test that extra fields are ignored."""
        class TestModel(BaseKitModel):
            name: str

        model = TestModel(name="test", extra_field="ignored")
        assert model.name == "test"
        assert not hasattr(model, "extra_field")

    def test_assignment_is_validated(self):
        """Test that assignments after creation are validated."""
        class TestModel(BaseKitModel):
            value: int

        model = TestModel(value=1)
        with pytest.raises(ValidationError):
            model.value = "not a number"

    def test_field_order_is_serialization_order(self):
        """Test that JSON keys follow field declaration order."""
        class TestModel(BaseKitModel):
            zeta: int
            alpha: int

        dumped = json.loads(TestModel(zeta=1, alpha=2).model_dump_json())
        assert list(dumped) == ["zeta", "alpha"]


class TestCheckResult:
    """Test CheckResult functionality."""

    def test_status_serializes_as_value(self):
        """Test that the status enum is stored by value."""
        result = CheckResult(name="rectagraph", status=CheckStatus.PASS)
        assert result.status == "PASS"
        assert result.passed
        assert json.loads(result.model_dump_json())["status"] == "PASS"

    def test_failed_and_error_results(self):
        """Test that only PASS counts as passed."""
        assert not CheckResult(name="x", status=CheckStatus.FAIL).passed
        assert not CheckResult(name="x", status=CheckStatus.ERROR, details={"code": "TOO_LARGE"}).passed

    def test_invalid_status(self):
        """Test that unknown statuses are rejected."""
        with pytest.raises(ValidationError):
            CheckResult(name="x", status="MAYBE")


class TestReportModels:
    """Test the domain reports built on BaseKitModel."""

    def test_kernel_report_field_order(self):
        """Test that kernel reports serialize n, fibre_size, linear, code first."""
        report = KernelReport(n=3, fibre_size=1, linear=True, rank=0)
        assert list(json.loads(report.model_dump_json()))[:4] == ["n", "fibre_size", "linear", "code"]

    def test_certificate_truthiness(self):
        """Test that certificates are truthy exactly when accepted."""
        assert LocalRank3Certificate(n=3, accepted=True, vertex_orbits=1)
        assert not LocalRank3Certificate(n=3, accepted=False, vertex_orbits=1, reason="vertex 0: rank 2")

    def test_distance_profile_intersection_array(self):
        """Test reading an intersection array off a constant profile."""
        profile = DistanceProfile(
            source=0,
            shell_sizes=[1, 3, 3, 1],
            c_values=[[0], [1], [2], [3]],
            a_values=[[0], [0], [0], [0]],
            b_values=[[3], [2], [1], [0]],
        )
        assert profile.depth == 3
        assert profile.reached == 8
        assert profile.intersection_array() == ([3, 2, 1], [1, 2, 3])

    def test_distance_profile_irregular_shell(self):
        """Test that a shell with several c values has no intersection array."""
        profile = DistanceProfile(source=0, shell_sizes=[1, 2, 1], c_values=[[0], [1], [1, 2]], a_values=[[0], [0], [0]], b_values=[[2], [1], [0]])
        assert profile.single("c", 2) is None
        assert profile.intersection_array() is None
