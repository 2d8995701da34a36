"""Tests for the exception hierarchy."""

import pytest

from rectakit._core.base_exceptions import (
    DimensionTooLargeError,
    DisconnectedError,
    HypothesesFailError,
    InconsistentCoveringError,
    InvalidFormatError,
    LengthMismatchError,
    LoopsError,
    NonLinearKernelError,
    NotAutomorphismError,
    NotAutomorphismGroupError,
    NotEvenError,
    NotLocallyTriangularError,
    NotTransitiveError,
    QuotientTooLargeError,
    RectakitError,
    RegistryVerificationError,
    TooLargeError,
)

pytestmark = [pytest.mark.unit, pytest.mark.exceptions]


class TestRectakitError:
    """Test the base error."""

    def test_message_and_details(self):
        """Test that message, code and details are kept."""
        error = RectakitError("something broke", {"vertex": 3})
        assert error.message == "something broke"
        assert error.code == "RECTAKIT_ERROR"
        assert error.details == {"vertex": 3}

    def test_str_joins_code_and_details(self):
        """Test the ' | '-joined string form."""
        error = DimensionTooLargeError(20, 16)
        assert str(error) == "Code dimension 20 exceeds the enumeration limit 16 | Code: DIMENSION_TOO_LARGE | dimension: 20 | limit: 16"

    def test_details_default_to_empty(self):
        """Test that details are optional."""
        assert RectakitError("plain").details == {}
        assert str(RectakitError("plain")) == "plain | Code: RECTAKIT_ERROR"


class TestErrorCodes:
    """Test that every subclass carries its machine-readable code."""

    @pytest.mark.parametrize(
        "error, code",
        [
            (DimensionTooLargeError(17, 16), "DIMENSION_TOO_LARGE"),
            (QuotientTooLargeError(25, 24), "QUOTIENT_TOO_LARGE"),
            (LengthMismatchError(24, 23), "LENGTH_MISMATCH"),
            (LoopsError([1, 2]), "LOOPS"),
            (DisconnectedError(2), "DISCONNECTED"),
            (TooLargeError(5000, 4096), "TOO_LARGE"),
            (NotTransitiveError(2), "NOT_TRANSITIVE"),
            (NotAutomorphismError(0), "NOT_AUTOMORPHISM"),
            (NotEvenError(), "NOT_EVEN"),
            (HypothesesFailError("a_2 is not 0"), "HYPOTHESES_FAIL"),
            (InconsistentCoveringError("two cube neighbours share an image", 5, (1, 2)), "INCONSISTENT"),
            (NonLinearKernelError(8, 4), "NON_LINEAR_KERNEL"),
            (NotLocallyTriangularError(0), "NOT_LOCALLY_TRIANGULAR"),
            (NotAutomorphismGroupError(1, (0, 1)), "NOT_AUTOMORPHISM_GROUP"),
            (InvalidFormatError("edge list", 3, "expected 'u v'"), "INVALID_FORMAT"),
            (RegistryVerificationError("M24", "order 1"), "REGISTRY_VERIFICATION"),
        ],
    )
    def test_codes(self, error, code):
        """Test the code of each error and that it is a RectakitError."""
        assert isinstance(error, RectakitError)
        assert error.code == code
        assert f"Code: {code}" in str(error)

    def test_salient_fields(self):
        """Test that constructor arguments are exposed as attributes and details."""
        error = InconsistentCoveringError("a quadrangle collapses", 12, (2, 3))
        assert error.cube_vertex == 12
        assert error.details == {"cube_vertex": 12, "coordinates": [2, 3]}

        error = NotAutomorphismGroupError(2, (4, 5))
        assert error.generator == 2
        assert error.details["edge"] == [4, 5]

        error = InvalidFormatError("code file", 2, "expected 24 binary characters")
        assert error.line == 2
        assert "line 2" in error.message

    def test_catch_by_base_class(self):
        """Test that callers can catch every library error at once."""
        with pytest.raises(RectakitError) as info:
            raise LoopsError([3])
        assert info.value.coordinates == [3]
