"""Unit tests for ParameterGuardService."""

import pytest
from app.core.exceptions import InvalidOperandError, NotPrimeError
from app.services.guards import ParameterGuardService, is_prime, primes_up_to


class TestPrimality:
    """Test the primality helpers."""

    @pytest.mark.parametrize(("n", "expected"), [(-7, False), (0, False), (1, False), (2, True), (91, False), (97, True)])
    def test_is_prime(self, n, expected):
        """Test trial-division primality."""
        assert is_prime(n) is expected

    def test_primes_up_to(self):
        """Test the ascending prime list."""
        assert primes_up_to(13) == [2, 3, 5, 7, 11, 13]
        assert primes_up_to(1) == []


class TestParameterGuardService:
    """Test guard checks and their error payloads."""

    def test_ensure_prime_returns_value(self):
        """Test that a prime passes through."""
        assert ParameterGuardService.ensure_prime(action="coeff_table", p=31) == 31

    def test_ensure_prime_raises_with_context(self):
        """Test the error code and context for a composite."""
        with pytest.raises(NotPrimeError) as exc:
            ParameterGuardService.ensure_prime(action="coeff_table", p=15)
        assert exc.value.error_code == "not_prime"
        assert exc.value.context["action"] == "coeff_table"
        assert exc.value.exit_code == 2

    def test_ensure_prime_rejects_bool(self):
        """Test that True is not mistaken for an integer prime."""
        with pytest.raises(NotPrimeError):
            ParameterGuardService.ensure_prime(action="x", p=True)

    def test_ensure_at_least(self):
        """Test the lower-bound check and its error code."""
        assert ParameterGuardService.ensure_at_least(action="adams", name="k", value=2, minimum=2) == 2
        with pytest.raises(InvalidOperandError) as exc:
            ParameterGuardService.ensure_at_least(action="adams", name="k", value=1, minimum=2)
        assert exc.value.error_code == "k_out_of_range"

    def test_ensure_non_negative(self):
        """Test the zero lower bound."""
        assert ParameterGuardService.ensure_non_negative(action="mumford", name="n", value=0) == 0
        with pytest.raises(InvalidOperandError):
            ParameterGuardService.ensure_non_negative(action="mumford", name="n", value=-1)
