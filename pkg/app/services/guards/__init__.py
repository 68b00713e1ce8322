"""Parameter guard services."""

from app.services.guards.service import ParameterGuardService, is_prime, primes_up_to

__all__ = ["ParameterGuardService", "is_prime", "primes_up_to"]
