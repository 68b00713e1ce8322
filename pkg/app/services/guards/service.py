"""Parameter guards shared by the algebra and verification services."""

from functools import lru_cache

from app.core.exceptions import InvalidOperandError, NotPrimeError


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Trial-division primality test (desk scale, n up to about 10**4)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


def primes_up_to(limit: int) -> list[int]:
    """Return the primes p with 2 <= p <= limit in ascending order."""
    return [n for n in range(2, limit + 1) if is_prime(n)]


class ParameterGuardService:
    """Centralized parameter validation for workbench operations."""

    @staticmethod
    def ensure_prime(*, action: str, p: int, context: dict | None = None) -> int:
        """Ensure ``p`` is prime and return it."""
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise NotPrimeError(
                message=f"Action '{action}' requires a prime, got {p!r}.",
                context={"action": action, "p": repr(p), **(context or {})},
            )
        return p

    @staticmethod
    def ensure_at_least(
        *,
        action: str,
        name: str,
        value: int,
        minimum: int,
        context: dict | None = None,
    ) -> int:
        """Ensure an integer parameter is at least ``minimum`` and return it."""
        if value < minimum:
            raise InvalidOperandError(
                message=(
                    f"Action '{action}' requires {name} >= {minimum}, got {value}."
                ),
                error_code=f"{name}_out_of_range",
                context={
                    "action": action,
                    name: value,
                    "minimum": minimum,
                    **(context or {}),
                },
            )
        return value

    @classmethod
    def ensure_non_negative(
        cls, *, action: str, name: str, value: int, context: dict | None = None
    ) -> int:
        """Ensure an integer parameter is non-negative and return it."""
        return cls.ensure_at_least(
            action=action, name=name, value=value, minimum=0, context=context
        )
