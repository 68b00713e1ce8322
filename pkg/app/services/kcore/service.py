"""Adams operations, Bott classes and the p-localized K-group of the projective line."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from app.core.exceptions import InvalidOperandError, NonInvertibleClassError
from app.core.log_config import get_logger
from app.services.guards import ParameterGuardService
from app.services.kcore.classes import CondensedClass, KClass, LineClass
from app.services.polyring import Poly

logger = get_logger("service.kcore")
guard = ParameterGuardService()

ENUMERATION_RANK_LIMIT = 4


def adams(k: int, c: KClass) -> KClass:
    """k-th Adams operation: O(d) goes to O(k·d), multiplicities kept."""
    guard.ensure_at_least(action="adams", name="k", value=k, minimum=2)
    counts: dict[LineClass | int, int] = {}
    for line, mult in c.terms:
        image = line.power(k)
        counts[image] = counts.get(image, 0) + mult
    return KClass.from_counts(counts)


def bott(k: int, c: KClass) -> KClass:
    """Bott class θ^k of an effective sum of line classes.

    For a single line L this is 1 + L + ... + L^(k-1); sums go to products.
    """
    guard.ensure_at_least(action="bott", name="k", value=k, minimum=2)
    if not c.is_effective():
        raise InvalidOperandError(
            message=f"Bott class needs an effective class, got '{c.render()}'.",
            error_code="virtual_bott_argument",
            context={"class": c.render(), "k": k},
        )
    result = KClass.one()
    for line, mult in c.terms:
        factor = KClass.lines(i * line.degree for i in range(k))
        for _ in range(mult):
            result = result * factor
    logger.debug("bott(k={}, {}) has rank {}", k, c.render(), result.rank)
    return result


def tau_rank(r: int, p: int) -> int:
    """Number of exponent tuples 0 <= i_j < p of length r, i.e. p^r."""
    guard.ensure_prime(action="tau_rank", p=p)
    guard.ensure_non_negative(action="tau_rank", name="r", value=r)
    if r <= ENUMERATION_RANK_LIMIT:
        return sum(1 for _ in product(range(p), repeat=r))
    return p**r


def tau_of_omega(p: int, omega_fiber_degree: int) -> KClass:
    """Class 1 + ω + ... + ω^(p-1) with ω of the given degree."""
    guard.ensure_prime(action="tau_of_omega", p=p)
    return KClass.lines(k * omega_fiber_degree for k in range(p))


def condense(c: KClass) -> CondensedClass:
    """Rank/degree homomorphism."""
    return CondensedClass.of(c.rank, c.degree)


def condensed_multiply(a: CondensedClass, b: CondensedClass) -> CondensedClass:
    """(r1, e1)·(r2, e2) = (r1·r2, r1·e2 + r2·e1)."""
    return a * b


def condensed_inverse(c: CondensedClass, p: int) -> CondensedClass:
    """Inverse in K_0[1/p]: (1/r, -e/r^2).

    Raises:
        NonInvertibleClassError: The rank is not ±p^m.
    """
    guard.ensure_prime(action="condensed_inverse", p=p)
    if not c.is_unit(p):
        raise NonInvertibleClassError(
            message=f"Class {c.render()} has rank {c.rank}, not a unit after inverting {p}.",
            context={"rank": str(c.rank), "degree": str(c.degree), "p": p},
        )
    r = c.rank
    return CondensedClass.of(1 / r, -c.degree / (r * r))


def euler_char(c: CondensedClass) -> Fraction | Poly:
    """χ on the projective line, extended additively: rank + degree."""
    return c.rank + c.degree
