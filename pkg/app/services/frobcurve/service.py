"""Cohomology, Frobenius pushforward and Adams-Riemann-Roch on the projective line.

The relative Frobenius of the projective line over F_p is finite flat of rank
p, and F_*O(d) splits as ⊕ O(floor((d − i)/p)) for i = 0..p−1. The split is
cross-checked against a monomial oracle: the sections x^j y^(d−j) (and, for
negative twists, the Čech classes with both exponents negative) fall into
buckets by j mod p, and each bucket is the cohomology of one summand.
"""

from __future__ import annotations

from fractions import Fraction

from app.core.exceptions import OracleMismatchError
from app.core.log_config import get_logger
from app.services.frobcurve.classes import (
    OMEGA_DEGREE,
    FrobeniusDecomposition,
    ProjLineBundle,
    SummandComparison,
)
from app.services.guards import ParameterGuardService
from app.services.kcore import (
    CondensedClass,
    KClass,
    adams,
    condense,
    condensed_inverse,
    euler_char,
    tau_of_omega,
)
from app.services.polyring import Poly

logger = get_logger("service.frobcurve")
guard = ParameterGuardService()


def h0(b: ProjLineBundle) -> int:
    """dim H^0(O(d)) = max(d + 1, 0)."""
    return max(b.d + 1, 0)


def h1(b: ProjLineBundle) -> int:
    """dim H^1(O(d)) = max(−d − 1, 0), equal to h0 of O(−d − 2)."""
    return max(-b.d - 1, 0)


def frobenius_pushforward(b: ProjLineBundle) -> FrobeniusDecomposition:
    """Closed form e_i = floor((d − i)/p)."""
    return FrobeniusDecomposition(b.p, tuple((b.d - i) // b.p for i in range(b.p)))


def bucket_oracle(b: ProjLineBundle) -> FrobeniusDecomposition:
    """Read the splitting of F_*O(d) off monomial buckets.

    A bucket holding c > 0 global sections is O(c − 1); one holding c > 0
    H^1 classes is O(−c − 1); an empty bucket is O(−1).
    """
    p, d = b.p, b.d
    sections = [0] * p
    for j in range(d + 1):
        sections[j % p] += 1
    classes = [0] * p
    for j in range(d + 1, 0):
        classes[j % p] += 1

    twists: list[int] = []
    for i in range(p):
        if sections[i]:
            twists.append(sections[i] - 1)
        elif classes[i]:
            twists.append(-classes[i] - 1)
        else:
            twists.append(-1)
    return FrobeniusDecomposition(p, tuple(twists))


def validated_pushforward(b: ProjLineBundle) -> FrobeniusDecomposition:
    """Closed-form pushforward, asserted equal to the bucket oracle.

    Raises:
        OracleMismatchError: The closed form and the oracle disagree.
    """
    closed = frobenius_pushforward(b)
    oracle = bucket_oracle(b)
    if closed != oracle:
        raise OracleMismatchError(
            message=f"F_*O({b.d}) over F_{b.p}: closed form {closed.render()} != oracle {oracle.render()}.",
            context={"p": b.p, "d": b.d},
        )
    return closed


def frobenius_pullback(b: ProjLineBundle) -> ProjLineBundle:
    """F^*O(d) = O(p·d), the p-th Adams operation on line bundles."""
    return ProjLineBundle(b.p * b.d, b.p)


def pullback_of_pushforward(p: int) -> KClass:
    """F^*F_*O: each summand O(e_i) pulled back to O(p·e_i)."""
    pushed = frobenius_pushforward(ProjLineBundle(0, p))
    return KClass.lines(frobenius_pullback(ProjLineBundle(e, p)).d for e in pushed.summands)


def gr_identity_sides(p: int) -> tuple[CondensedClass, CondensedClass]:
    """Condensed classes of F^*F_*O and of τ(Ω) = 1 + ω + ... + ω^(p−1)."""
    guard.ensure_prime(action="check_gr_identity", p=p)
    return condense(pullback_of_pushforward(p)), condense(tau_of_omega(p, OMEGA_DEGREE))


def check_gr_identity(p: int) -> bool:
    """K_0 shadow of F^*F_*O ≅ θ^p(Ω): equal (rank, degree) pairs."""
    lhs, rhs = gr_identity_sides(p)
    logger.debug("gr identity p={}: {} vs {}", p, lhs.render(), rhs.render())
    return lhs == rhs


def compare_summands(p: int) -> SummandComparison:
    """Compare the actual splittings of F^*F_*O and τ(Ω) term by term."""
    guard.ensure_prime(action="compare_summands", p=p)
    return SummandComparison(p, pullback_of_pushforward(p), tau_of_omega(p, OMEGA_DEGREE))


def arr_sides(p: int, d: int | Poly) -> tuple[Fraction | Poly, Fraction | Poly]:
    """Both sides of Adams-Riemann-Roch for O(d) over a point.

    Left: χ(O(d)) = d + 1 (ψ^p is the identity on K_0 of a point).
    Right: χ(θ^p(Ω)^{-1} ⊗ ψ^p(O(d))) computed in K_0[1/p].
    """
    guard.ensure_prime(action="verify_arr", p=p)
    theta_inverse = condensed_inverse(condense(tau_of_omega(p, OMEGA_DEGREE)), p)
    if isinstance(d, Poly):
        psi = CondensedClass.of(1, d * p)
        lhs: Fraction | Poly = d + 1
    else:
        psi = condense(adams(p, KClass.line(d)))
        lhs = Fraction(h0(ProjLineBundle(d, p)) - h1(ProjLineBundle(d, p)))
    return lhs, euler_char(theta_inverse * psi)


def verify_arr(p: int, d: int) -> bool:
    """True iff both sides of Adams-Riemann-Roch agree for O(d)."""
    lhs, rhs = arr_sides(p, d)
    return lhs == rhs


def symbolic_arr(p: int, symbol: str = "d") -> tuple[Poly, Poly]:
    """Both ARR sides with the twist kept as a polynomial symbol."""
    lhs, rhs = arr_sides(p, Poly.symbol(symbol))
    return Poly.constant(0) + lhs, Poly.constant(0) + rhs
