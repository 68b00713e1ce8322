"""Line bundles on the projective line over F_p and their Frobenius splittings."""

from __future__ import annotations

from dataclasses import dataclass

from app.core.exceptions import InvalidOperandError
from app.services.guards import ParameterGuardService
from app.services.kcore import KClass

OMEGA_DEGREE = -2


@dataclass(frozen=True, slots=True)
class ProjLineBundle:
    """O(d) on the projective line over F_p."""

    d: int
    p: int

    def __post_init__(self) -> None:
        ParameterGuardService.ensure_prime(action="proj_line_bundle", p=self.p)

    def tensor(self, other: ProjLineBundle) -> ProjLineBundle:
        """Twists add; both bundles must live over the same prime."""
        if other.p != self.p:
            raise InvalidOperandError(
                message=f"Cannot tensor bundles over F_{self.p} and F_{other.p}.",
                error_code="characteristic_mismatch",
                context={"left": self.p, "right": other.p},
            )
        return ProjLineBundle(self.d + other.d, self.p)

    def render(self) -> str:
        """Render as ``O(d)``."""
        return f"O({self.d})"


@dataclass(frozen=True, slots=True)
class FrobeniusDecomposition:
    """Twists e_0, ..., e_{p-1} of the line summands of F_*O(d)."""

    p: int
    summands: tuple[int, ...]

    @property
    def rank(self) -> int:
        """Number of summands."""
        return len(self.summands)

    def euler_sum(self) -> int:
        """Σ (e_i + 1), the Euler characteristic of the pushforward."""
        return sum(e + 1 for e in self.summands)

    def as_kclass(self) -> KClass:
        """The pushforward as a split class."""
        return KClass.lines(self.summands)

    def render(self) -> str:
        """Summands in residue order, e.g. ``O(0) + O(-1)``."""
        return " + ".join(f"O({e})" for e in self.summands)


@dataclass(frozen=True, slots=True)
class SummandComparison:
    """Summand-wise comparison of F*F_*O with τ(Ω) on the projective line."""

    p: int
    pullback: KClass
    tau: KClass

    @property
    def matches(self) -> bool:
        """True iff the two splittings coincide summand by summand."""
        return self.pullback == self.tau
