"""Divisor classes on a family of curves and graded lines on its base."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from app.services.polyring import Poly

LL, LW, WW, LAMBDA = "LL", "Lw", "ww", "lam"
FIBER_DEGREE, GENUS = "d", "g"


@dataclass(frozen=True, slots=True, order=True)
class DivisorClass:
    """a·L + b·ω in the rank-2 lattice generated by L and ω."""

    a: int = 0
    b: int = 0

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        """True for the trivial class O."""
        return self.a == 0 and self.b == 0

    def render(self) -> str:
        """Render as e.g. ``2L + w``; the zero class is ``O``."""
        if self.is_zero():
            return "O"
        parts: list[str] = []
        for coeff, name in ((self.a, "L"), (self.b, "w")):
            if not coeff:
                continue
            body = name if abs(coeff) == 1 else f"{abs(coeff)}{name}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)


O = DivisorClass(0, 0)
L = DivisorClass(1, 0)
OMEGA = DivisorClass(0, 1)


@dataclass(frozen=True, slots=True)
class IntersectionForm:
    """Symmetric bilinear pairing of divisor classes into intersection symbols."""

    ll: str = LL
    lw: str = LW
    ww: str = WW

    def pair(self, x: DivisorClass, y: DivisorClass) -> Poly:
        """pair(aL+bω, cL+dω) = ac·LL + (ad+bc)·Lw + bd·ww."""
        return Poly(
            {
                ((self.ll, 1),): x.a * y.a,
                ((self.lw, 1),): x.a * y.b + x.b * y.a,
                ((self.ww, 1),): x.b * y.b,
            }
        )


@dataclass(frozen=True, slots=True)
class VirtualCombo:
    """Formal integer combination of divisor classes (a virtual object).

    ``terms`` holds (class, multiplicity) pairs with nonzero multiplicities in
    class order; build it through :meth:`from_counts`.
    """

    terms: tuple[tuple[DivisorClass, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[DivisorClass, int]) -> VirtualCombo:
        """Build from ``{class: multiplicity}`` dropping zeros."""
        return cls(tuple(sorted((c, m) for c, m in counts.items() if m)))

    @classmethod
    def difference(cls, e0: DivisorClass, e1: DivisorClass) -> VirtualCombo:
        """The rank-0 combination e0 - e1."""
        return cls.from_counts({e0: 1}) - cls.from_counts({e1: 1})

    @property
    def rank(self) -> int:
        """Sum of multiplicities."""
        return sum(m for _, m in self.terms)

    def determinant(self) -> DivisorClass:
        """det of the combination: Σ m·class."""
        total = O
        for cls_, mult in self.terms:
            total = total + cls_ * mult
        return total

    def __add__(self, other: VirtualCombo) -> VirtualCombo:
        counts = dict(self.terms)
        for cls_, mult in other.terms:
            counts[cls_] = counts.get(cls_, 0) + mult
        return VirtualCombo.from_counts(counts)

    def __neg__(self) -> VirtualCombo:
        return VirtualCombo(tuple((c, -m) for c, m in self.terms))

    def __sub__(self, other: VirtualCombo) -> VirtualCombo:
        return self + (-other)

    def __mul__(self, other: VirtualCombo | int) -> VirtualCombo:
        if isinstance(other, int):
            return VirtualCombo.from_counts({c: other * m for c, m in self.terms})
        counts: dict[DivisorClass, int] = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                key = c1 + c2
                counts[key] = counts.get(key, 0) + m1 * m2
        return VirtualCombo.from_counts(counts)

    __rmul__ = __mul__

    def render(self) -> str:
        """Render as e.g. ``[2L] - 2[L + w]``."""
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for cls_, mult in self.terms:
            body = f"[{cls_.render()}]"
            if abs(mult) != 1:
                body = f"{abs(mult)}{body}"
            if not chunks:
                chunks.append(f"-{body}" if mult < 0 else body)
            else:
                chunks.append(f"- {body}" if mult < 0 else f"+ {body}")
        return " ".join(chunks)


@dataclass(frozen=True, slots=True)
class GradedLine:
    """Numerical shadow of a graded line: (degree, grading)."""

    degree: Poly
    grading: int

    @classmethod
    def unit(cls) -> GradedLine:
        """The unit object (O, 0)."""
        return cls(Poly.zero(), 0)

    def tensor(self, other: GradedLine) -> GradedLine:
        """(L, α) ⊗ (M, β) = (L ⊗ M, α + β)."""
        return GradedLine(self.degree + other.degree, self.grading + other.grading)

    def dual(self) -> GradedLine:
        """Inverse object: both fields negate."""
        return GradedLine(-self.degree, -self.grading)

    def power(self, k: int) -> GradedLine:
        """k-th tensor power, negative k through the dual."""
        return GradedLine(self.degree * k, self.grading * k)

    def symmetry_sign(self, other: GradedLine) -> int:
        """Sign of the commutativity constraint: (-1)^(α·β)."""
        return -1 if (self.grading * other.grading) % 2 else 1
