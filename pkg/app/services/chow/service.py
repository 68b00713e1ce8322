"""Degree calculus for det Rf_* and the Deligne pairing in the symbolic model.

The degree of det Rf_*M is modelled by D(M) = ½·M·(M − ω) + λ with λ a free
symbol; the Deligne pairing ⟨A, B⟩ has degree A·B.
"""

from __future__ import annotations

from math import comb

from app.core.exceptions import InvalidOperandError
from app.services.chow.classes import (
    FIBER_DEGREE,
    GENUS,
    LAMBDA,
    OMEGA,
    DivisorClass,
    GradedLine,
    IntersectionForm,
    VirtualCombo,
)
from app.services.guards import ParameterGuardService
from app.services.polyring import Poly

guard = ParameterGuardService()

FORM = IntersectionForm()
lam = Poly.symbol(LAMBDA)


def pairing_degree(
    A: DivisorClass, B: DivisorClass, form: IntersectionForm = FORM
) -> Poly:
    """Degree of ⟨A, B⟩: the intersection symbol pair(A, B)."""
    return form.pair(A, B)


def det_degree(M: DivisorClass, form: IntersectionForm = FORM) -> Poly:
    """D(M) = ½·M·(M − ω) + λ."""
    return form.pair(M, M - OMEGA) / 2 + lam


def serre_dual(M: DivisorClass) -> DivisorClass:
    """Hom(M, ω) = ω − M."""
    return OMEGA - M


def virtual_det_degree(v: VirtualCombo, form: IntersectionForm = FORM) -> Poly:
    """Σ multiplicity·D(class) over a virtual combination."""
    total = Poly.zero()
    for cls_, mult in v.terms:
        total = total + det_degree(cls_, form) * mult
    return total


def virtual_pairing_degree(
    u: VirtualCombo, v: VirtualCombo, form: IntersectionForm = FORM
) -> Poly:
    """Degree of ⟨det u, det v⟩."""
    return pairing_degree(u.determinant(), v.determinant(), form)


def virtual_pairing_identity(
    u: VirtualCombo, v: VirtualCombo, form: IntersectionForm = FORM
) -> tuple[Poly, Poly]:
    """Degrees of ⟨det u, det v⟩ and det Rf_*(u ⊗ v) for rank-0 combinations.

    Raises:
        InvalidOperandError: Either combination has non-zero rank.
    """
    for name, combo in (("u", u), ("v", v)):
        if combo.rank:
            raise InvalidOperandError(
                message=f"{name} = {combo.render()} has rank {combo.rank}; a rank-0 combination is required.",
                error_code="nonzero_rank",
                context={"operand": name, "rank": combo.rank},
            )
    return virtual_pairing_degree(u, v, form), virtual_det_degree(u * v, form)


def power_expansion(
    H0: DivisorClass, H1: DivisorClass, H: DivisorClass, l: int
) -> VirtualCombo:
    """Binomial expansion of (H0 − H1)^⊗l ⊗ H as signed divisor classes."""
    guard.ensure_at_least(action="power_expansion", name="l", value=l, minimum=1)
    counts: dict[DivisorClass, int] = {}
    for k in range(l + 1):
        cls_ = H0 * (l - k) + H1 * k + H
        counts[cls_] = counts.get(cls_, 0) + (-1) ** k * comb(l, k)
    return VirtualCombo.from_counts(counts)


def power_triviality(
    H0: DivisorClass,
    H1: DivisorClass,
    H: DivisorClass,
    l: int,
    form: IntersectionForm = FORM,
) -> Poly:
    """Degree of det Rf_*((H0 − H1)^⊗l ⊗ H); zero whenever l ≥ 3."""
    return virtual_det_degree(power_expansion(H0, H1, H, l), form)


def cube_triviality(
    H0: DivisorClass, H1: DivisorClass, H: DivisorClass, form: IntersectionForm = FORM
) -> Poly:
    """The l = 3 case of :func:`power_triviality`."""
    return power_triviality(H0, H1, H, 3, form)


def graded_tensor(a: GradedLine, b: GradedLine) -> GradedLine:
    """(deg_a + deg_b, grading_a + grading_b)."""
    return a.tensor(b)


def euler_characteristic(M: DivisorClass) -> Poly:
    """Riemann-Roch on a fiber: a·d + b·(2g − 2) + 1 − g in symbols d, g."""
    d, g = Poly.symbol(FIBER_DEGREE), Poly.symbol(GENUS)
    return d * M.a + (2 * g - 2) * M.b + 1 - g


def det_line(
    M: DivisorClass, *, fiber_degree: int, genus: int, form: IntersectionForm = FORM
) -> GradedLine:
    """det Rf_*M as a graded line with grading χ(M) at a concrete (d, g)."""
    grading = euler_characteristic(M).evaluate({FIBER_DEGREE: fiber_degree, GENUS: genus})
    return GradedLine(det_degree(M, form), int(grading))


def self_pairing_sign(fiber_degree: int) -> int:
    """Sign (−1)^deg L of the symmetry ⟨L, L⟩ ≅ ⟨L, L⟩."""
    return -1 if fiber_degree % 2 else 1


def graded_dual(a: GradedLine) -> GradedLine:
    """(−deg, −grading)."""
    return a.dual()


def graded_power(a: GradedLine, k: int) -> GradedLine:
    return a.power(k)
