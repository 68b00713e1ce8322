"""Degree-level checks of the Frobenius Riemann-Roch isomorphisms.

Every statement is turned into two polynomials in the intersection symbols
LL, Lw, ww and the free symbol lam (the degree of det Rf_*O). A check passes
iff both sides render identically. The binding lam ↦ ww/12 (Mumford) is never
applied implicitly: callers pass ``assume_mumford`` or ask for the derived
binding.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from random import Random
from time import perf_counter

from app.core.exceptions import InvalidOperandError, OracleMismatchError
from app.core.log_config import get_logger
from app.models import CheckStatus, DeligneForm
from app.services.chow import (
    LAMBDA,
    OMEGA,
    WW,
    DivisorClass,
    GradedLine,
    L,
    O,
    det_degree,
    det_line,
    euler_characteristic,
    graded_power,
    graded_tensor,
    pairing_degree,
    power_triviality,
    serre_dual,
    virtual_pairing_identity,
)
from app.services.chow.classes import VirtualCombo
from app.services.guards import ParameterGuardService
from app.services.polyring import Poly
from app.services.verify.schemas import CoeffEntry, CoeffTable, VerificationReport

logger = get_logger("service.verify")
guard = ParameterGuardService()

CLOSED_FORM_SAMPLE_PRIMES = (2, 3, 5, 7, 11, 13)
GRADING_SAMPLE_POINTS = tuple((d, g) for d in range(-3, 4) for g in range(4))
TRIVIALITY_SAMPLES = 1000
Bindings = dict[str, Poly]


# --------------------------------------------------------------------------
# Coefficient table
# --------------------------------------------------------------------------


def coeff_exponent(p: int, a: int) -> int:
    """Closed-form exponent c_a of det Rf_*(L^p ⊗ ω^a)."""
    if a == 0:
        return 3 * p * p - 3 * p + 1
    if 1 <= a <= p - 1:
        return a + 1 - 3 * p
    if p <= a <= 2 * p - 2:
        return p - 1 - (a - p)
    raise InvalidOperandError(
        message=f"Twist a={a} outside 0..{2 * p - 2}.",
        error_code="twist_out_of_range",
        context={"p": p, "a": a},
    )


def expansion_oracle(p: int) -> dict[int, int]:
    """Coefficients of w^a in 3p² − 3p·t + t² with t = 1 + w + ... + w^(p−1)."""
    w = Poly.symbol("w")
    t = sum((w**k for k in range(p)), Poly.zero())
    expansion = 3 * p * p - 3 * p * t + t * t
    return {a: int(c.constant_value()) for a, c in expansion.coefficients_in("w").items()}


@lru_cache(maxsize=128)
def coeff_table(p: int) -> CoeffTable:
    """Closed-form exponents, asserted equal to the expansion oracle.

    Raises:
        NotPrimeError: ``p`` is not prime.
        OracleMismatchError: Closed form and expansion disagree.
    """
    guard.ensure_prime(action="coeff_table", p=p)
    closed = {a: coeff_exponent(p, a) for a in range(2 * p - 1)}
    oracle = expansion_oracle(p)
    if closed != oracle:
        raise OracleMismatchError(
            message=f"Coefficient table for p={p} disagrees with its expansion oracle.",
            context={"p": p, "closed": closed, "oracle": oracle},
        )
    return CoeffTable(p=p, entries=[CoeffEntry(twist=a, exponent=c) for a, c in closed.items()])


def moment_sums(p: int) -> tuple[int, int, int]:
    """(Σc_a, Σc_a·a, Σc_a·a²) by brute-force summation."""
    pairs = coeff_table(p).as_pairs()
    return (
        sum(c for _, c in pairs),
        sum(c * a for a, c in pairs),
        sum(c * a * a for a, c in pairs),
    )


def closed_form_moments(p: int) -> tuple[int, int, int]:
    """(p², −p²(p−1)/2, p²(p−1)(p−2)/6)."""
    return p * p, -(p * p * (p - 1)) // 2, p * p * (p - 1) * (p - 2) // 6


def closed_form_sums(p: int) -> tuple[int, int, int]:
    """Moment sums of the coefficient table, asserted against the closed forms.

    The closed forms have degree at most 4 in p, so agreement at the six
    primes in :data:`CLOSED_FORM_SAMPLE_PRIMES` proves them identically.

    Raises:
        OracleMismatchError: Brute force and closed forms disagree.
    """
    brute = moment_sums(p)
    closed = closed_form_moments(p)
    if brute != closed:
        raise OracleMismatchError(
            message=f"Moment sums for p={p}: brute force {brute} != closed form {closed}.",
            context={"p": p, "brute": list(brute), "closed": list(closed)},
        )
    return brute


def coeff_oracle_report(p: int) -> VerificationReport:
    """Closed-form exponents against the expansion oracle, without raising."""
    started = perf_counter()
    guard.ensure_prime(action="coeff_oracle_report", p=p)
    closed = [(a, coeff_exponent(p, a)) for a in range(2 * p - 1)]
    oracle = sorted(expansion_oracle(p).items())
    return VerificationReport.compare(
        "coeff_oracle", {"p": p}, _render_pairs(closed), _render_pairs(oracle), started=started
    )


def coeff_moments_report(p: int) -> VerificationReport:
    """Brute-force moment sums against their closed forms, without raising."""
    started = perf_counter()
    return VerificationReport.compare(
        "coeff_moments",
        {"p": p},
        _render_tuple(moment_sums(p)),
        _render_tuple(closed_form_moments(p)),
        started=started,
    )


def _render_pairs(pairs: list[tuple[int, int]]) -> str:
    return "[" + ", ".join(f"({a}, {c})" for a, c in pairs) + "]"


def _render_tuple(values: tuple[int, ...]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


# --------------------------------------------------------------------------
# Cube identity and triviality of triple products
# --------------------------------------------------------------------------


def cube_identity_sides(t: int | None = None, p: int | None = None) -> tuple[Poly, Poly]:
    """p³ + (t − p)³ and t·(p² + p(p − t) + (p − t)²); free symbols when omitted."""
    tt = Poly.symbol("t") if t is None else Poly.constant(t)
    pp = Poly.symbol("p") if p is None else Poly.constant(p)
    lhs = pp**3 + (tt - pp) ** 3
    rhs = tt * (pp**2 + pp * (pp - tt) + (pp - tt) ** 2)
    return lhs, rhs


def verify_cube_identity(t: int | None = None, p: int | None = None) -> bool:
    """True iff the cube identity holds (symbolically when t, p are omitted)."""
    lhs, rhs = cube_identity_sides(t, p)
    return (lhs - rhs).is_zero()


def cube_identity_report(t: int | None = None, p: int | None = None) -> VerificationReport:
    started = perf_counter()
    lhs, rhs = cube_identity_sides(t, p)
    params: dict[str, int | str | bool] = {}
    if t is not None:
        params["t"] = t
    if p is not None:
        params["p"] = p
    return VerificationReport.compare("cube_identity", params, lhs, rhs, started=started)


def triviality_triples(
    bound: int, samples: int = TRIVIALITY_SAMPLES, seed: int = 0
) -> list[tuple[DivisorClass, DivisorClass, DivisorClass]]:
    """Triples (H0, H1, H) with six independent coefficients in [−bound, bound].

    The full grid is used while it has at most ``samples`` points; beyond
    that, ``samples`` triples are drawn with a generator seeded by ``seed``.
    """
    span = range(-bound, bound + 1)
    if len(span) ** 6 <= samples:
        coefficients = list(product(span, repeat=6))
    else:
        rng = Random(seed)
        coefficients = [tuple(rng.choice(span) for _ in range(6)) for _ in range(samples)]
    return [
        (DivisorClass(a0, b0), DivisorClass(a1, b1), DivisorClass(a2, b2))
        for a0, b0, a1, b1, a2, b2 in coefficients
    ]


def verify_power_triviality(
    l: int, bound: int, samples: int = TRIVIALITY_SAMPLES
) -> VerificationReport:
    """det Rf_*((H0 − H1)^⊗l ⊗ H) has degree zero across a set of triples."""
    started = perf_counter()
    guard.ensure_at_least(action="verify_power_triviality", name="l", value=l, minimum=3)
    triples = triviality_triples(bound, samples)
    trivial = sum(1 for h0, h1, h in triples if power_triviality(h0, h1, h, l).is_zero())
    report = VerificationReport.compare(
        "power_triviality",
        {"l": l, "bound": bound, "samples": samples},
        f"{trivial}/{len(triples)}",
        f"{len(triples)}/{len(triples)}",
        started=started,
    )
    _log(report)
    return report


def verify_virtual_pairing(
    bound: int, samples: int = TRIVIALITY_SAMPLES
) -> VerificationReport:
    """⟨det(H0 − H1), det(H − O)⟩ against det Rf_*((H0 − H1) ⊗ (H − O))."""
    started = perf_counter()
    triples = triviality_triples(bound, samples)
    agreeing = 0
    for h0, h1, h in triples:
        pairing, det = virtual_pairing_identity(
            VirtualCombo.difference(h0, h1), VirtualCombo.difference(h, O)
        )
        agreeing += pairing == det
    report = VerificationReport.compare(
        "virtual_pairing",
        {"bound": bound, "samples": samples},
        f"{agreeing}/{len(triples)}",
        f"{len(triples)}/{len(triples)}",
        started=started,
    )
    _log(report)
    return report


# --------------------------------------------------------------------------
# Main identity
# --------------------------------------------------------------------------


def mumford_binding(derive: bool = False) -> Bindings:
    """The binding lam ↦ ww/12.

    With ``derive`` the value is solved from the p = 2, L = O instance of the
    main identity, where lam₀ ≅ lam₁ holds by Serre duality.
    """
    if not derive:
        return {LAMBDA: Poly.symbol(WW) / 12}
    if det_degree(O) != det_degree(serre_dual(O)):
        raise OracleMismatchError(
            message="lam_0 and lam_1 differ in the degree model.",
            context={"lam_0": det_degree(O).render(), "lam_1": det_degree(OMEGA).render()},
        )
    lhs, rhs = main_degree_sides(2, O)
    value = (lhs - rhs).solve_linear(LAMBDA)
    logger.debug("derived binding lam = {} from p=2, L=O", value.render())
    return {LAMBDA: value}


def _binding(assume_mumford: bool) -> Bindings | None:
    return mumford_binding() if assume_mumford else None


def _bind(poly: Poly, binding: Bindings | None) -> Poly:
    return poly.substitute(binding) if binding else poly


def main_degree_sides(
    p: int, line: DivisorClass = L, binding: Bindings | None = None
) -> tuple[Poly, Poly]:
    """p⁴·D(L) and Σ_a c_a·D(p·L + a·ω)."""
    table = coeff_table(p)
    lhs = det_degree(line) * p**4
    rhs = Poly.zero()
    for a, c in table.as_pairs():
        rhs = rhs + det_degree(line * p + OMEGA * a) * c
    return _bind(lhs, binding), _bind(rhs, binding)


def verify_main_degree(
    p: int, *, assume_mumford: bool = True, line: DivisorClass = L
) -> VerificationReport:
    """Degree of the main isomorphism for L^p twisted by ω^a, a = 0..2p−2."""
    started = perf_counter()
    lhs, rhs = main_degree_sides(p, line, _binding(assume_mumford))
    note = None
    if not assume_mumford:
        forced = (lhs - rhs).solve_linear(LAMBDA)
        note = f"holds iff lam = {forced.render()}"
    report = VerificationReport.compare(
        "main_degree",
        {"p": p, "assume_mumford": assume_mumford},
        lhs,
        rhs,
        started=started,
        note=note,
    )
    _log(report)
    return report


def main_graded_lines(
    p: int, line: DivisorClass, *, fiber_degree: int, genus: int
) -> tuple[GradedLine, GradedLine]:
    """det Rf_*L^⊗p⁴ and ⊗_a det Rf_*(pL + aω)^⊗c_a as graded lines at (d, g)."""
    lhs = graded_power(det_line(line, fiber_degree=fiber_degree, genus=genus), p**4)
    rhs = GradedLine.unit()
    for a, c in coeff_table(p).as_pairs():
        twisted = det_line(line * p + OMEGA * a, fiber_degree=fiber_degree, genus=genus)
        rhs = graded_tensor(rhs, graded_power(twisted, c))
    return lhs, rhs


def verify_main_grading(p: int, line: DivisorClass = L) -> VerificationReport:
    """Σ_a c_a·χ(pL + aω) = p³·χ(L) in the symbols d, g.

    The graded lines of both sides carry gradings p⁴·χ and p³·χ, so only
    their self-symmetry signs can agree; those are compared on a grid of
    (d, g).

    Raises:
        OracleMismatchError: The symmetry signs differ at some sample point.
    """
    started = perf_counter()
    table = coeff_table(p)
    lhs = euler_characteristic(line) * p**3
    rhs = Poly.zero()
    for a, c in table.as_pairs():
        rhs = rhs + euler_characteristic(line * p + OMEGA * a) * c
    for d, g in GRADING_SAMPLE_POINTS:
        left, right = main_graded_lines(p, line, fiber_degree=d, genus=g)
        if left.symmetry_sign(left) != right.symmetry_sign(right):
            raise OracleMismatchError(
                message=f"Graded sides of the main identity have different symmetry signs for p={p}.",
                context={"p": p, "d": d, "g": g, "lhs": left.grading, "rhs": right.grading},
            )
    report = VerificationReport.compare(
        "main_grading",
        {"p": p},
        lhs,
        rhs,
        started=started,
        note="p^4*chi = p^3*chi mod 2",
    )
    _log(report)
    return report


# --------------------------------------------------------------------------
# Deligne and Mumford
# --------------------------------------------------------------------------


def deligne_sides(form: DeligneForm, binding: Bindings) -> tuple[Poly, Poly]:
    """Both sides of the requested form of Deligne's isomorphism."""
    twisted = pairing_degree(L, L - OMEGA)
    match form:
        case DeligneForm.PAIRING_SQUARE:
            return (det_degree(L) - det_degree(O)) * 2, twisted
        case DeligneForm.EXPONENT_SIX:
            return (
                _bind(det_degree(L) * 12, binding),
                pairing_degree(OMEGA, OMEGA) + twisted * 6,
            )
        case DeligneForm.AS_PRINTED:
            return (
                _bind(det_degree(L) * 12, binding),
                pairing_degree(OMEGA, OMEGA) + twisted,
            )
        case DeligneForm.EIGHTEEN:
            return (
                det_degree(L) * 18,
                det_degree(O) * 18 + det_degree(L * 2 - OMEGA) * 6 - det_degree(L - OMEGA) * 6,
            )
    raise InvalidOperandError(message=f"Unknown form {form!r}.", context={"form": str(form)})


_DELIGNE_NOTES = {
    DeligneForm.PAIRING_SQUARE: "lam cancels; holds with lam free",
    DeligneForm.EXPONENT_SIX: "pairing factor carries exponent 6",
    DeligneForm.AS_PRINTED: "exponent 1 on the pairing factor is refuted at degree level",
    DeligneForm.EIGHTEEN: "lam cancels; holds with lam free",
}


def verify_deligne(form: DeligneForm, *, p2_mode: bool = False) -> VerificationReport:
    """Deligne's isomorphism at degree level.

    With ``p2_mode`` the lam binding is derived from the p = 2 main identity
    instead of being assumed.
    """
    started = perf_counter()
    lhs, rhs = deligne_sides(form, mumford_binding(derive=p2_mode))
    report = VerificationReport.compare(
        "deligne",
        {"form": form.value, "p2_mode": p2_mode},
        lhs,
        rhs,
        started=started,
        expected=CheckStatus.FAIL if form is DeligneForm.AS_PRINTED else CheckStatus.PASS,
        note=_DELIGNE_NOTES[form],
    )
    _log(report)
    return report


def verify_deligne_all(*, p2_mode: bool = False) -> list[VerificationReport]:
    return [verify_deligne(form, p2_mode=p2_mode) for form in DeligneForm]


def mumford_exponent(n: int) -> int:
    """6n² − 6n + 1."""
    return 6 * n * n - 6 * n + 1


def verify_mumford(n: int, p: int = 2, *, assume_mumford: bool = True) -> VerificationReport:
    """D(nω) = (6n² − 6n + 1)·D(ω); the result does not depend on p."""
    started = perf_counter()
    guard.ensure_non_negative(action="verify_mumford", name="n", value=n)
    guard.ensure_prime(action="verify_mumford", p=p)
    binding = _binding(assume_mumford)
    exponent = mumford_exponent(n)
    report = VerificationReport.compare(
        "mumford",
        {"n": n, "p": p, "assume_mumford": assume_mumford},
        _bind(det_degree(OMEGA * n), binding),
        _bind(det_degree(OMEGA) * exponent, binding),
        started=started,
        note=f"lam_{n} = lam_1^{exponent}",
    )
    _log(report)
    return report


def verify_remark_lambda(n: int, p: int, *, assume_mumford: bool = True) -> VerificationReport:
    """The main identity specialised to L = ω^n: p⁴·D(nω) = Σ_a c_a·D((np + a)·ω)."""
    started = perf_counter()
    guard.ensure_non_negative(action="verify_remark_lambda", name="n", value=n)
    lhs, rhs = main_degree_sides(p, OMEGA * n, _binding(assume_mumford))
    report = VerificationReport.compare(
        "remark_lambda",
        {"n": n, "p": p, "assume_mumford": assume_mumford},
        lhs,
        rhs,
        started=started,
    )
    _log(report)
    return report


def verify_omega_pairing(*, p2_mode: bool = False) -> list[VerificationReport]:
    """⟨ω, ω⟩ against lam_2 ⊗ lam_1^−2 ⊗ lam_0 (lam free) and against lam_0^12."""
    started = perf_counter()
    ww = pairing_degree(OMEGA, OMEGA)
    free = VerificationReport.compare(
        "omega_pairing",
        {"binding": "free"},
        ww,
        det_degree(OMEGA * 2) - det_degree(OMEGA) * 2 + det_degree(O),
        started=started,
    )
    started = perf_counter()
    bound = VerificationReport.compare(
        "omega_pairing",
        {"binding": "derived" if p2_mode else "assumed"},
        ww,
        _bind(det_degree(O) * 12, mumford_binding(derive=p2_mode)),
        started=started,
    )
    return [free, bound]


def lambda_recursion_sides(n: int) -> tuple[Poly, Poly]:
    """2·D(nω) − 2·D(O) and D((2n−1)ω) − D(nω) − D((n−1)ω) + D(O)."""
    lhs = det_degree(OMEGA * n) * 2 - det_degree(O) * 2
    rhs = (
        det_degree(OMEGA * (2 * n - 1))
        - det_degree(OMEGA * n)
        - det_degree(OMEGA * (n - 1))
        + det_degree(O)
    )
    return lhs, rhs


def verify_lambda_recursion(n: int) -> VerificationReport:
    """lam_n² ⊗ lam_0^−2 ≅ lam_(2n−1) ⊗ lam_n^−1 ⊗ lam_(n−1)^−1 ⊗ lam_0, lam free."""
    started = perf_counter()
    guard.ensure_non_negative(action="verify_lambda_recursion", name="n", value=n)
    lhs, rhs = lambda_recursion_sides(n)
    report = VerificationReport.compare(
        "lambda_recursion", {"n": n}, lhs, rhs, started=started
    )
    _log(report)
    return report


def mumford_exponents_by_induction(n_max: int) -> list[int]:
    """Exponents e(n) with lam_n ≅ lam_1^e(n), for n = 0..n_max.

    Uses only lam_0 ≅ lam_1, the p = 2 main identity for L = ω^n and the
    recursion of :func:`verify_lambda_recursion`.
    """
    guard.ensure_non_negative(action="mumford_exponents_by_induction", name="n_max", value=n_max)
    table = coeff_table(2)
    c0, c1, c2 = (table.exponent(a) for a in range(3))
    top = 2**4

    e = [1, 1]
    for m in range(2, n_max + 1):
        if m % 2 == 0:
            n = (m - 2) // 2
            value, rem = divmod(top * e[n] - c0 * e[2 * n] - c1 * e[2 * n + 1], c2)
            if rem:
                raise OracleMismatchError(
                    message=f"Exponent of lam_{m} is not integral.",
                    context={"m": m},
                )
        else:
            n = (m + 1) // 2
            value = 3 * e[n] + e[n - 1] - 3 * e[0]
        e.append(value)
    return e[: n_max + 1]


def verify_lambda_induction(n_max: int) -> VerificationReport:
    """Induced exponents against 6n² − 6n + 1."""
    started = perf_counter()
    induced = mumford_exponents_by_induction(n_max)
    report = VerificationReport.compare(
        "mumford_induction",
        {"n_max": n_max},
        _render_tuple(tuple(induced)),
        _render_tuple(tuple(mumford_exponent(n) for n in range(n_max + 1))),
        started=started,
    )
    _log(report)
    return report


def top_lambda_exponents(p: int) -> dict[int, int]:
    """Exponents of lam_a in the solved form of lam_(2p−2) for L = O.

    Raises:
        OracleMismatchError: The exponent of lam_1 is not p⁴ − 3p² + 6p − 3.
    """
    table = coeff_table(p)
    exponents = {1: p**4 - table.exponent(0) - table.exponent(1)}
    for a in range(2, 2 * p - 2):
        exponents[a] = -table.exponent(a)
    closed = p**4 - 3 * p * p + 6 * p - 3
    if exponents[1] != closed:
        raise OracleMismatchError(
            message=f"Exponent of lam_1 is {exponents[1]}, expected {closed}.",
            context={"p": p},
        )
    return exponents


def verify_top_lambda(p: int, *, assume_mumford: bool = True) -> VerificationReport:
    """D((2p−2)ω) against Σ_a e_a·D(aω) from :func:`top_lambda_exponents`."""
    started = perf_counter()
    exponents = top_lambda_exponents(p)
    binding = _binding(assume_mumford)
    rhs = Poly.zero()
    for a, exponent in exponents.items():
        rhs = rhs + det_degree(OMEGA * a) * exponent
    factors = " * ".join(f"lam_{a}^{e}" for a, e in exponents.items())
    report = VerificationReport.compare(
        "top_lambda",
        {"p": p, "assume_mumford": assume_mumford},
        _bind(det_degree(OMEGA * (2 * p - 2)), binding),
        _bind(rhs, binding),
        started=started,
        note=f"lam_{2 * p - 2} = {factors}",
    )
    _log(report)
    return report


def _log(report: VerificationReport) -> None:
    if report.ok:
        logger.debug("{} {} -> {}", report.identity, report.params, report.status)
    else:
        logger.warning(
            "{} {} -> {} (expected {}), residual {}",
            report.identity,
            report.params,
            report.status,
            report.expected,
            report.residual,
        )
