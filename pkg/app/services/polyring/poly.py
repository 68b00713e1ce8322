"""Exact multivariate polynomials with rational coefficients.

A :class:`Poly` maps monomials over named symbols to nonzero
:class:`fractions.Fraction` coefficients. Terms are kept in graded
lexicographic order over the sorted symbol names, so equality is plain
term-map equality and :meth:`Poly.render` is deterministic.

Example::

    x, y = Poly.symbol("x"), Poly.symbol("y")
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x + y).render() == "x + y"
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from types import MappingProxyType

from app.core.exceptions import CyclicBindingError, InvalidOperandError

Scalar = int | Fraction
Monomial = tuple[tuple[str, int], ...]

ONE: Monomial = ()


def monomial(**exponents: int) -> Monomial:
    """Build a normalized monomial from ``symbol=exponent`` pairs."""
    return _normalize_monomial(exponents.items())


def _normalize_monomial(pairs: Iterable[tuple[str, int]]) -> Monomial:
    merged: dict[str, int] = {}
    for name, exp in pairs:
        if exp < 0:
            raise InvalidOperandError(
                message=f"Negative exponent {exp} for symbol '{name}'.",
                error_code="negative_exponent",
                context={"symbol": name, "exponent": exp},
            )
        merged[name] = merged.get(name, 0) + exp
    return tuple(sorted((name, exp) for name, exp in merged.items() if exp))


def _monomial_product(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return _normalize_monomial((*a, *b))


def _monomial_degree(m: Monomial) -> int:
    return sum(exp for _, exp in m)


def _render_monomial(m: Monomial) -> str:
    return "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in m)


class Poly:
    """Immutable polynomial over the rationals in string-named symbols."""

    __slots__ = ("_hash", "_terms")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        cleaned: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                cleaned[mono] = value
        symbols = sorted({name for mono in cleaned for name, _ in mono})

        def order(m: Monomial) -> tuple[int, tuple[int, ...]]:
            exps = dict(m)
            return -_monomial_degree(m), tuple(-exps.get(s, 0) for s in symbols)

        ordered = {mono: cleaned[mono] for mono in sorted(cleaned, key=order)}
        self._terms: Mapping[Monomial, Fraction] = MappingProxyType(ordered)
        self._hash: int | None = None

    @classmethod
    def symbol(cls, name: str) -> Poly:
        """Return the polynomial consisting of a single symbol."""
        if not name:
            raise InvalidOperandError(
                message="Symbol names must be non-empty.",
                error_code="empty_symbol",
            )
        return cls({((name, 1),): 1})

    @classmethod
    def constant(cls, value: Scalar) -> Poly:
        """Return a constant polynomial."""
        return cls({ONE: value})

    @classmethod
    def zero(cls) -> Poly:
        """Return the zero polynomial."""
        return cls()

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """Read-only term map in canonical order."""
        return self._terms

    @staticmethod
    def _coerce(other: object) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int | Fraction):
            return Poly.constant(other)
        return None

    def __add__(self, other: object) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return Poly(merged)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: object) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Poly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        product: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                mono = _monomial_product(m1, m2)
                product[mono] = product.get(mono, Fraction(0)) + c1 * c2
        return Poly(product)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Poly:
        if not isinstance(other, int | Fraction):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Polynomial division by zero.")
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidOperandError(
                message=f"Exponent must be a non-negative integer, got {exponent!r}.",
                error_code="invalid_exponent",
                context={"exponent": repr(exponent)},
            )
        result, base = Poly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return dict(self._terms) == dict(rhs._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the Fraction they compare equal to
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        """Return True iff the canonical form has no terms."""
        return not self._terms

    def is_constant(self) -> bool:
        """Return True iff no term mentions a symbol."""
        return all(mono == ONE for mono in self._terms)

    def constant_value(self) -> Fraction:
        """Return the value of a constant polynomial."""
        if not self.is_constant():
            raise InvalidOperandError(
                message=f"Polynomial '{self.render()}' is not constant.",
                error_code="not_constant",
                context={"poly": self.render()},
            )
        return self._terms.get(ONE, Fraction(0))

    def symbols(self) -> frozenset[str]:
        """Return the symbols that occur with a nonzero coefficient."""
        return frozenset(name for mono in self._terms for name, _ in mono)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((_monomial_degree(m) for m in self._terms), default=-1)

    def coefficient(self, mono: Monomial | Mapping[str, int] = ONE) -> Fraction:
        """Return the coefficient of a monomial (0 when absent)."""
        key = _normalize_monomial(mono.items() if isinstance(mono, Mapping) else mono)
        return self._terms.get(key, Fraction(0))

    def coefficients_in(self, name: str) -> dict[int, Poly]:
        """Split into ``{exponent of name: coefficient polynomial}``."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            exp = exps.pop(name, 0)
            rest = tuple(sorted(exps.items()))
            buckets.setdefault(exp, {})[rest] = coeff
        return {exp: Poly(terms) for exp, terms in sorted(buckets.items())}

    def substitute(self, bindings: Mapping[str, Poly | Scalar]) -> Poly:
        """Simultaneously replace symbols, then canonicalize.

        Raises:
            CyclicBindingError: A replacement mentions a bound symbol.
        """
        if not bindings:
            return self
        replacements = {name: Poly._coerce(value) for name, value in bindings.items()}
        for name, value in replacements.items():
            if value is None:
                raise InvalidOperandError(
                    message=f"Binding for '{name}' is not a polynomial.",
                    error_code="invalid_binding",
                    context={"symbol": name},
                )
            clash = value.symbols() & replacements.keys()
            if clash:
                raise CyclicBindingError(
                    message=f"Binding for '{name}' mentions bound symbols {sorted(clash)}.",
                    context={"symbol": name, "mentions": sorted(clash)},
                )

        result = Poly.zero()
        for mono, coeff in self._terms.items():
            kept: list[tuple[str, int]] = []
            term = Poly.constant(coeff)
            for name, exp in mono:
                value = replacements.get(name)
                if value is None:
                    kept.append((name, exp))
                else:
                    term = term * value**exp
            result = result + term * Poly({tuple(kept): 1})
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Substitute constants for every symbol and return the value."""
        return self.substitute(values).constant_value()

    def solve_linear(self, name: str) -> Poly:
        """Return the value of ``name`` making this polynomial vanish.

        The symbol must occur only to the first power with a constant
        coefficient, so the solution is unique.
        """
        parts = self.coefficients_in(name)
        slope = parts.get(1)
        if set(parts) - {0, 1} or slope is None or not slope.is_constant():
            raise InvalidOperandError(
                message=f"'{self.render()}' is not linear in '{name}' with constant slope.",
                error_code="not_linear",
                context={"poly": self.render(), "symbol": name},
            )
        return -parts.get(0, Poly.zero()) / slope.constant_value()

    def render(self) -> str:
        """Canonical text rendering, e.g. ``8*LL - 8*Lw + 16*lam``."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono, coeff in self._terms.items():
            magnitude = abs(coeff)
            if mono == ONE:
                body = str(magnitude)
            elif magnitude == 1:
                body = _render_monomial(mono)
            else:
                body = f"{magnitude}*{_render_monomial(mono)}"
            if not chunks:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.render()!r})"


def symbols(*names: str) -> tuple[Poly, ...]:
    """Return one symbol polynomial per name."""
    return tuple(Poly.symbol(name) for name in names)


def add(a: Poly, b: Poly) -> Poly:
    """Canonical sum."""
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    """Canonical product."""
    return a * b


def substitute(p: Poly, bindings: Mapping[str, Poly | Scalar]) -> Poly:
    """Simultaneous substitution followed by canonicalization."""
    return p.substitute(bindings)


def is_zero(p: Poly) -> bool:
    """True iff the canonical form has no terms."""
    return p.is_zero()
