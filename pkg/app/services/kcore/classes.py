"""Value types for split classes in the Grothendieck group of the projective line."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from app.services.polyring import Poly


@dataclass(frozen=True, slots=True, order=True)
class LineClass:
    """Class of the line bundle O(degree), or a formal twist exponent."""

    degree: int

    def tensor(self, other: LineClass) -> LineClass:
        """Tensor product: degrees add."""
        return LineClass(self.degree + other.degree)

    def dual(self) -> LineClass:
        """Dual line: degree negates."""
        return LineClass(-self.degree)

    def power(self, k: int) -> LineClass:
        """k-th tensor power."""
        return LineClass(k * self.degree)

    def render(self) -> str:
        """Render as ``O(d)``."""
        return f"O({self.degree})"


@dataclass(frozen=True, slots=True)
class KClass:
    """Formal integer combination of line classes.

    ``terms`` holds (line, multiplicity) pairs with nonzero multiplicities,
    sorted by descending degree; use :meth:`from_counts` or :meth:`lines`
    rather than building it directly.
    """

    terms: tuple[tuple[LineClass, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[LineClass | int, int]) -> KClass:
        """Build a class from ``{line or degree: multiplicity}``."""
        merged: dict[LineClass, int] = {}
        for key, mult in counts.items():
            line = key if isinstance(key, LineClass) else LineClass(key)
            merged[line] = merged.get(line, 0) + mult
        ordered = sorted(
            ((line, mult) for line, mult in merged.items() if mult),
            key=lambda item: -item[0].degree,
        )
        return cls(tuple(ordered))

    @classmethod
    def lines(cls, degrees: Iterable[int]) -> KClass:
        """Sum of O(d) over the given degrees, repeats accumulating."""
        counts: dict[LineClass | int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        return cls.from_counts(counts)

    @classmethod
    def line(cls, degree: int, multiplicity: int = 1) -> KClass:
        """A single line class with a multiplicity."""
        return cls.from_counts({degree: multiplicity})

    @classmethod
    def zero(cls) -> KClass:
        """The zero class."""
        return cls()

    @classmethod
    def one(cls) -> KClass:
        """The class of the trivial bundle."""
        return cls.line(0)

    def as_dict(self) -> dict[LineClass, int]:
        """Multiplicities keyed by line class."""
        return dict(self.terms)

    def degrees(self) -> dict[int, int]:
        """Multiplicities keyed by integer degree."""
        return {line.degree: mult for line, mult in self.terms}

    @property
    def rank(self) -> int:
        """Sum of multiplicities."""
        return sum(mult for _, mult in self.terms)

    @property
    def degree(self) -> int:
        """Sum of multiplicity times degree."""
        return sum(mult * line.degree for line, mult in self.terms)

    def is_effective(self) -> bool:
        """True iff every multiplicity is non-negative."""
        return all(mult > 0 for _, mult in self.terms)

    def __add__(self, other: KClass) -> KClass:
        counts: dict[LineClass | int, int] = dict(self.terms)
        for line, mult in other.terms:
            counts[line] = counts.get(line, 0) + mult
        return KClass.from_counts(counts)

    def __neg__(self) -> KClass:
        return KClass(tuple((line, -mult) for line, mult in self.terms))

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def __mul__(self, other: KClass | int) -> KClass:
        if isinstance(other, int):
            return KClass.from_counts({line: other * m for line, m in self.terms})
        counts: dict[LineClass | int, int] = {}
        for l1, m1 in self.terms:
            for l2, m2 in other.terms:
                line = l1.tensor(l2)
                counts[line] = counts.get(line, 0) + m1 * m2
        return KClass.from_counts(counts)

    __rmul__ = __mul__

    def render(self) -> str:
        """Canonical text, e.g. ``O(0) + O(-2) + O(-4)``."""
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for line, mult in self.terms:
            body = line.render() if abs(mult) == 1 else f"{abs(mult)}*{line.render()}"
            if not chunks:
                chunks.append(f"-{body}" if mult < 0 else body)
            else:
                chunks.append(f"- {body}" if mult < 0 else f"+ {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.render()


def _is_p_unit(value: Fraction, p: int) -> bool:
    if value == 0:
        return False
    num, den = abs(value.numerator), value.denominator
    while num % p == 0:
        num //= p
    while den % p == 0:
        den //= p
    return num == 1 and den == 1


@dataclass(frozen=True, slots=True)
class CondensedClass:
    """(rank, degree) shadow of a class on the projective line.

    Multiplication follows the truncated ring law in which the degree part
    squares to zero. The degree may be a :class:`Poly` so identities can be
    checked with a symbolic twist.
    """

    rank: Fraction
    degree: Fraction | Poly

    @classmethod
    def of(cls, rank: int | Fraction, degree: int | Fraction | Poly) -> CondensedClass:
        """Build from integers, fractions or a polynomial degree."""
        return cls(Fraction(rank), degree if isinstance(degree, Poly) else Fraction(degree))

    def __add__(self, other: CondensedClass) -> CondensedClass:
        return CondensedClass.of(self.rank + other.rank, self.degree + other.degree)

    def __neg__(self) -> CondensedClass:
        return CondensedClass.of(-self.rank, -self.degree)

    def __mul__(self, other: CondensedClass) -> CondensedClass:
        return CondensedClass.of(
            self.rank * other.rank,
            self.rank * other.degree + other.rank * self.degree,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CondensedClass):
            return NotImplemented
        return self.rank == other.rank and self.degree == other.degree

    def __hash__(self) -> int:
        return hash((self.rank, self.degree))

    def is_unit(self, p: int | None = None) -> bool:
        """Invertible over the integers, or over the integers with p inverted."""
        if p is None:
            return self.rank in (1, -1)
        return _is_p_unit(self.rank, p)

    def render(self) -> str:
        """Render as ``(rank, degree)``."""
        return f"({self.rank}, {self.degree})"

    def __str__(self) -> str:
        return self.render()
