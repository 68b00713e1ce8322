"""Unit tests for split classes, Adams operations and Bott classes."""

import random
from fractions import Fraction

import pytest
from app.core.exceptions import InvalidOperandError, NonInvertibleClassError, NotPrimeError
from app.services.frobcurve import ProjLineBundle, frobenius_pullback
from app.services.guards import primes_up_to
from app.services.kcore import (
    CondensedClass,
    KClass,
    LineClass,
    adams,
    bott,
    condense,
    condensed_inverse,
    condensed_multiply,
    euler_char,
    tau_of_omega,
    tau_rank,
)
from app.services.polyring import Poly


class TestKClass:
    """Test the ring structure of split classes."""

    def test_lines_accumulate_repeats(self):
        """Test that repeated degrees add multiplicities."""
        c = KClass.lines([0, -3, -3])
        assert c.degrees() == {0: 1, -3: 2}
        assert c.rank == 3
        assert c.degree == -6

    def test_tensor_convolves_degrees(self):
        """Test (1 + O(1))·(1 − O(1)) = 1 − O(2)."""
        a = KClass.lines([0, 1])
        b = KClass.line(0) - KClass.line(1)
        product = a * b
        assert product.degrees() == {0: 1, 2: -1}
        assert product.rank == 0

    def test_effectiveness(self):
        """Test that a negative multiplicity makes a class virtual."""
        assert KClass.lines([0, 2]).is_effective()
        assert not (KClass.line(0) - KClass.line(1)).is_effective()

    def test_render_descending_degree(self):
        """Test canonical rendering."""
        assert KClass.lines([-4, 0, -2]).render() == "O(0) + O(-2) + O(-4)"
        assert KClass.zero().render() == "0"

    def test_line_class_operations(self):
        """Test tensor, dual and power of line classes."""
        line = LineClass(3)
        assert line.tensor(LineClass(-1)) == LineClass(2)
        assert line.dual() == LineClass(-3)
        assert line.power(4) == LineClass(12)


class TestAdamsAndBott:
    """Test Adams operations, Bott classes and τ."""

    def test_adams_multiplies_degrees(self):
        """Test ψ² on O(1) + O(−1)."""
        assert adams(2, KClass.lines([1, -1])).degrees() == {2: 1, -2: 1}

    def test_adams_needs_k_at_least_two(self):
        """Test that ψ¹ is rejected."""
        with pytest.raises(InvalidOperandError):
            adams(1, KClass.one())

    def test_bott_of_a_line(self):
        """Test θ²(O(1)) = 1 + O(1)."""
        assert bott(2, KClass.line(1)) == KClass.lines([0, 1])

    def test_bott_is_multiplicative(self):
        """Test θ³(2·O(1)) = (1 + L + L²)², of rank 9."""
        result = bott(3, KClass.line(1, 2))
        assert result.degrees() == {4: 1, 3: 2, 2: 3, 1: 2, 0: 1}
        assert result.rank == 9

    def test_bott_rejects_virtual_class(self):
        """Test that a virtual argument is refused with a stable code."""
        with pytest.raises(InvalidOperandError) as exc:
            bott(2, KClass.line(0) - KClass.line(1))
        assert exc.value.error_code == "virtual_bott_argument"

    @pytest.mark.parametrize(("r", "p", "expected"), [(0, 2, 1), (3, 5, 125), (4, 3, 81), (6, 2, 64)])
    def test_tau_rank_is_p_to_the_r(self, r, p, expected):
        """Test rank p^r by enumeration and by closed form."""
        assert tau_rank(r, p) == expected

    def test_tau_rank_rejects_composite(self):
        """Test that a composite characteristic is refused."""
        with pytest.raises(NotPrimeError):
            tau_rank(2, 4)

    def test_tau_of_omega(self):
        """Test τ(Ω) on the projective line for p = 3."""
        assert tau_of_omega(3, -2).render() == "O(0) + O(-2) + O(-4)"


class TestCondensedClass:
    """Test the (rank, degree) shadow and its localisation."""

    def test_condense(self):
        """Test the rank/degree homomorphism."""
        assert condense(KClass.lines([0, -2])) == CondensedClass.of(2, -2)

    def test_truncated_product(self):
        """Test (r1, e1)·(r2, e2) = (r1·r2, r1·e2 + r2·e1)."""
        product = condensed_multiply(CondensedClass.of(2, 3), CondensedClass.of(5, -1))
        assert product == CondensedClass.of(10, 13)

    def test_inverse_after_inverting_p(self):
        """Test that (3, −6) is a unit once 3 is inverted."""
        c = CondensedClass.of(3, -6)
        inverse = condensed_inverse(c, 3)
        assert inverse == CondensedClass.of(Fraction(1, 3), Fraction(2, 3))
        assert c * inverse == CondensedClass.of(1, 0)

    def test_non_unit_raises(self):
        """Test that rank 2 is not invertible with 3 inverted."""
        with pytest.raises(NonInvertibleClassError):
            condensed_inverse(CondensedClass.of(2, 0), 3)

    def test_is_unit(self):
        """Test unit detection with and without a prime inverted."""
        assert CondensedClass.of(4, 1).is_unit(2)
        assert not CondensedClass.of(6, 0).is_unit(2)
        assert CondensedClass.of(-1, 5).is_unit()
        assert not CondensedClass.of(2, 0).is_unit()

    def test_euler_char(self):
        """Test χ = rank + degree."""
        assert euler_char(CondensedClass.of(2, -2)) == 0

    def test_equal_classes_hash_equal(self):
        """Test that integer and polynomial degrees of equal value collide in sets."""
        plain = CondensedClass.of(1, 2)
        symbolic = CondensedClass(Fraction(1), Poly.constant(2))
        assert plain == symbolic
        assert hash(plain) == hash(symbolic)
        assert len({plain, symbolic}) == 1

    def test_inverse_is_two_sided(self):
        """Test c·c⁻¹ = c⁻¹·c = 1 for ranks ±p^m and degrees in [−20, 20]."""
        one = CondensedClass.of(1, 0)
        for p in (2, 3, 5, 7):
            for m in range(4):
                for sign in (1, -1):
                    for e in range(-20, 21):
                        c = CondensedClass.of(sign * p**m, e)
                        inverse = condensed_inverse(c, p)
                        assert c * inverse == one
                        assert inverse * c == one

    def test_inverse_of_fractional_unit(self):
        """Test that ranks with p in the denominator stay invertible."""
        c = CondensedClass.of(Fraction(1, 9), 4)
        assert c * condensed_inverse(c, 3) == CondensedClass.of(1, 0)


class TestLambdaRingLaws:
    """Test Adams and Bott operations against their structural laws."""

    @pytest.fixture
    def rng(self):
        return random.Random(7)

    @staticmethod
    def random_class(rng: random.Random) -> KClass:
        return KClass.from_counts({rng.randint(-6, 6): rng.randint(-3, 3) for _ in range(rng.randint(0, 4))})

    def test_adams_matches_frobenius_pullback(self):
        """Test ψ^p(O(d)) = F*O(d) = O(p·d) for p ≤ 13 and |d| ≤ 20."""
        for p in primes_up_to(13):
            for d in range(-20, 21):
                pulled = frobenius_pullback(ProjLineBundle(d, p))
                assert adams(p, KClass.line(d)) == KClass.line(pulled.d)

    def test_adams_is_additive(self, rng):
        """Test ψ^k(a + b) = ψ^k(a) + ψ^k(b), on classes and on their condensations."""
        for _ in range(100):
            a, b, k = self.random_class(rng), self.random_class(rng), rng.randint(2, 5)
            assert adams(k, a + b) == adams(k, a) + adams(k, b)
            assert condense(adams(k, a + b)) == condense(adams(k, a)) + condense(adams(k, b))

    def test_adams_is_multiplicative(self, rng):
        """Test ψ^k(a·b) = ψ^k(a)·ψ^k(b), on classes and on their condensations."""
        for _ in range(100):
            a, b, k = self.random_class(rng), self.random_class(rng), rng.randint(2, 5)
            assert adams(k, a * b) == adams(k, a) * adams(k, b)
            assert condense(adams(k, a * b)) == condense(adams(k, a)) * condense(adams(k, b))

    def test_adams_on_condensed_class(self, rng):
        """Test that ψ^k scales the degree by k and keeps the rank."""
        for _ in range(100):
            a, k = self.random_class(rng), rng.randint(2, 5)
            assert condense(adams(k, a)) == CondensedClass.of(a.rank, k * a.degree)

    def test_bott_rank_is_k_to_the_rank(self):
        """Test rank θ^k(E) = k^rank(E) for k ≤ 5 and effective E of rank ≤ 3."""
        mixed = {0: [], 1: [0], 2: [1, -2], 3: [3, 3, -1]}
        for k in range(2, 6):
            for rank, degrees in mixed.items():
                assert bott(k, KClass.lines(degrees)).rank == k**rank
                for d in range(-3, 4):
                    assert bott(k, KClass.line(d, rank)).rank == k**rank

    def test_bott_of_two_lines(self):
        """Test θ²(O(1) + O(2)) = O(0) + O(1) + O(2) + O(3)."""
        assert bott(2, KClass.lines([1, 2])) == KClass.lines([0, 1, 2, 3])

    def test_bott_is_multiplicative_on_sums(self, rng):
        """Test θ^k(a + b) = θ^k(a)·θ^k(b) for effective a and b."""
        for _ in range(50):
            a = KClass.lines(rng.randint(-4, 4) for _ in range(rng.randint(0, 2)))
            b = KClass.lines(rng.randint(-4, 4) for _ in range(rng.randint(0, 2)))
            k = rng.randint(2, 4)
            assert bott(k, a + b) == bott(k, a) * bott(k, b)

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_tau_of_omega_is_bott_of_omega(self, p):
        """Test τ(Ω) = θ^p(O(−2))."""
        assert tau_of_omega(p, -2) == bott(p, KClass.line(-2))
