import random
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlatin.algebraic import (
    ONE,
    ZERO,
    RadExt,
    sqrt_rational,
    squarefree_decompose,
)

F = Fraction


class TestSquarefreeDecompose:
    def test_basic_splits(self):
        assert squarefree_decompose(1) == (1, 1)
        assert squarefree_decompose(2) == (1, 2)
        assert squarefree_decompose(12) == (2, 3)
        assert squarefree_decompose(49) == (7, 1)
        assert squarefree_decompose(50) == (5, 2)
        assert squarefree_decompose(360) == (6, 10)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            squarefree_decompose(0)
        with pytest.raises(ValueError):
            squarefree_decompose(-4)

    def test_bound_exceeded_is_loud(self):
        # 1000003 is prime, so no divisor below the tiny bound exists
        with pytest.raises(ValueError, match="trial division bound"):
            squarefree_decompose(1000003**2, bound=1000)

    def test_large_prime_within_bound(self):
        # cofactor > bound is fine once all divisors up to sqrt are excluded
        assert squarefree_decompose(999983) == (1, 999983)

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(deadline=None)
    def test_reconstruction(self, n):
        s, d = squarefree_decompose(n)
        assert s * s * d == n
        _, d2 = squarefree_decompose(d)
        assert d2 == d  # d is squarefree


class TestRadExtBasics:
    def test_constructor_normalizes_radicands(self):
        assert RadExt({8: 1}) == RadExt({2: 2})  # sqrt(8) = 2 sqrt(2)
        assert RadExt({4: F(1, 2)}) == 1
        assert RadExt({2: 0}).is_zero

    def test_rational_predicates(self):
        assert ZERO.is_zero and ZERO.is_rational
        assert ONE.is_rational and ONE.as_fraction() == 1
        x = sqrt_rational(2)
        assert not x.is_rational
        with pytest.raises(ValueError, match="irrational"):
            x.as_fraction()

    def test_gcd_trick_products(self):
        assert sqrt_rational(2) * sqrt_rational(3) == sqrt_rational(6)
        assert sqrt_rational(6) * sqrt_rational(10) == RadExt({15: 2})
        assert sqrt_rational(2) * sqrt_rational(2) == 2
        # (1 + sqrt 2)(1 - sqrt 2) = -1
        a = ONE + sqrt_rational(2)
        b = ONE - sqrt_rational(2)
        assert a * b == -1

    def test_binomial_square(self):
        x = sqrt_rational(2) + sqrt_rational(3)
        assert x * x == RadExt({1: 5, 6: 2})

    def test_sqrt_rational_values(self):
        assert sqrt_rational(0).is_zero
        assert sqrt_rational(F(9, 4)) == F(3, 2)
        assert sqrt_rational(F(1, 2)) == RadExt({2: F(1, 2)})
        assert sqrt_rational(8) == RadExt({2: 2})
        with pytest.raises(ValueError):
            sqrt_rational(-1)

    def test_mixed_type_equality(self):
        assert RadExt.from_rational(F(3, 5)) == F(3, 5)
        assert RadExt.from_rational(2) == 2
        assert sqrt_rational(2) != 1
        assert hash(RadExt.from_rational(7)) == hash(RadExt({1: 7}))


class TestSign:
    def test_fast_paths(self):
        assert ZERO.sign() == 0
        assert ONE.sign() == 1
        assert (-ONE).sign() == -1
        assert sqrt_rational(7).sign() == 1
        assert (RadExt({2: -1})).sign() == -1

    def test_mixed_terms(self):
        # sqrt2 + sqrt3 < sqrt10: 3.146... vs 3.162...
        assert RadExt({2: 1, 3: 1, 10: -1}).sign() == -1
        assert RadExt({2: 1, 3: 1, 7: -1}).sign() == 1  # 3.146 > 2.645

    def test_tight_continued_fraction_convergents(self):
        # 99/70 and 140/99 straddle sqrt 2 narrowly
        assert RadExt({2: 99, 1: -140}).sign() == 1
        assert RadExt({2: 70, 1: -99}).sign() == -1
        # 665857/470832 exceeds sqrt 2 by about 1.6e-12 (665857^2 - 2*470832^2 = 1),
        # forcing the interval refinement loop to deepen
        assert 665857**2 - 2 * 470832**2 == 1
        assert RadExt({2: 470832, 1: -665857}).sign() == -1

    def test_sign_against_decimal_oracle(self):
        # Soundness of the thresholds: a nonzero sum of <= 4 terms q_i sqrt(d_i)
        # with |q_i| <= 50/1, denominators <= 50, d_i <= 100 has conjugate
        # product a nonzero rational with denominator at most 50^64 and
        # conjugates at most 2000, so |x| >= 50^-64 / 2000^15 > 1e-158.
        # At 200 digits the oracle's absolute error is far below 1e-180.
        squarefree = [d for d in range(1, 101) if squarefree_decompose(d)[1] == d]
        rng = random.Random(90125)
        threshold = Decimal("1e-180")
        with localcontext() as ctx:
            ctx.prec = 200
            for _ in range(10000):
                terms = {
                    d: F(rng.randint(-50, 50), rng.randint(1, 50))
                    for d in rng.sample(squarefree, rng.randint(1, 4))
                }
                x = RadExt(terms)
                approx = sum(
                    (
                        Decimal(q.numerator) / Decimal(q.denominator) * Decimal(d).sqrt()
                        for d, q in x.terms.items()
                    ),
                    Decimal(0),
                )
                if x.sign() == 0:
                    assert abs(approx) < threshold
                else:
                    assert abs(approx) > threshold
                    assert x.sign() == (1 if approx > 0 else -1)


_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=9)
_radexts = st.dictionaries(
    st.sampled_from([1, 2, 3, 5, 6, 7, 10, 11, 13, 15]), _rationals, max_size=3
).map(RadExt)


class TestRingLaws:
    @given(_radexts, _radexts)
    @settings(deadline=None)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(_radexts, _radexts, _radexts)
    @settings(deadline=None)
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(_radexts, _radexts, _radexts)
    @settings(deadline=None)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(_radexts)
    @settings(deadline=None)
    def test_additive_inverse_and_identities(self, a):
        assert (a - a).is_zero
        assert a + ZERO == a
        assert a * ONE == a
        assert a * ZERO == ZERO
        assert -(-a) == a

    @given(_radexts)
    @settings(deadline=None)
    def test_sign_is_consistent(self, a):
        s = a.sign()
        assert s in (-1, 0, 1)
        assert (s == 0) == a.is_zero
        assert (-a).sign() == -s

    @given(
        st.integers(min_value=1, max_value=10**4),
        st.integers(min_value=1, max_value=10**4),
    )
    @settings(deadline=None)
    def test_sqrt_squares_back(self, num, den):
        q = F(num, den)
        root = sqrt_rational(q)
        assert root * root == q
        assert root.sign() == 1


class TestTriples:
    @given(_radexts)
    @settings(deadline=None)
    def test_round_trip(self, a):
        assert RadExt.from_triples(a.to_triples()) == a

    def test_sorted_by_radicand(self):
        x = RadExt({7: 1, 2: F(1, 3), 1: -2})
        assert x.to_triples() == [[-2, 1, 1], [1, 3, 2], [1, 1, 7]]

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            RadExt.from_triples([[1, 2]])  # not a triple
        with pytest.raises(ValueError):
            RadExt.from_triples([[1, 0, 2]])  # zero denominator
        with pytest.raises(ValueError):
            RadExt.from_triples([[0, 1, 2]])  # zero coefficient
        with pytest.raises(ValueError):
            RadExt.from_triples([[1, 1, 8]])  # radicand not squarefree
        with pytest.raises(ValueError):
            RadExt.from_triples([[1, 1, 3], [1, 1, 2]])  # out of order
        with pytest.raises(ValueError):
            RadExt.from_triples([[1, 1, 2], [1, 1, 2]])  # duplicate radicand
