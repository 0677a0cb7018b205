"""Core types and operations: diagrams, pure diagrams, residuals, windows."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from bettidecomp import (
    BettiDiagram,
    DegreeSequence,
    LaurentPolynomial,
    codimension,
    hk_residuals,
    normalize,
    numerator_polynomial,
    pure_diagram,
    window_of,
)
from bettidecomp.errors import (
    CodimensionExceedsAmbient,
    InvalidDegreeSequence,
    InvalidDiagram,
    NotGeneratedInDegreeZero,
    UndefinedOnZero,
)


def brute_pure_entry(d, i):
    """Hand oracle: evaluate the product formula term by term."""
    value = Fraction((-1) ** i)
    for j, dj in enumerate(d):
        if j != i:
            value /= dj - d[i]
    return value


class TestPureDiagram:
    def test_boxed_example(self):
        p = pure_diagram((0, 2, 3, 5), 3)
        assert [p.entry(i) for i in range(4)] == [
            Fraction(1, 30),
            Fraction(1, 6),
            Fraction(1, 6),
            Fraction(1, 30),
        ]

    def test_single_degree_is_empty_product(self):
        p = pure_diagram((5,), 3)
        assert p.betti == BettiDiagram(3, {(0, 5): 1})

    def test_koszul_sequence(self):
        p = pure_diagram((0, 1, 2, 3), 3)
        assert [p.entry(i) for i in range(4)] == [
            Fraction(1, 6),
            Fraction(1, 2),
            Fraction(1, 2),
            Fraction(1, 6),
        ]

    @pytest.mark.parametrize("d", [(0, 1), (0, 2, 5), (1, 3, 4, 7), (-2, 0, 1)])
    def test_matches_product_oracle(self, d):
        p = pure_diagram(d, 4)
        for i in range(len(d)):
            assert p.entry(i) == brute_pure_entry(d, i)

    def test_positivity_everywhere(self):
        for s in range(5):
            for d in combinations(range(-1, 7), s + 1):
                p = pure_diagram(d, 4)
                assert all(v > 0 for _, v in p.betti.items())

    def test_rejects_non_increasing(self):
        with pytest.raises(InvalidDegreeSequence):
            pure_diagram((0, 2, 2), 3)
        with pytest.raises(InvalidDegreeSequence):
            DegreeSequence((3, 1))

    def test_rejects_too_long(self):
        with pytest.raises(CodimensionExceedsAmbient):
            pure_diagram((0, 1, 2, 3), 2)


class TestNormalize:
    def test_point(self):
        nd = normalize(pure_diagram((0,), 2))
        assert nd.betti == BettiDiagram(2, {(0, 0): 1})
        assert nd.scale == 1

    def test_codim_two(self):
        nd = normalize(pure_diagram((0, 1, 2), 2))
        assert nd.betti == BettiDiagram(2, {(0, 0): 1, (1, 1): 2, (2, 2): 1})

    def test_example_sequence(self):
        nd = normalize(pure_diagram((0, 2, 3, 5), 3))
        assert nd.scale == 30
        assert [nd.betti[(i, d)] for i, d in enumerate((0, 2, 3, 5))] == [1, 5, 5, 1]

    def test_entry_at_origin_is_one(self):
        for d in [(0, 3), (0, 1, 4), (0, 2, 3, 5)]:
            assert normalize(pure_diagram(d, 3)).betti[(0, 0)] == 1

    def test_rejects_shifted(self):
        with pytest.raises(NotGeneratedInDegreeZero):
            normalize(pure_diagram((1, 2), 3))


class TestHerzogKuhl:
    def test_zero_diagram(self):
        assert hk_residuals(BettiDiagram(3, {}), 3) == [0, 0, 0]

    def test_pure_diagram_satisfies_its_codimension(self):
        assert hk_residuals(pure_diagram((0, 2, 3, 5), 3).betti, 3) == [0, 0, 0]

    def test_quotient_satisfies_one_equation(self, quotient_diagram):
        assert hk_residuals(quotient_diagram, 1) == [0]
        assert hk_residuals(quotient_diagram, 2)[1] != 0

    def test_direct_summation_oracle(self):
        b = BettiDiagram(2, {(0, 1): Fraction(1, 2), (1, 3): 5, (2, 2): -2})
        for s in range(4):
            expected = [
                sum((-1) ** i * v * Fraction(j) ** m for (i, j), v in b.items())
                for m in range(s)
            ]
            assert hk_residuals(b, s) == expected

    def test_every_pure_diagram_randomized(self):
        # windows up to n = 5, width up to 4
        rng = random.Random(20260809)
        for _ in range(200):
            n = rng.randint(0, 5)
            s = rng.randint(0, n)
            M = rng.randint(-3, 3)
            N = M + rng.randint(0, 4)
            degs = []
            for i in range(s + 1):
                lo = max(M + i, degs[-1] + 1 if degs else M)
                if lo > N + i:
                    break
                degs.append(rng.randint(lo, N + i))
            if len(degs) != s + 1:
                continue
            p = pure_diagram(degs, n)
            assert hk_residuals(p.betti, s) == [0] * s
            assert codimension(p.betti) == s


class TestNumeratorPolynomial:
    def test_zero(self):
        assert numerator_polynomial(BettiDiagram(2, {})).is_zero

    def test_quotient(self, quotient_diagram):
        s = numerator_polynomial(quotient_diagram)
        assert s.items() == [(0, 1), (2, -2), (4, 2), (5, -1)]

    def test_koszul_three(self):
        s = numerator_polynomial(pure_diagram((0, 1, 2, 3), 3).betti)
        assert s == LaurentPolynomial({0: Fraction(1, 6), 1: Fraction(-1, 2), 2: Fraction(1, 2), 3: Fraction(-1, 6)})
        # equals (1-t)^3 / 6
        cube = LaurentPolynomial({0: 1}).times_one_minus_t(3).scaled(Fraction(1, 6))
        assert s == cube

    def test_linearity(self):
        rng = random.Random(17)
        for _ in range(50):
            n = rng.randint(0, 4)
            def rand_diag():
                entries = {}
                for _ in range(rng.randint(0, 6)):
                    i = rng.randint(0, n)
                    j = rng.randint(-2, 6)
                    entries[(i, j)] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                return BettiDiagram(n, entries)
            x, y = rand_diag(), rand_diag()
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
            lhs = numerator_polynomial(x.scaled(a) + y)
            rhs = numerator_polynomial(x).scaled(a) + numerator_polynomial(y)
            assert lhs == rhs


class TestCodimension:
    def test_point(self):
        assert codimension(pure_diagram((0,), 4).betti) == 0

    def test_koszul(self):
        assert codimension(pure_diagram((0, 1, 2, 3), 3).betti) == 3

    def test_quotient(self, quotient_diagram):
        assert codimension(quotient_diagram) == 1

    def test_zero_rejected(self):
        with pytest.raises(UndefinedOnZero):
            codimension(BettiDiagram(3, {}))

    def test_agrees_with_residuals(self):
        rng = random.Random(99)
        for _ in range(60):
            n = rng.randint(0, 5)
            s = rng.randint(0, n)
            degs = sorted(rng.sample(range(0, s + 5), s + 1))
            b = pure_diagram(degs, n).betti
            c = codimension(b)
            assert all(r == 0 for r in hk_residuals(b, c))
            assert any(hk_residuals(b, c + 1))


class TestWindowOf:
    def test_single_entry(self):
        assert window_of(BettiDiagram(2, {(0, 0): 1})) == (0, 0)

    def test_quotient(self, quotient_diagram):
        assert window_of(quotient_diagram) == (0, 2)

    def test_linear_pure(self):
        assert window_of(pure_diagram((1, 2, 3), 3).betti) == (1, 1)

    def test_zero_rejected(self):
        with pytest.raises(UndefinedOnZero):
            window_of(BettiDiagram(1, {}))


class TestBettiDiagram:
    def test_drops_zeros_and_sums_duplicates(self):
        b = BettiDiagram(2, [((0, 0), 1), ((0, 0), -1), ((1, 2), 3)])
        assert b.support() == ((1, 2),)

    def test_rejects_floats(self):
        with pytest.raises(InvalidDiagram):
            BettiDiagram(2, {(0, 0): 0.5})

    def test_rejects_out_of_range_column(self):
        with pytest.raises(IndexError):
            BettiDiagram(2, {(3, 3): 1})
        with pytest.raises(IndexError):
            BettiDiagram(2, {(-1, 0): 1})

    def test_vector_space_ops(self):
        a = BettiDiagram(2, {(0, 0): 1, (1, 2): 2})
        b = BettiDiagram(2, {(1, 2): Fraction(1, 2)})
        assert (a - b)[(1, 2)] == Fraction(3, 2)
        assert (a + b).scaled(2)[(0, 0)] == 2
        assert 3 * b == BettiDiagram(2, {(1, 2): Fraction(3, 2)})

    def test_hash_and_eq(self):
        a = BettiDiagram(2, {(0, 0): Fraction(2, 4)})
        b = BettiDiagram(2, {(0, 0): Fraction(1, 2)})
        assert a == b and hash(a) == hash(b)


class TestLaurentPolynomial:
    def test_exact_division(self):
        p = LaurentPolynomial({0: 1, 2: -2, 4: 2, 5: -1})
        q = p.exact_div_one_minus_t()
        assert q == LaurentPolynomial({0: 1, 1: 1, 2: -1, 3: -1, 4: 1})
        assert q.times_one_minus_t() == p

    def test_division_requires_root_at_one(self):
        with pytest.raises(ValueError):
            LaurentPolynomial({0: 1}).exact_div_one_minus_t()

    def test_negative_support(self):
        p = LaurentPolynomial({-2: 1, -1: -1})
        assert p.exact_div_one_minus_t() == LaurentPolynomial({-2: 1})

    def test_order(self):
        p = LaurentPolynomial({0: 1}).times_one_minus_t(3)
        assert p.one_minus_t_order() == 3
