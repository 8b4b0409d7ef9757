import random
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lforge.exact_algebra import TruncSeries, UPoly, series_inv
from lforge.lambda_rings import (
    BinomialZ,
    ExceedsBound,
    MonoidRing,
    PolyOver,
    binomial,
    check_axioms,
    degree,
    degree_le_one_submonoid,
    polynomial_ring,
    sample_pairs,
)
from lforge.monoid import Cyclic, MonoidRingElem, Product
from lforge.symmetric import newton_adams

from oracles import binom_any

Z = BinomialZ()


def ring(n):
    return MonoidRing(Cyclic(n))


def elements(n):
    """Strategy for elements of Z[C_n] with small support and coefficients."""
    M = Cyclic(n)
    return st.dictionaries(st.integers(0, n - 1), st.integers(-3, 3), max_size=3).map(lambda t: MonoidRingElem(M, t))


class ZeroSquareZ(BinomialZ):
    name = "Z(lambda^2=0)"

    def lambda_n(self, x, n):
        return 0 if n == 2 else super().lambda_n(x, n)


class TestBinomial:
    def test_examples(self):
        assert Z.lambda_n(4, 2) == 6
        assert Z.lambda_n(1, 3) == 0
        assert Z.lambda_n(-1, 3) == -1

    @given(st.integers(-30, 30), st.integers(0, 8))
    def test_falling_factorial(self, m, n):
        assert binomial(m, n) == binom_any(m, n)

    @given(st.integers(-10, 10), st.integers(1, 6))
    def test_adams_trivial(self, m, k):
        assert Z.adams(m, k) == m

    def test_lambda_t_of_minus_one(self):
        assert Z.lambda_t(-1, 6) == series_inv(TruncSeries([1, 1], 6))


class TestMonoidLambda:
    def test_examples(self):
        R = ring(6)
        g, h = R.gen(1), R.gen(2)
        assert R.lambda_n(g + h, 2) == g * h
        for n in range(2, 6):
            assert R.lambda_n(R.one(), n) == 0
        assert R.lambda_t(R.zero(), 5) == TruncSeries.one(5)
        assert R.lambda_t(g, 4).coeffs == (R.one(), g, R.zero(), R.zero(), R.zero())
        assert R.lambda_t(-g, 6) == series_inv(TruncSeries([R.one(), g], 6))

    def test_adams_examples(self):
        R = ring(3)
        g, h = R.gen(1), R.gen(2)
        assert R.adams(g - h, 2) == g * g - h * h
        for k in range(1, 6):
            assert R.adams(g, k) == g**k

    @given(elements(6), elements(6))
    def test_lambda_t_additive(self, x, y):
        R = ring(6)
        assert R.lambda_t(x + y, 8) == R.lambda_t(x, 8) * R.lambda_t(y, 8)

    @given(elements(5), elements(5), st.integers(1, 6))
    def test_adams_ring_map(self, x, y, k):
        R = ring(5)
        assert R.adams(x * y, k) == R.adams(x, k) * R.adams(y, k)
        assert R.adams(x + y, k) == R.adams(x, k) + R.adams(y, k)
        # Newton recursion agrees with the direct action m -> m^k
        assert R.adams(x, k) == x.adams(k)

    @given(elements(4), st.integers(1, 5), st.integers(1, 5))
    def test_adams_composition(self, x, k, l):
        R = ring(4)
        assert R.adams(R.adams(x, l), k) == R.adams(x, k * l)

    @given(elements(6), st.integers(1, 5))
    def test_adams_matches_newton_polynomial(self, x, k):
        R = ring(6)
        lam = R.lambda_t(x, k).coeffs
        assert newton_adams(k).evaluate(list(lam[1 : k + 1]), R.one()) == R.adams(x, k)


class TestDegree:
    def test_examples(self):
        R = ring(5)
        assert degree(R, R.gen(1), 4) == 1
        R6 = ring(6)
        assert degree(R6, R6.gen(1) + R6.gen(2), 4) == 2
        for bound in (1, 3, 7):
            assert degree(R, -R.gen(1), bound) == ExceedsBound(bound)
        assert degree(Z, -2, 5) == ExceedsBound(5)
        assert degree(Z, 3, 1) == 3
        assert degree(R, R.zero(), 3) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_degree_one_iff_generator(self, n):
        # exhaustive for support <= 2 (support 3 runs in the acceptance suite)
        R = ring(n)
        M = Cyclic(n)
        coeffs = [c for c in range(-3, 4) if c]
        for k in range(0, 3):
            for supp in combinations(range(n), k):
                for cs in product(coeffs, repeat=k):
                    x = MonoidRingElem(M, dict(zip(supp, cs)))
                    is_gen = k == 1 and cs == (1,)
                    assert (degree(R, x, 4) == 1) == is_gen, x

    def test_degree_le_one_submonoid(self):
        R = ring(4)
        M = Cyclic(4)
        coeffs = [-2, -1, 1, 2]
        sample = []
        for k in (1, 2):
            for supp in combinations(range(4), k):
                for cs in product(coeffs, repeat=k):
                    sample.append(MonoidRingElem(M, dict(zip(supp, cs))))
        P = degree_le_one_submonoid(R, sample)
        assert set(P.monoid.elements()) == {R.gen(m) for m in range(4)}
        PZ = degree_le_one_submonoid(Z, range(-10, 11))
        assert PZ.monoid.elements() == [1]

    def test_exceeds_bound_is_distinct(self):
        e = ExceedsBound(4)
        assert e != 4 and not isinstance(e, int)
        with pytest.raises(ValueError):
            degree(Z, 1, 0)


class TestAxioms:
    def test_binomial(self):
        pairs = [(a, b) for a in range(-5, 6) for b in range(-5, 6)]
        assert check_axioms(Z, pairs, 4).passed

    def test_group_ring(self):
        R = ring(6)
        report = check_axioms(R, sample_pairs(R, 50, seed=7), 4)
        assert report.passed
        assert report.samples == 50

    def test_product_group_ring(self):
        R = MonoidRing(Product([Cyclic(2), Cyclic(3)]))
        assert check_axioms(R, sample_pairs(R, 10, seed=1), 3).passed

    def test_polynomial_over_z(self):
        R = PolyOver(Z)
        report = check_axioms(R, sample_pairs(R, 6, seed=3), 3, nm_max=6)
        assert report.passed, report.to_dict()

    def test_corrupted_family_fails_with_witness(self):
        report = check_axioms(ZeroSquareZ(), [(1, 1)], 2)
        assert not report.passed
        assert not report.results[4].passed
        assert report.results[4].witness == (1, 1, 2)

    def test_affine_line_lambda(self):
        R = polynomial_ring()
        x = R.gen(1)
        assert R.lambda_t(x, 3).coeffs[1] == x
        assert R.lambda_n(x - 1, 2) == R.one() - x

    def test_poly_over_tensor_rule(self):
        R = PolyOver(Z)
        p = UPoly([0, 3])  # 3x
        assert R.lambda_n(p, 2) == UPoly([0, 0, 3])
