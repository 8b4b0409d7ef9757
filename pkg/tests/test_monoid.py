from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lforge.errors import NonEnumerableError
from lforge.monoid import (
    ZERO,
    Cyclic,
    FreeAdd,
    MonoidRingElem,
    PointedMonoid,
    Product,
    RootsOfUnity,
    fixed_point_count,
    frobenius,
    monoid_ring_iso,
    monoid_ring_iso_inv,
    points,
    poly_monoid,
)


def test_poly_monoid():
    M = poly_monoid(Cyclic(3))
    assert M.factors == (Cyclic(3), FreeAdd())
    assert M.format((1, 2)) == "g*x^2"
    assert M.format((2, 0)) == "g^2"
    assert M.evaluate((1, 2), 2) == Cyclic(3).mul(1, Cyclic(3).power(2, 2))
    N = poly_monoid(FreeAdd("y"))
    assert N.factors == (FreeAdd("y"), FreeAdd())
    assert N.mul((1, 2), (3, 4)) == (4, 6)


def test_pointed_monoid_zero_absorbs():
    P = PointedMonoid(Cyclic(4))
    for m in P.elements():
        assert P.mul(ZERO, m) is ZERO
    assert P.one != ZERO
    assert P.order() == 5


class TestPoints:
    def test_examples(self):
        assert len(points(FreeAdd(), Cyclic(5))) == 6
        assert len(points(FreeAdd(), Cyclic(1))) == 2
        # a group element of order 2 must go to an element b with b^2 = 1 in C3+; only 1 qualifies
        assert points(Cyclic(2), Cyclic(3)) == [(0,)]

    @pytest.mark.parametrize("n", range(1, 31))
    def test_affine_line_points(self, n):
        assert len(points(FreeAdd(), Cyclic(n))) == n + 1

    def test_product_source(self):
        maps = points(Product([Cyclic(2), Cyclic(3)]), Cyclic(6))
        # generator images of orders dividing 2 and 3 respectively
        assert len(maps) == 2 * 3

    def test_infinite_target(self):
        with pytest.raises(NonEnumerableError):
            points(FreeAdd(), FreeAdd())
        with pytest.raises(NonEnumerableError):
            points(FreeAdd(), RootsOfUnity())


class TestFrobenius:
    def test_examples(self):
        Q = RootsOfUnity()
        assert frobenius(Q, 3, Fraction(1, 6)) == Fraction(1, 2)
        assert frobenius(FreeAdd(), 2, 3) == 6
        assert frobenius(Cyclic(7), 1, 4) == 4
        assert frobenius(Cyclic(7), 3, ZERO) is ZERO

    @given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 59), st.integers(1, 30))
    def test_composition(self, k, l, a, n):
        for M, m in [
            (Cyclic(n), a % n),
            (FreeAdd(), a),
            (RootsOfUnity(60), Fraction(a, 60)),
            (Product([Cyclic(n), FreeAdd()]), (a % n, a)),
        ]:
            assert frobenius(M, k, frobenius(M, l, m)) == frobenius(M, k * l, m)


class TestFixedPoints:
    def test_examples(self):
        assert fixed_point_count(1) == 1
        assert fixed_point_count(2) == 2
        assert fixed_point_count(6) == 6

    @pytest.mark.parametrize("k", list(range(2, 60)) + [97, 360, 1000])
    def test_count_by_reduced_fractions(self, k):
        # independent oracle: fractions a/b in lowest terms with b | k-1, plus the point 0
        from math import gcd

        fracs = {(a, b) for b in range(1, k) if (k - 1) % b == 0 for a in range(b) if gcd(a, b) == 1}
        assert fixed_point_count(k) == len(fracs) + 1 == k


class TestMonoidRing:
    M = Product([Cyclic(2), FreeAdd()])

    def elem(self, terms):
        return MonoidRingElem(self.M, terms)

    def test_iso_example(self):
        e = self.elem({(1, 1): 2, (0, 0): 3})
        p = monoid_ring_iso(e)
        C2 = Cyclic(2)
        assert p.coeffs == (MonoidRingElem(C2, {0: 3}), MonoidRingElem(C2, {1: 2}))
        one = self.elem({(0, 0): 1})
        assert monoid_ring_iso(one).coeffs == (MonoidRingElem(C2, {0: 1}),)

    terms = st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 3)), st.integers(-4, 4), max_size=4)

    @given(terms, terms)
    def test_iso_is_ring_map(self, a, b):
        a, b = self.elem(a), self.elem(b)
        assert monoid_ring_iso(a * b) == monoid_ring_iso(a) * monoid_ring_iso(b)
        assert monoid_ring_iso(a + b) == monoid_ring_iso(a) + monoid_ring_iso(b)
        assert monoid_ring_iso_inv(monoid_ring_iso(a), self.M) == a

    def test_iso_rejects_other_monoids(self):
        with pytest.raises(TypeError):
            monoid_ring_iso(MonoidRingElem(Cyclic(3), {1: 1}))

    def test_arithmetic_and_format(self):
        C = Cyclic(6)
        g = MonoidRingElem.gen(C, 1)
        assert (g + 2) * (g - 2) == g * g - 4
        assert (g**6).format() == "1"
        assert (2 * g - g**3 + 1).format() == "1 + 2*g - g^3"
        assert (g + g * g).adams(3) == g**3 + 1
        assert (3 * g).augmentation() == 3
