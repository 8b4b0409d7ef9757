from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lforge.errors import InexactDivisionError, NonUnitError
from lforge.exact_algebra import (
    MPoly,
    TruncSeries,
    UPoly,
    cyclotomic,
    is_squarefree,
    series_inv,
    series_mul,
    substitute_power,
    upoly_divrem,
    upoly_gcd,
)

from oracles import cyclotomic_mobius

X = UPoly.x()
ints = st.integers(-20, 20)
coeff_lists = st.lists(ints, max_size=7)


def monic(coeffs):
    return UPoly(list(coeffs) + [1])


class TestUPoly:
    def test_trailing_zeros_stripped(self):
        assert UPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert UPoly([0, 0]).is_zero()
        assert UPoly().degree == -1

    def test_format(self):
        assert str(X**2 - 1) == "x^2 - 1"
        assert str(UPoly([1, -1, 1])) == "x^2 - x + 1"

    def test_divrem_examples(self):
        assert upoly_divrem(X**2 - 1, X - 1) == (X + 1, UPoly())
        assert upoly_divrem(X**2 - 2, X - 2) == (X + 2, UPoly([2]))
        assert upoly_divrem(X**6 - 1, X**2 - 1) == (X**4 + X**2 + 1, UPoly())

    def test_non_monic_inexact(self):
        with pytest.raises(InexactDivisionError):
            upoly_divrem(X**2 + 1, 2 * X)
        # exact division by a non-monic divisor is allowed
        assert upoly_divrem(4 * X**2 - 2, 2 * X**2 - 1)[0] == UPoly([2])

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            upoly_divrem(X, UPoly())

    @given(coeff_lists, coeff_lists)
    def test_divrem_reconstructs(self, f, g):
        f, g = UPoly(f), monic(g)
        q, r = upoly_divrem(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_ring_axioms(self, a, b, c):
        a, b, c = UPoly(a), UPoly(b), UPoly(c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * UPoly([1]) == a
        assert a + b == b + a

    def test_substitute_power(self):
        assert substitute_power(X - 2, 2) == X**2 - 2
        assert substitute_power(X**5 - 1, 3) == X**15 - 1
        f = X**3 + 2 * X + 5
        assert substitute_power(f, 1) == f

    def test_gcd_and_squarefree(self):
        assert upoly_gcd(X**2 - 1, X**2 - 2 * X + 1) == X - 1
        assert is_squarefree(X**3 - X)
        assert not is_squarefree((X - 1) ** 2 * (X + 3))
        assert upoly_gcd(UPoly([Fraction(1, 2), 1]), UPoly([1])) == UPoly([1])


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic(1) == X - 1
        assert cyclotomic(2) == X + 1
        assert cyclotomic(6) == X**2 - X + 1

    @pytest.mark.parametrize("d", range(1, 41))
    def test_against_mobius_product(self, d):
        assert list(cyclotomic(d).coeffs) == cyclotomic_mobius(d)

    @pytest.mark.parametrize("n", range(1, 65))
    def test_product_over_divisors(self, n):
        prod = UPoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == X**n - 1

    def test_bad_index(self):
        with pytest.raises(ValueError):
            cyclotomic(0)


class TestMPoly:
    def test_canonical_terms(self):
        p = MPoly({(1, 0, 0): 2, (0,): 0, (1,): -2})
        assert p.is_zero()
        assert MPoly({(2, 0): 1}).terms == {(2,): 1}

    def test_format_and_eval(self):
        x1, x2 = MPoly.var(0), MPoly.var(1)
        p = x1 * x1 - x2 * 2
        assert p.format(["a", "b"]) == "a^2 - 2*b"
        assert p.evaluate([3, 4]) == 1

    @given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), ints, max_size=4),
           st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), ints, max_size=4),
           st.lists(ints, min_size=2, max_size=2))
    def test_evaluation_is_a_ring_map(self, a, b, point):
        a, b = MPoly(a), MPoly(b)
        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
        assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)

    def test_to_json(self):
        p = MPoly.var(0) * MPoly.var(1) - MPoly.var(1)
        data = p.to_json(2)
        assert {"exponents": [1, 1], "coefficient": 1} in data
        assert {"exponents": [0, 1], "coefficient": -1} in data


unit_series = st.builds(lambda c0, rest: TruncSeries([c0] + rest, 8), st.sampled_from([1, -1]), st.lists(ints, max_size=8))


class TestSeries:
    def test_examples(self):
        one_plus = TruncSeries([1, 1], 5)
        assert one_plus * TruncSeries([1, -1], 5) == TruncSeries([1, 0, -1], 5)
        assert series_inv(one_plus).coeffs == (1, -1, 1, -1, 1, -1)

    @given(unit_series)
    def test_inverse(self, a):
        assert series_mul(a, series_inv(a)) == TruncSeries.one(8)

    def test_non_unit(self):
        with pytest.raises(NonUnitError):
            series_inv(TruncSeries([2, 1], 3))

    def test_mixed_orders_truncate(self):
        s = TruncSeries([1, 1], 3) * TruncSeries([1, 1], 1)
        assert s.order == 1

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            TruncSeries([1], 2, "A") + TruncSeries([1], 2, "B")

    @given(unit_series, unit_series, unit_series)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
