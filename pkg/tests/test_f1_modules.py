import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lforge.errors import EnumerationError, IntegralityError, TruncationError
from lforge.exact_algebra import TruncSeries
from lforge.f1_modules import (
    F1Module,
    SquareZeroElem,
    SquareZeroLambda,
    enumerate_simple,
    hom_count,
    hom_count_sqzero,
    iter_simple,
    kernel_gcd,
    simple_classes,
    square_zero_lambda,
    validate_module,
    verdict,
)
from lforge.lambda_rings import check_axioms, sample_pairs
from lforge.witt import artin_hasse


def trivial(p, bound=12):
    return F1Module.cyclic(p, {}, bound)


class TestSquareZeroElem:
    def test_multiplication(self):
        o = (5,)
        a, b = SquareZeroElem(2, 3, o), SquareZeroElem(-1, 4, o)
        assert a * b == SquareZeroElem(-2, 2 * 4 + (-1) * 3, o)
        assert SquareZeroElem(0, 1, o) * SquareZeroElem(0, 2, o) == 0
        assert a**3 == a * a * a

    def test_units_and_division(self):
        o = (0,)
        u = SquareZeroElem(-1, 6, o)
        assert u * u.unit_inverse() == 1
        assert SquareZeroElem(4, 6, o).exact_div(2) == SquareZeroElem(2, 3, o)
        with pytest.raises(IntegralityError):
            SquareZeroElem(1, 1, (5,)).exact_div(2)

    @given(st.integers(-5, 5), st.integers(0, 6), st.integers(-5, 5), st.integers(0, 6), st.integers(-5, 5), st.integers(0, 6))
    def test_ring_axioms(self, z1, m1, z2, m2, z3, m3):
        o = (7,)
        a, b, c = SquareZeroElem(z1, m1, o), SquareZeroElem(z2, m2, o), SquareZeroElem(z3, m3, o)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


class TestValidate:
    def test_examples(self):
        assert validate_module(F1Module.cyclic(5, {n: 0 for n in range(2, 13)}))[0]
        assert validate_module(F1Module.cyclic(5, {n: 1 for n in range(2, 13)}))[0]
        ok, witness = validate_module(F1Module.cyclic(5, {2: 2, 4: 3}))
        assert not ok and witness == (2, 2)

    def test_matrix_family(self):
        swap = [[0, 1], [1, 0]]
        P = F1Module((3, 3), {2: swap, 4: [[1, 0], [0, 1]]}, 4)
        assert validate_module(P)[0]
        assert not validate_module(F1Module((3, 3), {2: swap, 4: swap}, 4))[0]

    @given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=3, max_size=3))
    def test_enumerated_families_are_valid(self, p, values):
        P = F1Module.cyclic(p, dict(zip((2, 3, 5), values)), 6)
        assert validate_module(P)[0]


class TestSquareZeroLambda:
    def test_examples(self):
        P = F1Module.cyclic(7, {2: 3, 3: 2, 5: 4}, 6)
        for m in range(7):
            e = SquareZeroElem(0, m, (7,))
            for n in range(1, 7):
                r = square_zero_lambda(P, e, n, 6)
                target = P.apply(n, (m,))[0]
                assert r.z == 0
                assert r.m[0] == (target if n % 2 else (-target) % 7)
        for z in range(-3, 4):
            e = SquareZeroElem(z, 5, (7,))
            assert square_zero_lambda(P, e, 1, 6) == e
        one = SquareZeroElem(1, 0, (7,))
        for n in range(2, 7):
            assert square_zero_lambda(P, one, n, 6).is_zero()

    def test_truncation(self):
        P = trivial(5, 6)
        e = SquareZeroElem(0, 1, (5,))
        with pytest.raises(TruncationError):
            square_zero_lambda(P, e, 4, 3)
        with pytest.raises(TruncationError):
            square_zero_lambda(P, e, 7, 7)

    def test_condition_star(self):
        # pure-M elements multiply to zero, so Artin-Hasse components of a
        # series with pure-M higher coefficients pairwise multiply to zero
        o = (5,)
        coeffs = [SquareZeroElem(1, 0, o)] + [SquareZeroElem(0, a, o) for a in (1, 2, 3, 4)]
        comps = artin_hasse(TruncSeries(coeffs, 4)).components
        for b in comps:
            for c in comps:
                assert (b * c).is_zero()

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_axiom_transfer(self, p):
        """Every valid module on C_p induces a lambda-ring on Z |> C_p."""
        for P, _ in iter_simple(p, 6):
            R = SquareZeroLambda(P)
            report = check_axioms(R, sample_pairs(R, 30, seed=p), 4, nm_max=6)
            assert report.passed, (P, report.to_dict())


class TestHomCount:
    def test_examples(self):
        assert hom_count(trivial(5)) == 5
        assert hom_count(F1Module.cyclic(5, {2: 1})) == 1
        P = F1Module.cyclic(6, {})
        assert hom_count(P) == 6 and not verdict(P).simple

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_square_zero_route_agrees(self, p):
        for P, _ in iter_simple(p, 6):
            assert hom_count_sqzero(P) == hom_count(P)

    @given(st.sampled_from([5, 7, 11]), st.lists(st.integers(0, 10), min_size=5, max_size=5))
    def test_kernel_formula(self, p, values):
        from lforge.f1_modules import _extend

        a = _extend(p, 12, dict(zip((2, 3, 5, 7, 11), values)))
        P = F1Module.cyclic(p, {n: a[n] for n in range(2, 13)})
        assert hom_count(P) == kernel_gcd(p, a)


class TestEnumeration:
    def test_examples(self):
        found = enumerate_simple(3, 6)
        assert len(found) == 27
        nondeg = [v for _, v in found if v.non_degenerate]
        assert len(nondeg) == 1 and nondeg[0].n_count == 3
        found = enumerate_simple(2, 2)
        assert len(found) == 2
        (P0, v0), (P1, v1) = found
        assert P0.endo(2) == 0 and v0.n_count == 2 and v0.non_degenerate
        assert v1.n_count == 1 and not v1.non_degenerate

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_only_trivial_family_non_degenerate(self, p):
        for P, values in iter_simple(p, 12):
            v = verdict(P)
            assert v.non_degenerate == (not any(values.values()))
            assert v.n_count == (p if not any(values.values()) else 1)

    def test_not_prime(self):
        with pytest.raises(EnumerationError):
            enumerate_simple(4, 6)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_classes_cover_families(self, p):
        classes = simple_classes(p, 12)
        assert sum(c.size for c in classes) == p**5
        literal = sorted(verdict(P).n_count for P, _ in iter_simple(p, 12))
        grouped = sorted(n for c in classes for n in [c.n_count] * c.size)
        assert literal == grouped
