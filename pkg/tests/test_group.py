import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilcomplex import catalogue, group
from nilcomplex.exactnum import MultiPoly
from nilcomplex.expr import evaluate
from nilcomplex.liecore import LieAlgebra

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
coords = st.lists(fractions, min_size=6, max_size=6)


def e(i, c=Fraction(1)):
    v = [Fraction(0)] * 6
    v[i - 1] = c
    return v


def brackets_of(name):
    return catalogue.get(name).algebra


class TestCommutatorCorrection:
    def test_commuting(self):
        L = brackets_of("G6,3")
        assert group.commutator_correction(L, e(4), e(5)) == [0] * 6

    def test_g63_basic(self):
        L = brackets_of("G6,3")
        assert group.commutator_correction(L, e(1), e(2)) == e(4)

    def test_m18_depth(self):
        # literal expansion: C = [X,Y] + (1/2)([X,[X,Y]] + [Y,[X,Y]])
        #                      + (1/6)([X,[X,[X,Y]]] + [Y,[Y,[X,Y]]]) + (1/4)[X,[Y,[X,Y]]]
        L = brackets_of("M18")
        X, Y = e(1), e(2)
        br = L.bracket
        xy = br(X, Y)
        expected = [xy[k]
                    + Fraction(1, 2) * (br(X, xy)[k] + br(Y, xy)[k])
                    + Fraction(1, 6) * (br(X, br(X, xy))[k] + br(Y, br(Y, xy))[k])
                    + Fraction(1, 4) * br(X, br(Y, xy))[k]
                    for k in range(6)]
        got = group.commutator_correction(L, X, Y)
        assert got == expected
        # x3 plus corrections in x4, x5 and x6
        assert got[2:] == [1, Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)]

    def test_class_too_high(self):
        filiform = LieAlgebra(6, {(1, 2): {3: 1}, (1, 3): {4: 1},
                                  (1, 4): {5: 1}, (1, 5): {6: 1}})
        assert filiform.nilpotency_class() == 5
        with pytest.raises(group.ClassTooHigh):
            group.commutator_correction(filiform, e(1), e(2))


class TestNormalOrder:
    def test_ordered_word_unchanged(self):
        L = brackets_of("G6,3")
        word = [e(1, Fraction(2)), e(3, Fraction(-1)), e(6, Fraction(5))]
        assert group.normal_order(L, word) == [2, 0, -1, 0, 0, 5]

    def test_swap_example(self):
        # exp(x2) exp(x1) picks up a correction in the y^2 slot
        L = brackets_of("G6,3")
        got = group.normal_order(L, [e(2), e(1)])
        assert got == [1, 1, 0, -1, 0, 0]

    def test_empty_word(self):
        assert group.normal_order(brackets_of("M10"), []) == [0] * 6

    @settings(max_examples=25, deadline=None)
    @given(coords, coords)
    def test_swap_rule_consistency(self, X, Y):
        L = brackets_of("M18")
        C = group.commutator_correction(L, X, Y)
        assert group.normal_order(L, [X, Y]) == group.normal_order(L, [C, Y, X])


class TestMultiply:
    def test_identity(self):
        L = brackets_of("G6,6")
        a = [Fraction(1, 2), 3, -1, 0, 2, 5]
        assert group.multiply(L, [0] * 6, a) == a
        assert group.multiply(L, a, [0] * 6) == a

    @settings(max_examples=20, deadline=None)
    @given(coords, coords, coords)
    def test_associativity(self, a, b, c):
        L = brackets_of("M10")
        lhs = group.multiply(L, a, group.multiply(L, b, c))
        rhs = group.multiply(L, group.multiply(L, a, b), c)
        assert lhs == rhs

    @settings(max_examples=20, deadline=None)
    @given(coords)
    def test_inverse(self, a):
        L = brackets_of("G6,5")
        assert group.multiply(L, group.inverse(L, a), a) == [0] * 6

    def test_exp_coords_of_basis_vectors(self):
        L = brackets_of("M18")
        for j in range(1, 7):
            assert group.exp_coords(L, e(j, Fraction(3, 2))) == e(j, Fraction(3, 2))

    def test_exp_coords_consistent_with_flow_composition(self):
        # exp(v) * exp(-v) = identity for general v
        L = brackets_of("M18")
        rng = random.Random(0)
        for _ in range(5):
            v = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(6)]
            c = group.exp_coords(L, v)
            cinv = group.exp_coords(L, [-x for x in v])
            assert group.multiply(L, c, cinv) == [0] * 6


class TestLeftInvariantFields:
    def test_standard_derivations(self):
        for name in ("G6,3", "M10", "M18"):
            F = group.left_invariant_fields(brackets_of(name))
            for j in (3, 4, 5, 6):
                for m in range(6):
                    expected = 1 if m == j - 1 else 0
                    assert F[j - 1][m] == expected

    def test_displayed_fields_all_algebras(self):
        env = {c: MultiPoly.var(c) for c in group.COORDS}
        for entry in catalogue.entries():
            fields = (group.m5_natural_fields() if entry.natural_chart
                      else group.left_invariant_fields(entry.algebra))
            for j, display in entry.fields_display:
                for m, cell in enumerate(display):
                    assert fields[j - 1][m] == MultiPoly.coerce(evaluate(cell, env)), \
                        (entry.name, j, m)


class TestM5Model:
    def test_identity_and_shape(self):
        a = [Fraction(1), 2, 3, 4, 5, 6]
        assert group.m5_matrix_multiply([0] * 6, a) == a
        assert group.m5_matrix_multiply(a, [0] * 6) == a

    def test_chi_closed_form(self):
        # w3_{ax} - w3_a - w3_x = a1*x2 - b1*y2 + ((i - j55)/j65)*(a1*y2 + b1*x2)
        rng = random.Random(1)
        for _ in range(10):
            j55 = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            j65 = Fraction(rng.randint(1, 4), rng.randint(1, 3))
            a = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(6)]
            x = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(6)]
            prod = group.m5_matrix_multiply(a, x)

            def w3(c):
                re = c[4] - j55 / j65 * c[5]
                im = c[5] / j65
                return re, im

            pr, pi = w3(prod)
            ar, ai = w3(a)
            xr, xi = w3(x)
            # chi = a1*x2 - b1*y2 + ((i - j55)/j65)*(a1*y2 + b1*x2)
            s = a[0] * x[3] + a[1] * x[2]
            chi_re = a[0] * x[2] - a[1] * x[3] - j55 / j65 * s
            chi_im = s / j65
            assert (pr - ar - xr, pi - ai - xi) == (chi_re, chi_im)

    @settings(max_examples=20, deadline=None)
    @given(coords, coords)
    def test_model_matches_engine(self, a, x):
        L = brackets_of("M5")
        na = group.normal_order(L, group.m5_natural_to_word(a))
        nx = group.normal_order(L, group.m5_natural_to_word(x))
        lhs = group.multiply(L, na, nx)
        rhs = group.normal_order(
            L, group.m5_natural_to_word(group.m5_matrix_multiply(a, x)))
        assert lhs == rhs
