from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollbei.graphs import LabeledGraph, enumerate_graphs
from scrollbei.groebner import (
    Ideal,
    buchberger,
    division,
    eliminate,
    failing_pair,
    graded_dim_ideal,
    ideal_contains,
    ideal_equal,
    ideal_member,
    initial_ideal,
    intersect,
    is_groebner,
    normal_form,
    radical_membership,
    radical_power_search,
    s_polynomial,
    saturate,
)
from scrollbei.linalg import exact_rank, graded_dim_by_rank
from scrollbei.monomial_ideal import MonomialIdeal, power_of_variables
from scrollbei.polynomial import GREVLEX, LEX, PolyRing, Polynomial, parse_polynomial
from scrollbei.scroll import (
    all_variables_product,
    middle_variables_ideal,
    paper_minor,
    scroll_edge_ideal,
    scroll_full_ideal,
    scroll_minor,
)
from scrollbei.suites import FIGURE_2A


def P(text, ring):
    return parse_polynomial(text, ring)


class TestSPolynomial:
    def test_shared_vertex(self, r3):
        s = s_polynomial(scroll_minor(r3, 1, 2), scroll_minor(r3, 1, 3))
        assert s in (P("x1*x3^2 - x1*x2*x4", r3), -P("x1*x3^2 - x1*x2*x4", r3))

    def test_case_one(self, r3):
        s = s_polynomial(scroll_minor(r3, 1, 3), scroll_minor(r3, 2, 3))
        target = r3.x(4) * paper_minor(r3, 1, 2)
        assert s in (target, -target)

    def test_self(self, r3):
        f = scroll_minor(r3, 1, 3)
        assert s_polynomial(f, f).is_zero()

    @pytest.mark.parametrize("i,k,l", [(1, 2, 5), (1, 3, 6), (2, 3, 6), (1, 2, 4)])
    def test_case_two_representation(self, i, k, l):
        ring = PolyRing.scroll(l + 1)
        j = k + 1
        s = s_polynomial(scroll_minor(ring, i, j), scroll_minor(ring, k, l))
        assert s == ring.x(i) * paper_minor(ring, k + 1, l) - ring.x(l + 1) * paper_minor(ring, i, k)
        basis = [scroll_minor(ring, *e) for e in [(i, j), (k, l), (i, k), (k + 1, l)]]
        assert normal_form(s, basis).is_zero()


def test_normal_form_basics(r3):
    basis = [scroll_minor(r3, 1, 2), scroll_minor(r3, 2, 3)]
    for b in basis:
        assert normal_form(b, basis).is_zero()
    x1 = r3.x(1)
    assert normal_form(x1, [r3.x(2) ** 2]) == x1


@given(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3))
def test_division_identity(a, b, c):
    ring = PolyRing.scroll(3)
    f = ring.monomial((a, b, 1, 0)) + ring.monomial((0, a, b, 2), c) + ring.x(2) ** 3
    basis = [scroll_minor(ring, 1, 2), scroll_minor(ring, 1, 3), scroll_minor(ring, 2, 3)]
    quots, rem = division(f, basis)
    assert sum((q * g for q, g in zip(quots, basis)), ring.zero()) + rem == f
    lms = [g.leading_monomial() for g in basis]
    for m in rem.terms:
        assert not any(all(x <= y for x, y in zip(lm, m)) for lm in lms)


class TestBuchberger:
    def test_zero_ideal(self, r3):
        assert buchberger(Ideal(r3, ())).elements == ()

    def test_path3_is_basis(self, r3):
        I = scroll_edge_ideal(LabeledGraph.path(3))
        assert is_groebner(I)
        assert set(buchberger(I).elements) == set(I.generators)

    def test_figure_2a_not_basis(self):
        I = scroll_edge_ideal(FIGURE_2A)
        assert not is_groebner(I)
        assert failing_pair(I) is not None
        gb = buchberger(I)
        assert len(gb.elements) > len(I.generators)

    def test_single_generator(self, r3):
        assert is_groebner(Ideal(r3, (scroll_minor(r3, 1, 3),)))

    def test_initial_ideals(self):
        for n in range(2, 7):
            ring = PolyRing.scroll(n)
            J = initial_ideal(buchberger(scroll_edge_ideal(LabeledGraph.path(n))))
            squares = [tuple(2 if k == v else 0 for k in range(n + 1)) for v in range(1, n)]
            assert J == MonomialIdeal(ring, squares)
            Jk = initial_ideal(buchberger(scroll_edge_ideal(LabeledGraph.complete(n))))
            assert Jk == power_of_variables(ring, range(1, n), 2)

    def test_cliques_12_24(self):
        G = LabeledGraph.from_cliques([(1, 2), (2, 4)])
        ring = PolyRing.scroll(4)
        J = initial_ideal(buchberger(scroll_edge_ideal(G)))
        assert J == power_of_variables(ring, [1], 2) + power_of_variables(ring, [2, 3], 2)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_reduced_is_idempotent_and_order_independent_input(self, n):
        I = scroll_edge_ideal(LabeledGraph.complete(n))
        gb = buchberger(I)
        assert buchberger(gb.as_ideal()).elements == gb.elements
        rev = Ideal(I.ring, tuple(reversed(I.generators)))
        assert buchberger(rev).elements == gb.elements

    def test_lex_basis_equals_same_ideal(self, r3):
        I = scroll_full_ideal(3)
        assert ideal_equal(buchberger(I, LEX).as_ideal(), I)

    def test_unit_ideal(self, r3):
        assert buchberger(Ideal(r3, (r3.x(1), r3.x(1) + r3.one()))).is_unit()


class TestMembership:
    def test_generator_and_zero(self, r3):
        I = scroll_edge_ideal(LabeledGraph.path(3))
        gb = buchberger(I)
        assert all(ideal_member(g, gb) for g in I.generators)
        assert ideal_member(r3.zero(), gb)

    def test_delta13_needs_multiplier(self, r3):
        gb = buchberger(scroll_edge_ideal(LabeledGraph.path(3)))
        d13 = paper_minor(r3, 1, 3)
        assert not ideal_member(d13, gb)
        assert ideal_member(r3.x(3) * d13, gb)


class TestIdealOps:
    def test_equal_self(self, r3):
        I = scroll_full_ideal(3)
        assert ideal_equal(I, I)

    def test_radical_case_intersection(self):
        assert ideal_equal(scroll_edge_ideal(LabeledGraph.path(3)),
                           intersect(scroll_full_ideal(3), middle_variables_ideal(3)))
        assert not ideal_equal(scroll_edge_ideal(LabeledGraph.path(4)),
                               intersect(scroll_full_ideal(4), middle_variables_ideal(4)))

    def test_eliminate_examples(self):
        ring = PolyRing(2, ("t", "x1"))
        assert eliminate(Ideal(ring, (ring.gen(0),)), 1).generators == ()
        ring = PolyRing(3, ("t", "x1", "x2"))
        t, x1, x2 = ring.gen(0), ring.gen(1), ring.gen(2)
        E = eliminate(Ideal(ring, (t * x1 - ring.one(), x1 * x2)), 1)
        assert E.generators == (E.ring.gen(1),)

    def test_intersect_monomials(self):
        ring = PolyRing(2)
        I = intersect(Ideal(ring, (ring.gen(0),)), Ideal(ring, (ring.gen(1),)))
        assert ideal_equal(I, Ideal(ring, (ring.gen(0) * ring.gen(1),)))

    def test_saturate_path3(self, r3):
        I = saturate(scroll_edge_ideal(LabeledGraph.path(3)), all_variables_product(r3))
        assert ideal_equal(I, scroll_full_ideal(3))
        assert saturate(Ideal(r3, ()), r3.x(1)).generators == ()

    def test_intersection_contained_in_both(self):
        I, J = scroll_full_ideal(4), middle_variables_ideal(4)
        K = intersect(I, J)
        assert ideal_contains(I, K) and ideal_contains(J, K)


class TestRadicalMembership:
    def test_member_directly(self, r3):
        I = scroll_edge_ideal(LabeledGraph.path(3))
        assert radical_membership(I.generators[0], I)

    def test_delta13_not_in_sqrt_path(self, r3):
        # the point (1, 0, 0, 1) kills I_{P_3} but not delta_13
        I = scroll_edge_ideal(LabeledGraph.path(3))
        d13 = paper_minor(r3, 1, 3)
        assert d13.evaluate((1, 0, 0, 1)) != 0
        assert all(g.evaluate((1, 0, 0, 1)) == 0 for g in I.generators)
        assert not radical_membership(d13, I)
        assert radical_power_search(d13, I, 4) is None

    def test_power_search_agrees(self, r3):
        # x2^2 in sqrt((x2^4)) but not in the ideal itself
        I = Ideal(r3, (r3.x(2) ** 4,))
        assert radical_membership(r3.x(2), I)
        assert radical_power_search(r3.x(2), I, 5) == 4

    def test_x1_not_in_sqrt(self):
        for G in [LabeledGraph.path(4), LabeledGraph.complete(4)]:
            I = scroll_edge_ideal(G)
            assert not radical_membership(I.ring.x(1), I)


def test_quadric_count_two_ways():
    for n in range(1, 6):
        for G in enumerate_graphs(n):
            I = scroll_edge_ideal(G)
            assert graded_dim_by_rank(I, 2) == len(G.edges) == graded_dim_ideal(I, 2)


def test_exact_rank_small():
    assert exact_rank([{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]) == 2
    assert exact_rank([]) == 0
