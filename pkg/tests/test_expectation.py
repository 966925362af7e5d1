# -*- encoding: utf-8 -*-
import unittest
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from parameterized import parameterized

from boxmis import BoxmisError, ExpectationPolynomial, ORDER, OrderedGraph, PreconditionError, \
    greedy_p_polynomial, optimize_p
from boxmis.expectation.blocks import composite_ratio, marking_block_bound, marking_block_expectation, \
    marking_block_graph
from boxmis.expectation.graph import edge_bit, edge_slots, greedy_solution
from boxmis.expectation.mis import mis_exhaustive, mis_of_boxes, mis_size
from boxmis.expectation.polynomial import asymptotic_block_ratio, block_formula_optimum, block_formula_ratio, \
    derivative_roots
from boxmis.geometry.arrangement import intersection_graph
from tests.conftest import load_fixture


@st.composite
def graphs(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << edge_slots(n)) - 1))
    return OrderedGraph.from_edge_mask(n, mask)


def _popcount(mask):
    return bin(mask).count("1")


def test_hub_polynomial(hub_graph):
    poly = greedy_p_polynomial(hub_graph)
    assert poly.coeffs == (0, 5, -7, 3)
    assert poly.spec() == "0 5 -7 3"
    assert poly.pretty() == "5p - 7p^2 + 3p^3"
    assert eval(repr(poly)) == poly


def test_hub_graph_optimum(hub_graph):
    poly = greedy_p_polynomial(hub_graph)
    optimum = optimize_p(poly, mis_size(hub_graph)[0])
    assert optimum.p_star == Fraction(5, 9)
    assert optimum.exact
    assert optimum.max_expectation == Fraction(275, 243)
    assert optimum.min_ratio == Fraction(729, 275)
    assert derivative_roots(poly) == [(Fraction(5, 9), True)]


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2))
def test_optimum_dominates_dense_grid(graph):
    poly = greedy_p_polynomial(graph)
    optimum = optimize_p(poly, mis_size(graph)[0])
    grid = np.linspace(0.0, 1.0, 1000001)
    values = np.polyval([float(c) for c in reversed(poly.coeffs)], grid)
    assert abs(float(optimum.max_expectation) - values.max()) <= 1e-9


def test_star_optimum():
    # center first, two leaves: 3p - 2p^2 peaks at 3/4
    poly = greedy_p_polynomial(OrderedGraph.from_edges(3, [(0, 1), (0, 2)]))
    assert poly.coeffs == (0, 3, -2)
    optimum = optimize_p(poly, 2)
    assert optimum.p_star == Fraction(3, 4)
    assert optimum.min_ratio == Fraction(16, 9)


def test_edgeless_optimum_at_one():
    optimum = optimize_p(ExpectationPolynomial([0, 4]), 4)
    assert optimum.p_star == 1
    assert optimum.min_ratio == 1


def test_optimize_rejects_zero():
    with pytest.raises(PreconditionError):
        optimize_p(ExpectationPolynomial([]), 1)


def test_polynomial_spec_errors():
    with pytest.raises(BoxmisError):
        ExpectationPolynomial.from_spec(u"0 1.5")
    assert ExpectationPolynomial.from_spec(u"0") == ExpectationPolynomial([])
    assert ExpectationPolynomial([]).spec() == "0"


def test_scaled_value():
    poly = ExpectationPolynomial([0, 5, -7, 3])
    assert poly.scaled_value(1, 2) == poly.evaluate(Fraction(1, 2)) * 8
    assert poly.derivative() == ExpectationPolynomial([5, -14, 9])


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_polynomial_endpoints(graph):
    poly = greedy_p_polynomial(graph)
    assert poly.evaluate(0) == 0
    assert poly.evaluate(1) == _popcount(greedy_solution(graph))
    for k in range(11):
        assert 0 <= poly.evaluate(Fraction(k, 10)) <= graph.n


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4), st.randoms(use_true_random=False))
def test_polynomial_additive_over_disjoint_union(first, second, random):
    order = [0] * first.n + [1] * second.n
    random.shuffle(order)
    union = first.disjoint_union(second, order)
    assert greedy_p_polynomial(union) == greedy_p_polynomial(first) + greedy_p_polynomial(second)
    assert mis_size(union)[0] == mis_size(first)[0] + mis_size(second)[0]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=12))
def test_mis_matches_exhaustive(graph):
    size, witness = mis_size(graph)
    assert size == mis_exhaustive(graph)
    assert _popcount(witness) == size
    assert graph.is_independent(witness)


@settings(max_examples=5, deadline=None)
@given(graphs(max_n=16, min_n=14))
def test_mis_matches_exhaustive_large(graph):
    assert mis_size(graph)[0] == mis_exhaustive(graph)


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_edge_mask_round_trip(graph):
    assert OrderedGraph.from_edge_mask(graph.n, graph.edge_mask()) == graph
    assert OrderedGraph.from_spec(graph.spec()) == graph


def test_edge_bits():
    n = 5
    bits = [edge_bit(n, i, j) for i in range(n) for j in range(i + 1, n)]
    assert bits == list(range(edge_slots(n)))


def test_graph_validation():
    with pytest.raises(BoxmisError):
        OrderedGraph([0b10, 0b00])
    with pytest.raises(BoxmisError):
        OrderedGraph([0b1])
    with pytest.raises(PreconditionError):
        OrderedGraph([0] * 64)


def test_mis_of_fixtures(arrangement):
    assert mis_of_boxes(arrangement("squares_n5")) == 3
    assert mis_of_boxes(arrangement("squares_n6")) == 4
    assert mis_of_boxes(arrangement("marking_unit_arbitrary")) == 4
    assert mis_of_boxes(arrangement("chain_unit_area")) == 4
    assert mis_of_boxes([]) == 0


class MarkingBlockTest(unittest.TestCase):

    @parameterized.expand([
        (1, Fraction(1)),
        (2, Fraction(3, 2)),
        (3, Fraction(7, 4)),
    ])
    def test_expectation_at_half(self, levels, expected):
        self.assertEqual(marking_block_expectation(levels, Fraction(1, 2)), expected)

    @parameterized.expand([
        (2, Fraction(7, 4)),
        (3, Fraction(15, 8)),
    ])
    def test_nested_bound(self, levels, expected):
        self.assertEqual(marking_block_bound(levels, Fraction(1, 2)), expected)
        self.assertEqual(marking_block_expectation(levels + 1, Fraction(1, 2)), expected)

    def test_block_graph(self):
        graph = marking_block_graph(3, [0, 1])
        self.assertEqual(graph.edges(), [(0, 2), (0, 3), (0, 4), (0, 5), (3, 4), (3, 5)])
        self.assertEqual(mis_size(graph)[0], 4)
        with self.assertRaises(PreconditionError):
            marking_block_graph(3, [0])

    def test_fixture_blocks(self):
        self.assertEqual(intersection_graph(load_fixture("marking_unit_nondominated")),
                         marking_block_graph(2, [0]))
        for name in ("marking_unit_arbitrary", "marking_unit_area", "marking_squares"):
            self.assertEqual(intersection_graph(load_fixture(name)), marking_block_graph(3, [0, 1]))


class BlockFormulaTest(unittest.TestCase):

    @parameterized.expand([
        (2, ORDER.NON_DOMINATED, Fraction(2, 3), Fraction(9, 4)),
        (2, ORDER.ARBITRARY, Fraction(5, 8), Fraction(64, 25)),
        (1, ORDER.NON_DOMINATED, Fraction(1), Fraction(1)),
    ])
    def test_optimum(self, d, order, p, ratio):
        self.assertEqual(block_formula_optimum(d, order), (p, ratio))

    def test_greedy_half(self):
        self.assertEqual(block_formula_ratio(2, ORDER.ARBITRARY, Fraction(1, 2)), Fraction(8, 3))
        with self.assertRaises(PreconditionError):
            block_formula_ratio(2, ORDER.DOMINATING, Fraction(1, 2))


@pytest.mark.parametrize("opt,expectation,expected", [
    (4, Fraction(15, 8), Fraction(32, 15)),
    (3, Fraction(7, 4), Fraction(12, 7)),
    (4, Fraction(5, 4), Fraction(16, 5)),
])
def test_asymptotic_block_ratio(opt, expectation, expected):
    assert asymptotic_block_ratio(opt, expectation) == expected


def test_asymptotic_block_ratio_rejects_zero():
    with pytest.raises(PreconditionError):
        asymptotic_block_ratio(3, 0)


def test_composite_ratio():
    block = (3, Fraction(275, 243))
    assert composite_ratio(10, 5, block) == Fraction(729, 275)
    assert composite_ratio(6, 5, block, (1, Fraction(1, 2))) == Fraction(4) / (Fraction(275, 243) + Fraction(1, 2))
    with pytest.raises(PreconditionError):
        composite_ratio(7, 5, block)
