# -*- encoding: utf-8 -*-
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from parameterized import parameterized

from boxmis import Box, BoxmisError, PolicySpec, PreconditionError, RandomSource, run_policy
from boxmis.expectation.graph import greedy_solution
from boxmis.expectation.polynomial import greedy_p_polynomial
from boxmis.geometry.arrangement import intersection_graph
from boxmis.harness import mc_estimate
from boxmis.policies.exact import exact_greedy_p_distribution
from boxmis.policies.policy import ClassifiedGreedyPolicy, GreedyPPolicy, NaiveGreedyPolicy, class_bounds
from tests.conftest import load_fixture


class PolicySpecTest(unittest.TestCase):

    @parameterized.expand([
        ("greedy", PolicySpec.NAIVE),
        ("greedyp:5/9", PolicySpec.GREEDY_P),
        ("greedyp:0.5", PolicySpec.GREEDY_P),
        ("classified:16:4", PolicySpec.CLASSIFIED),
    ])
    def test_parse(self, text, kind):
        spec = PolicySpec.parse(text)
        self.assertEqual(spec.kind, kind)
        self.assertEqual(PolicySpec.parse(spec.spec()), spec)
        self.assertEqual(eval(repr(spec)), spec)

    def test_parse_errors(self):
        with self.assertRaises(BoxmisError):
            PolicySpec.parse("greedyp")
        with self.assertRaises(PreconditionError):
            PolicySpec.parse("greedyp:3/2")
        with self.assertRaises(PreconditionError):
            PolicySpec.parse("classified:16:0")

    def test_deterministic(self):
        self.assertTrue(PolicySpec.naive().deterministic)
        self.assertTrue(PolicySpec.greedy_p(1).deterministic)
        self.assertFalse(PolicySpec.greedy_p(Fraction(1, 2)).deterministic)


def test_naive_greedy_takes_first_free(arrangement):
    trace = run_policy(PolicySpec.naive(), list(arrangement("squares_n5")))
    assert trace.accepted_indices() == [0]
    assert trace.solution_size == 1
    assert trace.spec() == "0 1\n1 0\n2 0\n3 0\n4 0\n"


def test_greedy_p_edge_cases(arrangement):
    boxes = list(arrangement("squares_n6"))
    assert run_policy(PolicySpec.greedy_p(0), boxes).solution_size == 0
    assert run_policy(PolicySpec.greedy_p(1), boxes).solution_size == \
        run_policy(PolicySpec.naive(), boxes).solution_size


def test_greedy_p_draws_only_for_free_offers():
    rng = RandomSource(7)
    policy = GreedyPPolicy(1, rng)
    box = Box.cube([0, 0], 1)
    assert policy.offer(box)
    assert not policy.offer(box.translate([0.5, 0.5]))
    assert rng.position == 1


def test_same_seed_same_trace(arrangement):
    boxes = list(arrangement("marking_unit_arbitrary"))
    spec = PolicySpec.greedy_p(Fraction(1, 2))
    first = run_policy(spec, boxes, RandomSource(3))
    second = run_policy(spec, boxes, RandomSource(3))
    assert first.spec() == second.spec()


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=6))
def test_trace_prefix_monotone(seed, cut):
    boxes = list(load_fixture("marking_unit_arbitrary"))
    spec = PolicySpec.greedy_p(Fraction(1, 2))
    full = run_policy(spec, boxes, RandomSource(seed))
    prefix = run_policy(spec, boxes[:cut], RandomSource(seed))
    assert full.extends(prefix)
    assert full.accepted_indices()[:prefix.solution_size] == prefix.accepted_indices()


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32))
def test_accepted_boxes_are_disjoint(seed):
    boxes = list(load_fixture("squares_n6"))
    trace = run_policy(PolicySpec.greedy_p(Fraction(1, 2)), boxes, RandomSource(seed))
    accepted = trace.accepted_indices()
    graph = intersection_graph(boxes)
    mask = sum(1 << i for i in accepted)
    assert graph.is_independent(mask)


def test_naive_matches_graph_greedy(arrangement):
    for name in ("squares_n3", "squares_n5", "marking_squares"):
        boxes = list(arrangement(name))
        trace = run_policy(PolicySpec.naive(), boxes)
        assert sum(1 << i for i in trace.accepted_indices()) == greedy_solution(intersection_graph(boxes))


def test_exact_distribution_matches_polynomial(arrangement):
    boxes = list(arrangement("squares_n5"))
    poly = greedy_p_polynomial(intersection_graph(boxes))
    for p in (Fraction(0), Fraction(1, 3), Fraction(5, 9), Fraction(1)):
        assert exact_greedy_p_distribution(boxes, p) == poly.evaluate(p)


def test_dimension_mismatch_rejected():
    policy = NaiveGreedyPolicy()
    policy.offer(Box.cube([0, 0], 1))
    with pytest.raises(BoxmisError):
        policy.offer(Box.cube([0, 0, 0], 1))


def test_size_classes():
    classes = class_bounds(16, 4)
    assert [c.contains(2) for c in classes] == [True, True, False, False]
    assert classes[3].contains(16)
    assert classes[0].lower == pytest.approx(1.0)
    assert classes[3].upper == pytest.approx(16.0)


def test_classified_greedy_stays_in_its_class():
    rng = RandomSource(11)
    policy = ClassifiedGreedyPolicy(16, 4, rng)
    big = Box.cube([0, 0], 16)
    small = Box.cube([100, 0], 1)
    picked_small = policy.offer(small)
    picked_big = policy.offer(big)
    assert rng.position == 1
    assert picked_small == policy.chosen.contains(1)
    assert picked_big == policy.chosen.contains(16)
    with pytest.raises(PreconditionError):
        policy.offer(Box.cube([200, 0], 17))
    with pytest.raises(PreconditionError):
        policy.offer(Box.from_spec("300 302 0 1"))


@pytest.mark.slow
def test_simulated_greedy_p_agrees_with_polynomial(arrangement):
    boxes = list(arrangement("squares_n5"))
    poly = greedy_p_polynomial(intersection_graph(boxes))
    root = RandomSource(99)
    for k, p in enumerate((Fraction(1, 3), Fraction(5, 9), Fraction(4, 5))):
        spec = PolicySpec.greedy_p(p)
        sizes = [run_policy(spec, boxes, root.spawn(k).spawn(t)).solution_size for t in range(10 ** 5)]
        estimate = mc_estimate(sizes)
        assert abs(estimate.mean - float(poly.evaluate(p))) <= 3 * estimate.stderr


@st.composite
def sigma_cubes(draw, sigma=Fraction(13, 4), max_boxes=12):
    quarters = st.integers(min_value=0, max_value=48).map(lambda q: Fraction(q, 4))
    sides = st.integers(min_value=4, max_value=int(sigma * 4)).map(lambda q: Fraction(q, 4))
    count = draw(st.integers(min_value=1, max_value=max_boxes))
    return [Box.cube([draw(quarters), draw(quarters)], draw(sides)) for _ in range(count)]


@settings(max_examples=300)
@given(sigma_cubes(), st.integers(min_value=0, max_value=2 ** 32))
def test_single_class_decides_like_naive(boxes, seed):
    naive = run_policy(PolicySpec.naive(), boxes)
    single = run_policy(PolicySpec.parse("classified:13/4:1"), boxes, RandomSource(seed))
    assert single.accepted_indices() == naive.accepted_indices()
