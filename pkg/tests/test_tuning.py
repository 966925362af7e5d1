# -*- encoding: utf-8 -*-
import math
import unittest
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from parameterized import parameterized
from scipy.special import lambertw

from boxmis import ORDER, PreconditionError, ShapeClass
from boxmis.tuning import ADVERSARY, BoundQuery, bounds_table, choose_k, dk_derivative, k_multiplier, \
    k_star, lambert_w0, oblivious_upper_bound, sigma_lower_bound, sigma_upper_bound
from boxmis.tuning.sigma import derivative_sign_changes


@settings(max_examples=200)
@given(st.floats(min_value=-0.36, max_value=1e6))
def test_lambert_matches_scipy(x):
    assert lambert_w0(x) == pytest.approx(lambertw(x).real, rel=1e-10, abs=1e-12)


def test_lambert_special_points():
    assert lambert_w0(0) == 0.0
    assert lambert_w0(-1 / math.e) == -1.0
    assert lambert_w0(math.e) == pytest.approx(1.0, abs=1e-12)
    assert lambert_w0(-0.3678) == pytest.approx(lambertw(-0.3678).real, abs=1e-6)
    with pytest.raises(PreconditionError):
        lambert_w0(-0.5)


class KMultiplierTest(unittest.TestCase):

    @parameterized.expand([
        (1, 0.683501),
        (2, 1.10537),
        (3, 1.48514),
        (4, 1.84821),
        (10, 3.92179),
        (100, 33.9903),
        (1000, 333.999),
    ])
    def test_value(self, d, expected):
        self.assertAlmostEqual(k_multiplier(d), expected, delta=expected * 1e-5)

    @parameterized.expand([(1,), (2,), (3,), (5,)])
    def test_single_sign_change(self, d):
        grid = [0.25 * i for i in range(1, 81)]
        self.assertEqual(derivative_sign_changes(d, 16, grid), 1)

    @parameterized.expand([(2, 4), (3, 100), (10, 1000)])
    def test_single_sign_change_up_to_d_log_sigma(self, d, sigma):
        top = d * math.log(sigma)
        grid = [top * i / 10000.0 for i in range(1, 10001)]
        self.assertEqual(derivative_sign_changes(d, sigma, grid), 1)
        self.assertGreater(dk_derivative(d, sigma, top), 0)

    @parameterized.expand([(1,), (2,), (4,)])
    def test_derivative_vanishes_at_k_star(self, d):
        k = k_star(d, 16)
        self.assertAlmostEqual(dk_derivative(d, 16, k), 0.0, delta=1e-8)
        self.assertLess(dk_derivative(d, 16, k * 0.9), 0)
        self.assertGreater(dk_derivative(d, 16, k * 1.1), 0)

    def test_large_multiplier_grows_like_d_over_three(self):
        self.assertAlmostEqual(k_multiplier(10 ** 6) / 10 ** 6, 1 / 3.0, places=4)


def test_derivative_overflow():
    assert dk_derivative(2, 16, 1e-3) == -math.inf
    with pytest.raises(PreconditionError):
        dk_derivative(2, 16, 0)


def test_k_star_rejects_sigma_one():
    with pytest.raises(PreconditionError):
        k_star(2, 1)
    with pytest.raises(PreconditionError):
        choose_k(2, 1)


class ChooseKTest(unittest.TestCase):

    @parameterized.expand([
        (2, 16, ORDER.ARBITRARY, 4, 36),
        (2, 16, ORDER.NON_DOMINATED, 2, 18),
        (2, Fraction(5, 2), ORDER.ARBITRARY, 1, 16),
    ])
    def test_choice(self, d, sigma, order, k, bound):
        tuning = choose_k(d, sigma, order)
        self.assertEqual((tuning.k_chosen, tuning.bound_at_k), (k, bound))
        self.assertEqual(oblivious_upper_bound(d, sigma, order), bound)
        self.assertEqual(min(b for _, b in tuning.candidates), bound)

    def test_candidates_cover_small_k(self):
        ks = [k for k, _ in choose_k(3, 1000).candidates]
        self.assertEqual(ks[:10], list(range(1, 11)))


def test_sigma_bounds():
    assert sigma_upper_bound(2, Fraction(5, 2), 2, ORDER.NON_DOMINATED) == 10
    assert sigma_upper_bound(2, Fraction(5, 2), 2) == 18
    assert sigma_upper_bound(2, 1, 1) == 4
    assert sigma_lower_bound(Fraction(5, 2)) == Fraction(3, 2)
    assert sigma_lower_bound(16) == Fraction(5, 2)
    with pytest.raises(PreconditionError):
        sigma_upper_bound(2, 16, 0)


@settings(max_examples=50)
@given(st.integers(min_value=1, max_value=5), st.fractions(min_value=1, max_value=100))
def test_single_class_is_adaptive_bound(d, sigma):
    c = math.ceil(sigma)
    assert sigma_upper_bound(d, sigma, 1) == (c + 1) ** d
    assert sigma_upper_bound(d, sigma, 1, ORDER.NON_DOMINATED) == (c + 1) ** d - c ** d


def test_lambert_round_trip_on_log_grid():
    for x in np.geomspace(1e-6, 1e3, 500):
        w = lambert_w0(float(x))
        assert abs(w * math.exp(w) - x) <= 1e-12 * max(1.0, x)


class BoundsTableTest(unittest.TestCase):

    @parameterized.expand([
        ("unit", ORDER.NON_DOMINATED, ADVERSARY.ADAPTIVE, 2, None, 3, 3),
        ("unit", ORDER.ARBITRARY, ADVERSARY.ADAPTIVE, 3, None, 8, 8),
        ("unit", ORDER.NON_DOMINATED, ADVERSARY.OBLIVIOUS, 2, None, Fraction(12, 7), 3),
        ("unit", ORDER.ARBITRARY, ADVERSARY.OBLIVIOUS, 2, None, Fraction(32, 15), 4),
        ("sigma:5/2", ORDER.NON_DOMINATED, ADVERSARY.ADAPTIVE, 2, None, 7, 7),
        ("sigma:5/2", ORDER.ARBITRARY, ADVERSARY.ADAPTIVE, 2, None, 16, 16),
        ("sigma:5/2", ORDER.NON_DOMINATED, ADVERSARY.OBLIVIOUS, 2, None, Fraction(3, 2), 10),
        ("sigma:5/2", ORDER.ARBITRARY, ADVERSARY.OBLIVIOUS, 2, None, Fraction(3, 2), 18),
        ("cube", ORDER.ARBITRARY, ADVERSARY.ADAPTIVE, 2, 10, 9, 9),
        ("unitvol", ORDER.NON_DOMINATED, ADVERSARY.OBLIVIOUS, 2, 10, 3, 9),
        ("rect", ORDER.ARBITRARY, ADVERSARY.OBLIVIOUS, 2, 7, 2, 6),
        ("rect", ORDER.DOMINATING, ADVERSARY.ADAPTIVE, 2, None, 1, 1),
        ("unit", ORDER.DOMINATING, ADVERSARY.OBLIVIOUS, 1, None, 1, 1),
    ])
    def test_entry(self, shape, order, adversary, d, n, lower, upper):
        entry = bounds_table(BoundQuery(ShapeClass.parse(shape), order, adversary, d=d, n=n))
        self.assertEqual((entry.lower, entry.upper), (lower, upper))
        self.assertEqual(entry.tight, lower == upper)

    @parameterized.expand([
        ("sigma_for_unit", "unit", dict(sigma=2)),
        ("sigma_disagrees", "sigma:5/2", dict(sigma=3)),
        ("missing_n", "cube", dict()),
        ("small_n", "cube", dict(n=1)),
        ("n_for_unit", "unit", dict(n=4)),
        ("sigma_one", "sigma:1", dict()),
        ("oblivious_line", "unit", dict(d=1, adversary=ADVERSARY.OBLIVIOUS)),
        ("unknown_adversary", "unit", dict(adversary="clairvoyant")),
        ("zero_dimension", "unit", dict(d=0)),
    ])
    def test_rejects(self, _, shape, kwargs):
        kwargs.setdefault("adversary", ADVERSARY.ADAPTIVE)
        with self.assertRaises(PreconditionError):
            BoundQuery(ShapeClass.parse(shape), ORDER.NON_DOMINATED, **kwargs)

    def test_matching_sigma_accepted(self):
        q = BoundQuery(ShapeClass.parse("sigma:5/2"), ORDER.ARBITRARY, ADVERSARY.ADAPTIVE, sigma="5/2")
        self.assertEqual(bounds_table(q).upper, 16)


class KStarResidualTest(unittest.TestCase):

    @parameterized.expand([(2, 4), (3, 100), (10, 1000)])
    def test_residual(self, d, sigma):
        k = k_star(d, sigma)
        scale = (sigma ** (1.0 / k) + 2.0) ** d
        self.assertLessEqual(abs(dk_derivative(d, sigma, k)), 1e-9 * scale)
