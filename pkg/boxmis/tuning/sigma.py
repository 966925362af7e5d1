# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import math
import unittest
from fractions import Fraction

from boxmis.geometry.classes import ORDER
from boxmis.utils.errors import PreconditionError
from boxmis.utils.rational import ceil_log2, ceil_root, to_rational

HALLEY_STEPS = 100
BRANCH_POINT = -1.0 / math.e


def lambert_w0(x):
    """ Lambert W 関数の主枝 (w e^w = x, w >= -1)

    Starts from ln(1 + x) for x >= 0 and from the branch-point series
    sqrt(2(ex + 1)) - 1 below zero, then runs Halley steps.
    """
    x = float(x)
    if math.isnan(x) or x < BRANCH_POINT - 1e-15:
        raise PreconditionError("W0 is defined for x >= -1/e, got %r" % x)
    if x == 0:
        return 0.0
    if x - BRANCH_POINT < 1e-15:
        return -1.0
    if x >= 0:
        w = math.log1p(x)
    else:
        w = math.sqrt(2.0 * (math.e * x + 1.0)) - 1.0
    for _ in range(HALLEY_STEPS):
        ew = math.exp(w)
        f = w * ew - x
        w1 = w + 1.0
        dw = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        w -= dw
        if abs(dw) <= 1e-15 * (1.0 + abs(w)):
            break
    return w


def k_multiplier(d):
    """ (W0(2 e^(-1/d) / d) + 1/d)^(-1): 連続最適な k を ln(sigma) で割ったもの """
    if d < 1:
        raise PreconditionError("dimension must be positive, got %r" % d)
    return 1.0 / (lambert_w0(2.0 * math.exp(-1.0 / d) / d) + 1.0 / d)


def k_star(d, sigma):
    sigma = to_rational(sigma)
    if sigma <= 1:
        raise PreconditionError("sigma must exceed 1, got %s" % sigma)
    return math.log(sigma) * k_multiplier(d)


def dk_derivative(d, sigma, k):
    """ (sigma^(1/k) + 2)^d k の k についての導関数 """
    if k <= 0:
        raise PreconditionError("k must be positive, got %r" % k)
    log_sigma = math.log(to_rational(sigma))
    x = log_sigma / k
    try:
        b = math.exp(x)
    except OverflowError:
        return -math.inf
    tail = 2.0 + b * (1.0 - d * x)
    try:
        return (b + 2.0) ** (d - 1) * tail
    except OverflowError:
        return math.copysign(math.inf, tail)


def derivative_sign_changes(d, sigma, grid):
    signs = []
    for k in grid:
        value = dk_derivative(d, sigma, k)
        if value != 0:
            signs.append(value > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sigma_upper_bound(d, sigma, k, order=ORDER.ARBITRARY):
    """ クラス分け貪欲法の上界 (ceil(b) は c^k >= sigma を満たす最小の c) """
    sigma = to_rational(sigma)
    if k < 1 or sigma < 1:
        raise PreconditionError("need k >= 1 and sigma >= 1")
    c = ceil_root(sigma, k)
    if order == ORDER.NON_DOMINATED:
        return ((c + 1) ** d - c ** d) * k
    return (c + 1) ** d * k


def sigma_lower_bound(sigma):
    sigma = to_rational(sigma)
    if sigma < 1:
        raise PreconditionError("sigma must be at least 1, got %s" % sigma)
    return Fraction(ceil_log2(sigma) + 1, 2)


class KTuning(object):
    """ k の選択結果

    Attributes:
        k_star (float): 連続最適値
        k_chosen (int): 選んだ整数 k
        bound_at_k (int): その k での上界
        candidates (list of tuple): 調べた (k, 上界)
    """

    def __init__(self, d, sigma, k_star, k_chosen, bound_at_k, candidates):
        self.d = d
        self.sigma = sigma
        self.k_star = k_star
        self.k_chosen = k_chosen
        self.bound_at_k = bound_at_k
        self.candidates = candidates

    def __repr__(self):
        return '<KTuning d=%d sigma=%s k=%d bound=%d>' % (self.d, self.sigma, self.k_chosen, self.bound_at_k)


def choose_k(d, sigma, order=ORDER.ARBITRARY):
    """ 1..ceil(log2 sigma) と k* の前後の整数で上界を比べ、最小の k を選ぶ """
    sigma = to_rational(sigma)
    if sigma <= 1:
        raise PreconditionError("sigma must exceed 1, got %s" % sigma)
    continuous = k_star(d, sigma)
    ks = set(range(1, ceil_log2(sigma) + 1))
    ks.add(max(1, int(math.floor(continuous))))
    ks.add(max(1, int(math.ceil(continuous))))
    candidates = [(k, sigma_upper_bound(d, sigma, k, order)) for k in sorted(ks)]
    k_chosen, bound = min(candidates, key=lambda item: (item[1], item[0]))
    return KTuning(d, sigma, continuous, k_chosen, bound, candidates)


def oblivious_upper_bound(d, sigma, order=ORDER.ARBITRARY):
    return choose_k(d, sigma, order).bound_at_k


class LambertTest(unittest.TestCase):

    def test_fixed_points(self):
        self.assertEqual(lambert_w0(0), 0.0)
        self.assertAlmostEqual(lambert_w0(math.e), 1.0, places=12)

    def test_choose_k(self):
        tuning = choose_k(2, 16)
        self.assertEqual((tuning.k_chosen, tuning.bound_at_k), (4, 36))


if __name__ == '__main__':
    unittest.main()
