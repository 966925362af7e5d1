# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

import logging
import unittest
from fractions import Fraction

import six

from boxmis.geometry.classes import ORDER
from boxmis.utils.errors import BoxmisError, PreconditionError
from boxmis.utils.rational import format_rational, to_rational

logger = logging.getLogger(__name__)

MAX_EXACT_VERTICES = 20
ROOT_GRID = 1024
ROOT_WIDTH = Fraction(1, 10 ** 12)
SNAP_DENOMINATOR = 10 ** 6


def _normalize(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _plus(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for t, c in enumerate(b):
        res[t] += c
    return tuple(res)


def _minus(a, b):
    return _plus(a, tuple(-c for c in b))


class ExpectationPolynomial(object):
    """ p の整数係数多項式 (E[|Greedy(p) の解|])

    Args:
        coeffs (sequence of int): coeffs[t] が p^t の係数
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        for c in coeffs:
            if not isinstance(c, six.integer_types) and not (isinstance(c, Fraction) and c.denominator == 1):
                raise BoxmisError("non-integer coefficient: %r" % (c,))
        self.coeffs = _normalize(int(c) for c in coeffs)

    @classmethod
    def from_spec(cls, spec):
        """ "c0 c1 c2 ..." (定数項が先頭) """
        assert isinstance(spec, six.text_type)
        try:
            return cls([int(field) for field in spec.split()])
        except ValueError:
            raise BoxmisError("Illegal polynomial spec: %s" % spec)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def evaluate(self, p):
        """ p における正確な値 (Horner 法) """
        p = to_rational(p)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * p + c
        return value

    def evaluate_float(self, p):
        value = 0.0
        for c in reversed(self.coeffs):
            value = value * p + c
        return value

    def scaled_value(self, numerator, denominator, degree=None):
        """ E(a/D) * D^degree を整数として返す """
        degree = self.degree if degree is None else degree
        value = 0
        for t, c in enumerate(self.coeffs):
            value += c * numerator ** t * denominator ** (degree - t)
        return value

    def derivative(self):
        return ExpectationPolynomial([t * c for t, c in enumerate(self.coeffs)][1:])

    def __add__(self, other):
        return ExpectationPolynomial(_plus(self.coeffs, other.coeffs))

    def __eq__(self, other):
        return isinstance(other, ExpectationPolynomial) and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coeffs)

    def spec(self):
        return " ".join("%d" % c for c in self.coeffs) if self.coeffs else "0"

    def pretty(self):
        terms = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = {0: "", 1: "p"}.get(t, "p^%d" % t)
            size = "" if abs(c) == 1 and t else "%d" % abs(c)
            terms.append(("-" if c < 0 else "+", size + mono))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return 'ExpectationPolynomial.from_spec(%s)' % repr(self.spec())


def expand_forward(forward):
    """ 前方隣接マスクから (多項式係数, MIS サイズ) を求める

    Vertices are processed in input order carrying the blocked set; the memo key
    keeps only the blocked bits that are still ahead of the current vertex.

    Args:
        forward (list of int): forward[i] は i より後ろの隣接頂点のマスク

    Returns:
        tuple: (係数のタプル, MIS サイズ)
    """
    n = len(forward)
    memo = {}

    def visit(i, blocked):
        while i < n and blocked >> i & 1:
            i += 1
        if i == n:
            return (), 0
        key = (i, blocked >> i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        accepted, accepted_mis = visit(i + 1, blocked | forward[i])
        rejected, rejected_mis = visit(i + 1, blocked)
        # B + p (1 + A - B)
        gain = _minus(_plus((1,), accepted), rejected)
        result = (_plus(rejected, (0,) + gain), max(rejected_mis, accepted_mis + 1))
        memo[key] = result
        return result

    coeffs, mis = visit(0, 0)
    return _normalize(coeffs), mis


def greedy_p_polynomial(graph):
    if graph.n > MAX_EXACT_VERTICES:
        raise PreconditionError("%d vertices exceed the exact limit %d" % (graph.n, MAX_EXACT_VERTICES))
    coeffs, _ = expand_forward([graph.forward(i) for i in range(graph.n)])
    return ExpectationPolynomial(coeffs)


class RatioPoint(object):

    def __init__(self, p, expectation, opt):
        self.p = to_rational(p)
        self.expectation = Fraction(expectation)
        self.opt = opt
        if self.p > 0 and opt >= 1 and self.expectation <= 0:
            raise PreconditionError("expectation must be positive at p=%s" % self.p)

    @property
    def ratio(self):
        if self.expectation == 0:
            return float("inf")
        return Fraction(self.opt) / self.expectation

    def __repr__(self):
        return 'RatioPoint(%s, %s, %d)' % (format_rational(self.p), self.expectation, self.opt)


class POptimum(object):
    """ optimize_p の結果

    Attributes:
        p_star (Fraction): 最大点 (有理近似、正確な根が見つかればその値)
        max_expectation (Fraction): p_star での正確な期待値
        min_ratio (Fraction): opt / max_expectation
        exact (bool): p_star が導関数の正確な根 (または端点) かどうか
    """

    def __init__(self, p_star, max_expectation, min_ratio, exact):
        self.p_star = p_star
        self.max_expectation = max_expectation
        self.min_ratio = min_ratio
        self.exact = exact

    def __repr__(self):
        return 'POptimum(p_star=%s, ratio=%.6f, exact=%r)' % (self.p_star, float(self.min_ratio), self.exact)


def _sign(value):
    return (value > 0) - (value < 0)


def derivative_roots(poly):
    """ (0, 1) 内の導関数の実根を格子上の符号変化と二分法で求める

    Returns:
        list of (Fraction, bool): 根の近似値と、それが正確な根かどうか
    """
    deriv = poly.derivative()
    if deriv.is_zero():
        return []
    roots = []
    signs = [_sign(deriv.scaled_value(k, ROOT_GRID)) for k in range(ROOT_GRID + 1)]
    for k in range(1, ROOT_GRID):
        if signs[k] == 0:
            roots.append((Fraction(k, ROOT_GRID), True))
    for k in range(ROOT_GRID):
        if signs[k] * signs[k + 1] >= 0:
            continue
        lo, hi = Fraction(k, ROOT_GRID), Fraction(k + 1, ROOT_GRID)
        lo_sign = signs[k]
        found = None
        while hi - lo > ROOT_WIDTH:
            mid = (lo + hi) / 2
            mid_sign = _sign(deriv.evaluate(mid))
            if mid_sign == 0:
                found = mid
                break
            if mid_sign == lo_sign:
                lo = mid
            else:
                hi = mid
        if found is not None:
            roots.append((found, True))
            continue
        snapped = ((lo + hi) / 2).limit_denominator(SNAP_DENOMINATOR)
        if lo <= snapped <= hi and deriv.evaluate(snapped) == 0:
            roots.append((snapped, True))
        else:
            roots.append(((lo + hi) / 2, False))
    return sorted(roots)


def optimize_p(poly, opt):
    """ [0, 1] 上で多項式を最大化する p を求める

    Candidates are both endpoints and every critical point; equal values keep
    the smallest p.

    Args:
        poly (ExpectationPolynomial): 期待値多項式
        opt (int): 最大独立集合の大きさ

    Returns:
        POptimum: 最適な p と比
    """
    if poly.is_zero():
        raise PreconditionError("cannot optimize the zero polynomial")
    candidates = [(Fraction(0), True), (Fraction(1), True)] + derivative_roots(poly)
    best = None
    for p, exact in sorted(candidates):
        value = poly.evaluate(p)
        if best is None or value > best[1]:
            best = (p, value, exact)
    p_star, value, exact = best
    if value <= 0:
        raise PreconditionError("polynomial is never positive on [0, 1]")
    logger.debug("optimum of %s at p=%s", poly.pretty(), p_star)
    return POptimum(p_star, value, Fraction(opt) / value, exact)


def block_formula_ratio(d, order, p):
    """ 適応的ブロックに対する Greedy(p) の比の閉形式 """
    p = to_rational(p)
    if not 0 < p <= 1:
        raise PreconditionError("p must lie in (0, 1], got %s" % p)
    if order == ORDER.NON_DOMINATED:
        m = 2 ** d - 1
        return Fraction(m) / (2 ** d * p - m * p * p)
    if order == ORDER.ARBITRARY:
        m = 2 ** d
        return Fraction(m) / ((m + 1) * p - m * p * p)
    raise PreconditionError("no block formula for %s order" % order)


def block_formula_optimum(d, order):
    """ 閉形式の最適な p と比

    Returns:
        tuple: (p, ratio)
    """
    if order == ORDER.NON_DOMINATED:
        p = Fraction(2 ** (d - 1), 2 ** d - 1)
    elif order == ORDER.ARBITRARY:
        p = Fraction(2 ** d + 1, 2 ** (d + 1))
    else:
        raise PreconditionError("no block formula for %s order" % order)
    return p, block_formula_ratio(d, order, p)


def asymptotic_block_ratio(opt_per_block, expectation_per_block):
    expectation_per_block = Fraction(expectation_per_block)
    if expectation_per_block <= 0:
        raise PreconditionError("expectation per block must be positive")
    return Fraction(opt_per_block) / expectation_per_block


class ExpectationPolynomialTest(unittest.TestCase):

    def test_expand(self):
        # 0 and 1 see every vertex, 2..4 are independent
        forward = [0b11110, 0b11100, 0, 0, 0]
        coeffs, mis = expand_forward(forward)
        self.assertEqual(coeffs, (0, 5, -7, 3))
        self.assertEqual(mis, 3)

    def test_optimize(self):
        result = optimize_p(ExpectationPolynomial([0, 5, -7, 3]), 3)
        self.assertEqual(result.p_star, Fraction(5, 9))
        self.assertEqual(result.min_ratio, Fraction(729, 275))

    def test_pretty(self):
        self.assertEqual(ExpectationPolynomial([0, 3, -2]).pretty(), "3p - 2p^2")


if __name__ == '__main__':
    unittest.main()
