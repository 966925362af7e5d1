# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

import logging
import unittest

from boxmis.geometry.box import Box, intersects
from boxmis.policies.random_source import RandomSource
from boxmis.policies.spec import PolicySpec
from boxmis.utils.errors import DimensionError, PreconditionError
from boxmis.utils.rational import to_rational

logger = logging.getLogger(__name__)


class Trace(object):
    """ 方策の決定の記録

    Attributes:
        decisions (list of tuple): (提示された箱, 採用したか) の列
    """

    def __init__(self):
        self.decisions = []

    def record(self, box, accepted):
        self.decisions.append((box, bool(accepted)))

    @property
    def solution_size(self):
        return sum(1 for _, accepted in self.decisions if accepted)

    def accepted_indices(self):
        return [i for i, (_, accepted) in enumerate(self.decisions) if accepted]

    def accepted_boxes(self):
        return [box for box, accepted in self.decisions if accepted]

    def extends(self, other):
        """ other が self の接頭辞であり、決定が変わっていないかどうか """
        if len(other.decisions) > len(self.decisions):
            return False
        return all(a[1] == b[1] for a, b in zip(self.decisions, other.decisions))

    def spec(self):
        return "".join("%d %d\n" % (i, accepted) for i, (_, accepted) in enumerate(self.decisions))

    def __len__(self):
        return len(self.decisions)

    def __repr__(self):
        return '<Trace offers=%d accepted=%d>' % (len(self.decisions), self.solution_size)


class SizeClass(object):
    """ 辺長のクラス [b^i, b^(i+1)] (b = sigma^(1/k))

    Membership compares k-th powers exactly, so b itself is never needed.
    """

    def __init__(self, sigma, k, index):
        self.sigma = to_rational(sigma)
        self.k = k
        self.index = index

    @property
    def lower(self):
        return float(self.sigma) ** (float(self.index) / self.k)

    @property
    def upper(self):
        return float(self.sigma) ** (float(self.index + 1) / self.k)

    def contains(self, side):
        power = to_rational(side) ** self.k
        return self.sigma ** self.index <= power <= self.sigma ** (self.index + 1)

    def __repr__(self):
        return '<SizeClass %d: [%g, %g]>' % (self.index, self.lower, self.upper)


def class_bounds(sigma, k):
    sigma = to_rational(sigma)
    if sigma < 1 or k < 1:
        raise PreconditionError("need sigma >= 1 and k >= 1")
    return [SizeClass(sigma, k, i) for i in range(k)]


class OnlinePolicy(object):
    """ 一つずつ箱を受け取り、取り消せない採否を返す方策の基底クラス """

    def __init__(self, rng=None):
        self.rng = rng if rng is not None else RandomSource(0)
        self.accepted = []
        self.dim = None

    def _check(self, box):
        if self.dim is None:
            self.dim = box.dim
        elif box.dim != self.dim:
            raise DimensionError("policy saw dimension %d, offered %d" % (self.dim, box.dim))

    def is_free(self, box):
        return not any(intersects(box, other) for other in self.accepted)

    def offer(self, box):
        self._check(box)
        accepted = self.decide(box)
        if accepted:
            self.accepted.append(box)
        return accepted

    def decide(self, box):
        raise NotImplementedError


class NaiveGreedyPolicy(OnlinePolicy):

    def decide(self, box):
        return self.is_free(box)


class GreedyPPolicy(OnlinePolicy):
    """ 既に採用した箱と交差しなければ確率 p で採用する

    One uniform draw is taken per disjoint offer and none otherwise.
    """

    def __init__(self, p, rng=None):
        super(GreedyPPolicy, self).__init__(rng)
        self.p = to_rational(p)
        if not 0 <= self.p <= 1:
            raise PreconditionError("p must lie in [0, 1], got %s" % self.p)

    def decide(self, box):
        if not self.is_free(box):
            return False
        return self.rng.uniform() < self.p


class ClassifiedGreedyPolicy(OnlinePolicy):
    """ クラスを一様に一つ選び、そのクラスの立方体だけを貪欲に採用する """

    def __init__(self, sigma, k, rng=None):
        super(ClassifiedGreedyPolicy, self).__init__(rng)
        self.classes = class_bounds(sigma, k)
        self.sigma = to_rational(sigma)
        self.chosen = None

    def decide(self, box):
        if not box.is_cube():
            raise PreconditionError("classified greedy only handles hypercubes")
        side = box.side(0)
        if not 1 <= side <= self.sigma:
            raise PreconditionError("side length %s outside [1, %s]" % (side, self.sigma))
        if self.chosen is None:
            self.chosen = self.classes[self.rng.integer(0, len(self.classes))]
            logger.debug("classified greedy drew class %d", self.chosen.index)
        return self.chosen.contains(side) and self.is_free(box)


def make_policy(spec, rng=None):
    if spec.kind == PolicySpec.NAIVE:
        return NaiveGreedyPolicy(rng)
    if spec.kind == PolicySpec.GREEDY_P:
        return GreedyPPolicy(spec.p, rng)
    return ClassifiedGreedyPolicy(spec.sigma, spec.k, rng)


def run_policy(spec, boxes, rng=None):
    """ 箱の列を順に方策へ提示する

    Args:
        spec (PolicySpec): 方策
        boxes (list of Box): 入力順の箱
        rng (RandomSource): 乱数列

    Returns:
        Trace: 決定の記録
    """
    policy = make_policy(spec, rng)
    trace = Trace()
    for box in boxes:
        trace.record(box, policy.offer(box))
    return trace


class PolicyTest(unittest.TestCase):

    def test_adaptive_block(self):
        boxes = [Box.cube([0, 0], 1)] + [Box.cube([x, y], 1) for x in (-0.9, 0.9) for y in (-0.9, 0.9)]
        self.assertEqual(run_policy(PolicySpec.naive(), boxes).solution_size, 1)

    def test_classes(self):
        classes = class_bounds(4, 2)
        self.assertTrue(classes[0].contains(2))
        self.assertTrue(classes[1].contains(2))
        self.assertFalse(classes[0].contains(3))


if __name__ == '__main__':
    unittest.main()
