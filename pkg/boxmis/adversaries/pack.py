# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import itertools
import logging
from fractions import Fraction

from boxmis.adversaries.instance import DEFAULT_SLACK, VerifiedInstance, check_slack
from boxmis.geometry.arrangement import Arrangement, unit_grid_maximum
from boxmis.geometry.box import Box, dominates, intersects
from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.policies.policy import Trace, make_policy
from boxmis.utils.errors import ConstructionError, DimensionError, PreconditionError
from boxmis.utils.rational import ceil_root, to_rational

logger = logging.getLogger(__name__)


class PackVariant(object):
    """ 交差させる箱の並べ方

    Args:
        order (str): ARBITRARY なら全ての格子位置、NON_DOMINATED なら
            対象に支配される位置を除く
        sigma (Fraction): 対象の辺長の上限 (単位立方体なら 1)
    """

    def __init__(self, order=ORDER.ARBITRARY, sigma=1):
        if order not in (ORDER.ARBITRARY, ORDER.NON_DOMINATED):
            raise PreconditionError("pack variants are arbitrary or non-dominated")
        self.order = order
        self.sigma = to_rational(sigma)

    @classmethod
    def unit_grid(cls, sigma, order=ORDER.ARBITRARY):
        return cls(order, sigma)

    def maximum(self, d):
        return unit_grid_maximum(d, self.sigma, self.order)

    def __repr__(self):
        return 'PackVariant(%r, %s)' % (self.order, self.sigma)


PackVariant.ARBITRARY = PackVariant(ORDER.ARBITRARY)
PackVariant.NON_DOMINATED = PackVariant(ORDER.NON_DOMINATED)


def pack_intersecting_boxes(target, m, variant=PackVariant.ARBITRARY, slack=DEFAULT_SLACK):
    """ target に交差する互いに素な単位立方体を m 個作る

    Along each axis the c + 1 (c = ceil(side)) starts are target.lower - 1 + a
    plus multiples of 1 + g, with r = side + 1 - c, a = slack * r and
    g = (1 - 2 slack) r / c. For a unit target these are the corners at
    -0.9 and +0.9. Boxes are emitted by increasing index sum so that no box is
    dominated by an earlier one.

    Args:
        target (Box): 対象の立方体
        m (int): 箱の数
        variant (PackVariant): 並べ方
        slack (Fraction): 余裕

    Returns:
        list of Box: 互いに素で target と交差する単位立方体
    """
    slack = check_slack(slack)
    if not target.is_cube():
        raise PreconditionError("pack targets are hypercubes")
    side = target.side(0)
    if side < 1 or side > variant.sigma:
        raise PreconditionError("target side %s outside [1, %s]" % (side, variant.sigma))
    d = target.dim
    maximum = unit_grid_maximum(d, side, variant.order)
    if not 0 <= m <= maximum:
        raise PreconditionError("at most %d disjoint unit boxes fit, asked for %d" % (maximum, m))
    c = ceil_root(side, 1)
    r = side + 1 - c
    a = slack * r
    g = (1 - 2 * slack) * r / c
    indices = [idx for idx in itertools.product(range(c + 1), repeat=d)
               if variant.order == ORDER.ARBITRARY or max(idx) == c]
    indices.sort(key=lambda idx: (sum(idx), idx))
    boxes = []
    for idx in indices[:m]:
        lower = [target.lower[j] - 1 + a + idx[j] * (1 + g) for j in range(d)]
        boxes.append(Box.cube(lower, 1))
    _verify_pack(target, boxes, variant.order)
    return boxes


def chain_intersecting_boxes(target, m, unit_volume=False):
    """ target の右辺にまたがって縦に積んだ m 個の箱 (n - 1 族)

    Cubes have side s/(2m); unit-volume boxes are 1/t wide and t = 1/(2m+1)
    tall. Later boxes dominate earlier ones.
    """
    if m < 1:
        raise PreconditionError("need at least one box")
    d = target.dim
    if d < 2:
        raise DimensionError("stacked packs need d >= 2")
    x0, y0 = target.lower[0], target.lower[1]
    boxes = []
    if unit_volume:
        if target.volume() != 1 or not target.is_cube():
            raise PreconditionError("unit-volume packs need a unit target")
        t = Fraction(1, 2 * m + 1)
        for i in range(m):
            lower = [x0 + Fraction(1, 2), y0 + (2 * i + 1) * t] + list(target.lower[2:])
            upper = [x0 + Fraction(1, 2) + 1 / t, y0 + (2 * i + 2) * t] + [lo + 1 for lo in target.lower[2:]]
            boxes.append(Box(lower, upper))
    else:
        if not target.is_cube():
            raise PreconditionError("cube packs need a cube target")
        w = target.side(0) / (2 * m)
        x_hi = target.upper[0]
        for i in range(m):
            lower = [x_hi - w / 2, y0 + (2 * i + 1) * w] + list(target.lower[2:])
            boxes.append(Box.cube(lower, w))
    _verify_pack(target, boxes, ORDER.NON_DOMINATED)
    return boxes


def _verify_pack(target, boxes, order):
    for k, box in enumerate(boxes):
        if not intersects(box, target):
            raise ConstructionError("pack box %d misses its target" % k)
        if order == ORDER.NON_DOMINATED and dominates(target, box):
            raise ConstructionError("pack box %d is dominated by its target" % k)
        for other in boxes[:k]:
            if intersects(box, other):
                raise ConstructionError("pack boxes intersect")
            if order == ORDER.NON_DOMINATED and dominates(other, box):
                raise ConstructionError("pack box %d is dominated by an earlier one" % k)


class GameResult(object):
    """ 適応的ゲームの結果

    Attributes:
        trace (Trace): 方策の決定
        opt_size (int): 出力した入力の最大独立集合の大きさ
        instance (VerifiedInstance): 出力した入力
    """

    def __init__(self, trace, instance):
        self.trace = trace
        self.instance = instance
        self.opt_size = instance.opt_size

    @property
    def sol(self):
        return self.trace.solution_size

    @property
    def ratio(self):
        if self.sol == 0:
            return float("inf")
        return Fraction(self.opt_size, self.sol)

    def __repr__(self):
        return '<GameResult opt=%d sol=%d>' % (self.opt_size, self.sol)


class _Emitter(object):
    """ 出力する箱を一つずつ検証しながら方策に渡す """

    def __init__(self, spec, policy):
        self.spec = spec
        self.policy = policy
        self.boxes = []
        self.trace = Trace()

    def emit(self, box):
        if not self.spec.shape.admits(box):
            raise ConstructionError("emitted box %s violates %s" % (box.spec(), self.spec.shape.spec()))
        if self.spec.order == ORDER.NON_DOMINATED:
            for k, other in enumerate(self.boxes):
                if dominates(other, box):
                    raise ConstructionError("box %d dominates emitted box %d" % (k, len(self.boxes)))
        self.boxes.append(box)
        accepted = self.policy.offer(box)
        self.trace.record(box, accepted)
        return accepted

    @property
    def frontier(self):
        if not self.boxes:
            return Fraction(0)
        return max(box.upper[0] for box in self.boxes) + 2


def adaptive_pack_play(spec, policy_spec, rng=None):
    """ 方策と一ブロックずつ対戦する適応的敵対者

    Each block offers disjoint decoys until the policy accepts one (at most
    ``patience`` of them), then offers ``pack_count`` disjoint boxes that all
    intersect the accepted decoy.

    Args:
        spec (AdaptivePackSpec): 敵対者の設定
        policy_spec (PolicySpec): 方策
        rng (RandomSource): 方策の乱数列

    Returns:
        GameResult: 決定の記録と最大独立集合の大きさ
    """
    if policy_spec.kind == policy_spec.CLASSIFIED and spec.shape.kind != ShapeClass.SIGMA_BOUNDED:
        raise PreconditionError("classified greedy plays sigma-bounded packs only")
    emitter = _Emitter(spec, make_policy(policy_spec, rng))
    side = spec.target_side
    kind = spec.shape.kind
    for block in range(spec.blocks):
        target = None
        for _ in range(spec.patience):
            lower = [emitter.frontier] + [Fraction(0)] * (spec.d - 1)
            decoy = Box.cube(lower, side)
            if emitter.emit(decoy):
                target = decoy
                break
        if target is None:
            logger.info("block %d: policy rejected %d decoys", block, spec.patience)
            continue
        if kind in spec.N_MINUS_ONE_KINDS:
            pack = chain_intersecting_boxes(target, spec.pack_count, kind == ShapeClass.UNIT_VOLUME)
        else:
            variant = PackVariant(spec.order, side)
            pack = pack_intersecting_boxes(target, spec.pack_count, variant, spec.slack)
        for box in pack:
            emitter.emit(box)
    arrangement = Arrangement(emitter.boxes, spec.shape, spec.order)
    instance = VerifiedInstance(arrangement)
    result = GameResult(emitter.trace, instance)
    logger.debug("%s vs %s: opt=%d sol=%d", spec.spec(), policy_spec.spec(), result.opt_size, result.sol)
    return result
