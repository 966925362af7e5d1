# -*- encoding: utf-8 -*-
from __future__ import absolute_import

from fractions import Fraction

from boxmis.expectation.mis import mis_of_boxes
from boxmis.geometry.arrangement import unit_grid_maximum, validate_order, validate_shape
from boxmis.geometry.box import intersects
from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.utils.errors import ConstructionError, PreconditionError
from boxmis.utils.rational import ceil_log2, to_rational

DEFAULT_SLACK = Fraction(1, 10)


def check_slack(slack):
    slack = to_rational(slack)
    if not 0 < slack < Fraction(1, 2):
        raise PreconditionError("slack must lie in (0, 1/2), got %s" % slack)
    return slack


class AdaptivePackSpec(object):
    """ 適応的敵対者の設定

    Args:
        shape (ShapeClass): 形状クラス
        order (str): NON_DOMINATED または ARBITRARY
        d (int): 次元
        pack_count (int): 採用された箱に交差させる互いに素な箱の数 m。
            unit / sigma では省略すると最大値になり、それ以外では必須 (n - 1 族)
        blocks (int): ブロック数
        slack (Fraction): 構成の余裕
        patience (int): 一ブロックで提示するおとりの上限
    """

    N_MINUS_ONE_KINDS = (ShapeClass.UNIT_VOLUME, ShapeClass.ARBITRARY_CUBE, ShapeClass.ARBITRARY_RECT)

    def __init__(self, shape, order, d, pack_count=None, blocks=1, slack=DEFAULT_SLACK, patience=64):
        if order not in (ORDER.NON_DOMINATED, ORDER.ARBITRARY):
            raise PreconditionError("adaptive packs need non-dominated or arbitrary order")
        if d < 1 or blocks < 1 or patience < 1:
            raise PreconditionError("d, blocks and patience must be positive")
        self.shape = shape
        self.order = order
        self.d = d
        self.blocks = blocks
        self.slack = check_slack(slack)
        self.patience = patience
        if shape.kind in self.N_MINUS_ONE_KINDS:
            if pack_count is None or pack_count < 1:
                raise PreconditionError("the n-1 family needs an explicit pack_count")
            if shape.kind == ShapeClass.UNIT_VOLUME and d < 2:
                raise PreconditionError("unit-volume packs need d >= 2")
            self.pack_count = pack_count
        else:
            expected = unit_grid_maximum(d, self.target_side, order)
            if pack_count is not None and pack_count != expected:
                raise PreconditionError("pack_count %d does not match %d for %s/%s"
                                        % (pack_count, expected, shape.spec(), order))
            self.pack_count = expected

    @property
    def target_side(self):
        """ おとり (採用されうる箱) の辺長 """
        if self.shape.kind == ShapeClass.SIGMA_BOUNDED:
            return self.shape.sigma
        return Fraction(1)

    def spec(self):
        return "pack shape=%s order=%s d=%d m=%d blocks=%d" % (
            self.shape.spec(), self.order, self.d, self.pack_count, self.blocks)

    def __repr__(self):
        return '<AdaptivePackSpec %s>' % self.spec()


class MarkingSpec(object):
    """ 印付け (oblivious) 敵対者の設定

    Args:
        d (int): 次元 (2 以上)
        shape (ShapeClass): 形状クラス
        order (str): NON_DOMINATED または ARBITRARY
        levels (int): ブロックあたりのレベル数 L
        blocks (int): ブロック数 B
        extra (int): 末尾の不完全なブロックの箱の数 (互いに素なおとりとして出す)
        slack (Fraction): 構成の余裕
    """

    def __init__(self, d, shape, order, levels, blocks=1, extra=0, slack=DEFAULT_SLACK):
        self.d = d
        self.shape = shape
        self.order = order
        self.levels = levels
        self.blocks = blocks
        self.extra = extra
        self.slack = check_slack(slack)
        if d < 2:
            raise PreconditionError("marking constructions need d >= 2")
        if levels < 1 or blocks < 1:
            raise PreconditionError("levels and blocks must be positive")
        if not 0 <= extra < 2 * levels:
            raise PreconditionError("extra must lie in [0, 2L)")
        if order not in (ORDER.NON_DOMINATED, ORDER.ARBITRARY):
            raise PreconditionError("marking supports non-dominated or arbitrary order")
        limit = self.level_limit()
        if limit is not None and levels > limit:
            raise PreconditionError("%s in %s order supports at most %d level(s)"
                                    % (shape.spec(), order, limit))

    def level_limit(self):
        if self.shape.kind == ShapeClass.UNIT_CUBE:
            return 2 if self.order == ORDER.NON_DOMINATED else 3
        if self.shape.kind == ShapeClass.SIGMA_BOUNDED:
            return max(1, ceil_log2(self.shape.sigma))
        return None

    @property
    def n(self):
        return 2 * self.levels * self.blocks + self.extra

    @property
    def opt_size(self):
        """ 印の付いていない箱 (と各ブロック最終レベルの印の箱) の数 """
        return (self.levels + 1) * self.blocks + self.extra

    def spec(self):
        return "marking shape=%s order=%s d=%d L=%d B=%d extra=%d" % (
            self.shape.spec(), self.order, self.d, self.levels, self.blocks, self.extra)

    def __repr__(self):
        return '<MarkingSpec %s>' % self.spec()


class VerifiedInstance(object):
    """ 自己検証済みの入力

    Construction fails with ConstructionError unless the arrangement satisfies
    its claimed classes and the unmarked boxes are pairwise disjoint.

    Attributes:
        arrangement (Arrangement): 配置
        marks (frozenset of int): 印を付けた箱の番号 (なければ None)
        opt_size (int): 最大独立集合の大きさ (計算値)
    """

    def __init__(self, arrangement, marks=None, opt_size=None):
        report = validate_shape(arrangement)
        if not report:
            raise ConstructionError("box %s violates %s" % (report.first_violation, arrangement.shape.spec()))
        report = validate_order(arrangement)
        if not report:
            raise ConstructionError("pair %s violates %s order" % (report.first_violation, arrangement.order))
        self.arrangement = arrangement
        self.marks = None if marks is None else frozenset(marks)
        if self.marks is not None:
            unmarked = [box for i, box in enumerate(arrangement) if i not in self.marks]
            if not _pairwise_disjoint(unmarked):
                raise ConstructionError("unmarked boxes intersect")
        self.opt_size = mis_of_boxes(arrangement) if opt_size is None else opt_size

    def __len__(self):
        return len(self.arrangement)

    def __repr__(self):
        return '<VerifiedInstance n=%d opt=%d>' % (len(self.arrangement), self.opt_size)


def _pairwise_disjoint(boxes):
    ordered = sorted(boxes, key=lambda box: box.lower[0])
    for k, box in enumerate(ordered):
        for other in ordered[k + 1:]:
            if other.lower[0] > box.upper[0]:
                break
            if intersects(box, other):
                return False
    return True
