# -*- encoding: utf-8 -*-
from __future__ import absolute_import

from fractions import Fraction

from boxmis.geometry.arrangement import unit_grid_maximum
from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.tuning.sigma import sigma_lower_bound
from boxmis.utils.errors import PreconditionError
from boxmis.utils.rational import ceil_log2, to_rational


class ADVERSARY(object):
    ADAPTIVE = "adaptive"
    OBLIVIOUS = "oblivious"

    ALL = (ADAPTIVE, OBLIVIOUS)


N_MINUS_ONE_KINDS = (ShapeClass.UNIT_VOLUME, ShapeClass.ARBITRARY_CUBE, ShapeClass.ARBITRARY_RECT)


class BoundQuery(object):
    """ 競合比の表の一項目の問い合わせ

    Args:
        shape (ShapeClass): 形状クラス (sigma はここに含まれる)
        order (str): 順序クラス
        adversary (str): ``ADVERSARY.ADAPTIVE`` または ``ADVERSARY.OBLIVIOUS``
        d (int): 次元
        n (int): 入力の大きさ (n - 1 族のみ)
        sigma (Fraction): 省略可。与えるなら shape の sigma と一致すること
    """

    def __init__(self, shape, order, adversary, d=2, n=None, sigma=None):
        if sigma is not None:
            if shape.kind != ShapeClass.SIGMA_BOUNDED:
                raise PreconditionError("sigma given for %s" % shape.spec())
            if to_rational(sigma) != shape.sigma:
                raise PreconditionError("sigma %s disagrees with %s" % (sigma, shape.spec()))
        if adversary not in ADVERSARY.ALL:
            raise PreconditionError("unknown adversary %r" % adversary)
        order = ORDER.parse(order)
        if d < 1:
            raise PreconditionError("dimension must be positive")
        n_family = shape.kind in N_MINUS_ONE_KINDS
        if n_family and order != ORDER.DOMINATING and (n is None or n < 2):
            raise PreconditionError("%s needs n >= 2" % shape.spec())
        if not n_family and n is not None:
            raise PreconditionError("n only applies to the n-1 family")
        if shape.kind == ShapeClass.SIGMA_BOUNDED and shape.sigma <= 1:
            raise PreconditionError("sigma-bounded queries need sigma > 1")
        if (shape.kind == ShapeClass.UNIT_CUBE and adversary == ADVERSARY.OBLIVIOUS
                and order != ORDER.DOMINATING and d < 2):
            raise PreconditionError("oblivious unit-cube bounds need d >= 2")
        self.shape = shape
        self.order = order
        self.adversary = adversary
        self.d = d
        self.n = n


class BoundEntry(object):

    def __init__(self, lower, upper):
        self.lower = Fraction(lower)
        self.upper = Fraction(upper)

    @property
    def tight(self):
        return self.lower == self.upper

    def __repr__(self):
        return 'BoundEntry(%s, %s)' % (self.lower, self.upper)


def bounds_table(q):
    """ 形状・順序・敵対者ごとの競合比 (または既知の下界と上界)

    Args:
        q (BoundQuery): 問い合わせ

    Returns:
        BoundEntry: 下界と上界 (一致すれば tight)
    """
    d = q.d
    kind = q.shape.kind
    if q.order == ORDER.DOMINATING:
        return BoundEntry(1, 1)
    non_dominated = q.order == ORDER.NON_DOMINATED
    if kind in N_MINUS_ONE_KINDS:
        if q.adversary == ADVERSARY.ADAPTIVE:
            return BoundEntry(q.n - 1, q.n - 1)
        return BoundEntry(Fraction(q.n // 2, 2) + Fraction(1, 2), q.n - 1)
    sigma = q.shape.sigma if kind == ShapeClass.SIGMA_BOUNDED else 1
    if q.adversary == ADVERSARY.ADAPTIVE:
        value = unit_grid_maximum(d, sigma, q.order)
        return BoundEntry(value, value)
    if kind == ShapeClass.UNIT_CUBE:
        if non_dominated:
            return BoundEntry(Fraction(12, 7), 2 ** d - 1)
        return BoundEntry(Fraction(32, 15), 2 ** d)
    t = ceil_log2(sigma)
    upper = 3 ** d * t - 2 ** d * t if non_dominated else 3 ** d * t
    return BoundEntry(sigma_lower_bound(sigma), upper)
