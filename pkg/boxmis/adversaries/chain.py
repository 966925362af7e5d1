# -*- encoding: utf-8 -*-
from __future__ import absolute_import

from fractions import Fraction

from boxmis.geometry.arrangement import Arrangement
from boxmis.geometry.box import Box
from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.utils.errors import PreconditionError

OVERLAP_STEP = Fraction(3, 5)


def dominating_chain(n, d, overlapping=False):
    """ 支配順の単位立方体の鎖

    Disjoint chains are diagonal translates two apart; overlapping chains step
    3/5 along the diagonal, so consecutive boxes meet and boxes two apart do
    not (MIS = ceil(n/2)).
    """
    if n < 1 or d < 1:
        raise PreconditionError("need n >= 1 and d >= 1")
    step = OVERLAP_STEP if overlapping else Fraction(2)
    boxes = [Box.cube([k * step] * d, 1) for k in range(n)]
    return Arrangement(boxes, ShapeClass(ShapeClass.UNIT_CUBE), ORDER.DOMINATING)


def random_dominating_arrangement(n, d, rng, resolution=4, max_length=3):
    """ 重なりを許したランダムな支配順の直方体列

    Upper vertices grow by random non-negative multiples of 1/resolution on
    every axis; side lengths are random multiples of 1/resolution in
    (0, max_length].

    Args:
        n (int): 箱の数
        d (int): 次元
        rng (RandomSource): 乱数列
    """
    if n < 1 or d < 1:
        raise PreconditionError("need n >= 1 and d >= 1")
    upper = [Fraction(0)] * d
    boxes = []
    for _ in range(n):
        upper = [u + Fraction(rng.integer(0, resolution + 1), resolution) for u in upper]
        lower = [u - Fraction(rng.integer(1, max_length * resolution + 1), resolution) for u in upper]
        boxes.append(Box(lower, upper))
    return Arrangement(boxes, ShapeClass(ShapeClass.ARBITRARY_RECT), ORDER.DOMINATING)
