# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging
from fractions import Fraction

from boxmis.adversaries.instance import VerifiedInstance
from boxmis.expectation.blocks import marking_block_graph
from boxmis.geometry.arrangement import Arrangement, connected_components, intersection_graph
from boxmis.geometry.box import Box
from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.utils.errors import ConstructionError

logger = logging.getLogger(__name__)

BLOCK_GAP = 2


def draw_marks(spec, rng):
    """ ブロックごとに L - 1 個の印 (0: 先の箱, 1: 後の箱) を引く """
    return [[rng.integer(0, 2) for _ in range(spec.levels - 1)] for _ in range(spec.blocks)]


def nested_sides(levels, margin):
    """ 下から S_L = 1, S_j = 2 S_(j+1) + margin で辺長を決める """
    sides = [Fraction(1)]
    for _ in range(levels - 1):
        sides.append(2 * sides[-1] + margin)
    return sides[::-1]


def _sigma_margin(spec):
    top = 2 ** (spec.levels - 1)
    if spec.levels == 1:
        return spec.slack
    return min(spec.slack, (spec.shape.sigma - top) / (top - 1))


class _Rect(object):
    """ 二次元の長方形 (x0, x1, y0, y1) と持ち上げ方 """

    def __init__(self, x0, x1, y0, y1):
        self.x0, self.x1, self.y0, self.y1 = x0, x1, y0, y1

    def box(self, d, extent):
        return Box([self.x0, self.y0] + [Fraction(0)] * (d - 2),
                   [self.x1, self.y1] + [extent] * (d - 2))


def _unit_block(spec, marks):
    """ 単位立方体のブロック (非支配順で 2 レベル、任意順で 3 レベルまで) """
    s = spec.slack
    one = Fraction(1)
    levels = [(_Rect(0, one, 0, one), _Rect(2, 3, 0, one))]
    if spec.levels >= 2:
        m = levels[0][marks[0]]
        mx, my = m.x0, m.y0
        if spec.order == ORDER.NON_DOMINATED:
            levels.append((_Rect(mx - 1 + s, mx + s, my + 1 - s, my + 2 - s),
                           _Rect(mx + 1 - s, mx + 2 - s, my + 1 - s, my + 2 - s)))
        else:
            levels.append((_Rect(mx - s, mx + 1 - s, my - 1 + s, my + s),
                           _Rect(mx - s, mx + 1 - s, my + 1 - s, my + 2 - s)))
    if spec.levels >= 3:
        above = marks[1] == 1
        a = (1 - s) / 4
        y0, y1 = my + 1 - s / 2, my + 2 - s / 2
        if not above:
            # mirror about the middle of the first marked box
            y0, y1 = 2 * my + 1 - y1, 2 * my + 1 - y0
        levels.append((_Rect(mx - 1 + a, mx + a, y0, y1),
                       _Rect(mx + 1 - s - a, mx + 2 - s - a, y0, y1)))
    return [(rect, one) for pair in levels for rect in pair]


def _nested_block(spec, marks, widths, flat):
    """ 辺を半分ずつにした入れ子のブロック

    Children sit inside the marked box's x-range with margin e and poke h
    above its top, so each level intersects every earlier marked box and
    no unmarked one. ``flat`` boxes have height 1/width (unit volume).
    """
    levels = spec.levels
    margin = widths[0] - 2 * widths[1] if levels > 1 else spec.slack
    e = margin / 4
    height = [1 / w if flat else w for w in widths]
    h = 1 / (widths[0] * levels) if flat else Fraction(1, 2 * levels)
    w1 = widths[0]
    rects = [_Rect(0, w1, 0, height[0]), _Rect(w1 + 1, 2 * w1 + 1, 0, height[0])]
    marked = rects[marks[0]] if levels > 1 else None
    for j in range(1, levels):
        w = widths[j]
        top = marked.y1 + h
        left = _Rect(marked.x0 + e, marked.x0 + e + w, top - height[j], top)
        right = _Rect(marked.x1 - e - w, marked.x1 - e, top - height[j], top)
        rects.extend([left, right])
        if j < levels - 1:
            marked = (left, right)[marks[j]]
    extents = []
    for j in range(levels):
        extent = Fraction(1) if flat else widths[j]
        extents.extend([extent, extent])
    return list(zip(rects, extents))


def _block_rects(spec, marks):
    kind = spec.shape.kind
    if kind == ShapeClass.UNIT_CUBE:
        return _unit_block(spec, marks)
    if kind == ShapeClass.SIGMA_BOUNDED:
        return _nested_block(spec, marks, nested_sides(spec.levels, _sigma_margin(spec)), False)
    return _nested_block(spec, marks, nested_sides(spec.levels, spec.slack),
                         kind == ShapeClass.UNIT_VOLUME)


def marking_graph(spec, marks):
    """ 印から決まるブロック (と末尾のおとり) の順序付きグラフの列 """
    return [marking_block_graph(spec.levels, block_marks) for block_marks in marks]


def marking_generate(spec, rng):
    """ 印付け敵対者の入力を作って検証する

    Args:
        spec (MarkingSpec): 敵対者の設定
        rng (RandomSource): 敵対者の乱数列 (印)

    Returns:
        VerifiedInstance: 印と最大独立集合の大きさ付きの入力
    """
    marks = draw_marks(spec, rng)
    boxes = []
    marked_indices = []
    frontier = Fraction(0)
    for block_marks in marks:
        base = len(boxes)
        placed = [rect.box(spec.d, extent).translate([frontier] + [0] * (spec.d - 1))
                  for rect, extent in _block_rects(spec, block_marks)]
        boxes.extend(placed)
        marked_indices.extend(base + 2 * j + mark for j, mark in enumerate(block_marks))
        frontier = max(box.upper[0] for box in placed) + BLOCK_GAP
    side = boxes[0].side(0) if spec.shape.kind == ShapeClass.SIGMA_BOUNDED else Fraction(1)
    for k in range(spec.extra):
        boxes.append(Box.cube([frontier + k * (side + BLOCK_GAP)] + [0] * (spec.d - 1), side))
    arrangement = Arrangement(boxes, spec.shape, spec.order)
    _check_pattern(spec, arrangement, marks)
    instance = VerifiedInstance(arrangement, marked_indices)
    if instance.opt_size != spec.opt_size:
        raise ConstructionError("MIS %d differs from the unmarked count %d" % (instance.opt_size, spec.opt_size))
    logger.debug("generated %s", spec.spec())
    return instance


def _check_pattern(spec, arrangement, marks):
    size = 2 * spec.levels
    full = size * spec.blocks
    for component in connected_components(arrangement):
        owners = set(i // size if i < full else -1 - i for i in component)
        if len(owners) > 1:
            raise ConstructionError("boxes %s join separate blocks" % component)
    for b, graph in enumerate(marking_graph(spec, marks)):
        members = [arrangement[i] for i in range(b * size, (b + 1) * size)]
        if intersection_graph(members) != graph:
            raise ConstructionError("block %d does not follow its marks" % b)
