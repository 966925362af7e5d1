# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

import unittest
from fractions import Fraction
from functools import reduce

import six

from boxmis.utils.errors import BoxmisError, DimensionError, PreconditionError
from boxmis.utils.rational import format_rational, to_rational


class Box(object):
    """ 閉じた軸平行超直方体 [l1, u1] x ... x [ld, ud]

    Corners are exact rationals, so shared boundaries are decided exactly.

    Args:
        lower (sequence): 下側頂点の座標
        upper (sequence): 上側頂点の座標

    Attributes:
        lower (tuple of Fraction): lower vertex
        upper (tuple of Fraction): upper vertex
    """

    __slots__ = ("lower", "upper")

    def __init__(self, lower, upper):
        lower = tuple(to_rational(x) for x in lower)
        upper = tuple(to_rational(x) for x in upper)
        if len(lower) != len(upper):
            raise DimensionError("lower has %d axes, upper has %d" % (len(lower), len(upper)))
        if not lower:
            raise PreconditionError("a box needs at least one axis")
        for axis, (lo, hi) in enumerate(zip(lower, upper)):
            if lo > hi:
                raise PreconditionError("axis %d: lower %s exceeds upper %s" % (axis, lo, hi))
        self.lower = lower
        self.upper = upper

    @classmethod
    def from_spec(cls, spec):
        """ "l1 u1 l2 u2 ..." 形式の一行から作る """
        assert isinstance(spec, six.text_type)
        fields = spec.split()
        if not fields or len(fields) % 2 != 0:
            raise BoxmisError("Illegal box spec: %s" % spec)
        values = [to_rational(field) for field in fields]
        return cls(values[0::2], values[1::2])

    @classmethod
    def cube(cls, lower, side):
        side = to_rational(side)
        lower = [to_rational(x) for x in lower]
        return cls(lower, [x + side for x in lower])

    @property
    def dim(self):
        return len(self.lower)

    def side_lengths(self):
        return tuple(hi - lo for lo, hi in zip(self.lower, self.upper))

    def side(self, axis=0):
        return self.upper[axis] - self.lower[axis]

    def volume(self):
        return reduce(lambda acc, s: acc * s, self.side_lengths(), Fraction(1))

    def is_cube(self):
        sides = self.side_lengths()
        return all(s == sides[0] for s in sides)

    def translate(self, offset):
        offset = [to_rational(x) for x in offset]
        if len(offset) != self.dim:
            raise DimensionError("offset has %d axes, box has %d" % (len(offset), self.dim))
        return Box([lo + v for lo, v in zip(self.lower, offset)],
                   [hi + v for hi, v in zip(self.upper, offset)])

    def lift(self, dim, extent=None):
        """ 軸を追加して dim 次元にする

        Each added axis spans [0, extent]; by default the extent is the first
        side length, which keeps cubes cubes.
        """
        if dim < self.dim:
            raise DimensionError("cannot lift a %d-dimensional box to %d" % (self.dim, dim))
        extent = self.side(0) if extent is None else to_rational(extent)
        pad = dim - self.dim
        return Box(self.lower + (Fraction(0),) * pad, self.upper + (extent,) * pad)

    def spec(self):
        fields = []
        for lo, hi in zip(self.lower, self.upper):
            fields.append(format_rational(lo))
            fields.append(format_rational(hi))
        return " ".join(fields)

    def __eq__(self, other):
        return isinstance(other, Box) and self.lower == other.lower and self.upper == other.upper

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lower, self.upper))

    def __repr__(self):
        return 'Box.from_spec(%s)' % repr(self.spec())


def _check_dims(a, b):
    if a.dim != b.dim:
        raise DimensionError("dimension mismatch: %d vs %d" % (a.dim, b.dim))


def intersects(a, b):
    """ 閉集合として共有点を持つかどうか (境界の接触も交差とみなす) """
    _check_dims(a, b)
    for j in range(a.dim):
        if a.lower[j] > b.upper[j] or b.lower[j] > a.upper[j]:
            return False
    return True


def dominates(a, b):
    """ a の上側頂点が b の上側頂点以上かどうか (自分自身も支配する) """
    _check_dims(a, b)
    return all(x >= y for x, y in zip(a.upper, b.upper))


class BoxTest(unittest.TestCase):

    def test_spec(self):
        box = Box.from_spec("2.3 3.3 0.7 1.7")
        self.assertEqual(box.dim, 2)
        self.assertEqual(box.upper, (Fraction(33, 10), Fraction(17, 10)))
        self.assertEqual(box.spec(), "2.3 3.3 0.7 1.7")

    def test_repr(self):
        box = Box([0, Fraction(1, 3)], [1, 2])
        self.assertEqual(eval(repr(box)), box)

    def test_touch(self):
        self.assertTrue(intersects(Box([0, 0], [1, 1]), Box([1, 1], [2, 2])))
        self.assertFalse(intersects(Box([0, 0], [2, 2]), Box([3, 3], [4, 4])))

    def test_volume(self):
        self.assertEqual(Box([0, 0], [Fraction(1, 2), 2]).volume(), 1)


if __name__ == '__main__':
    unittest.main()
