# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

from boxmis.utils.errors import BoxmisError, PreconditionError
from boxmis.utils.rational import format_rational, to_rational


class ORDER(object):
    """ 入力順序のクラス """
    DOMINATING = "dominating"
    NON_DOMINATED = "nondominated"
    ARBITRARY = "arbitrary"

    ALL = (DOMINATING, NON_DOMINATED, ARBITRARY)

    @classmethod
    def parse(cls, tag):
        if tag not in cls.ALL:
            raise BoxmisError("Illegal order tag: %s" % tag)
        return tag


class ShapeClass(object):
    """ 入力形状のクラス

    Args:
        kind (str): one of ``ShapeClass.KINDS``
        sigma (Fraction): 辺長の上限 (``SIGMA_BOUNDED`` のときのみ)
    """
    UNIT_CUBE = "unit"
    SIGMA_BOUNDED = "sigma"
    UNIT_VOLUME = "unitvol"
    ARBITRARY_CUBE = "cube"
    ARBITRARY_RECT = "rect"

    KINDS = (UNIT_CUBE, SIGMA_BOUNDED, UNIT_VOLUME, ARBITRARY_CUBE, ARBITRARY_RECT)

    def __init__(self, kind, sigma=None):
        if kind not in self.KINDS:
            raise BoxmisError("Illegal shape tag: %s" % kind)
        if (kind == self.SIGMA_BOUNDED) != (sigma is not None):
            raise PreconditionError("sigma is given iff the shape is sigma-bounded")
        if sigma is not None:
            sigma = to_rational(sigma)
            if sigma < 1:
                raise PreconditionError("sigma must be at least 1, got %s" % sigma)
        self.kind = kind
        self.sigma = sigma

    @classmethod
    def parse(cls, spec):
        if ":" in spec:
            kind, sigma = spec.split(":", 1)
            return cls(kind, to_rational(sigma))
        return cls(spec)

    @classmethod
    def sigma_bounded(cls, sigma):
        return cls(cls.SIGMA_BOUNDED, sigma)

    @property
    def is_cube_class(self):
        return self.kind in (self.UNIT_CUBE, self.SIGMA_BOUNDED, self.ARBITRARY_CUBE)

    def admits(self, box):
        """ box がこの形状クラスに属するかどうか """
        sides = box.side_lengths()
        if self.kind == self.ARBITRARY_RECT:
            return True
        if self.kind == self.UNIT_VOLUME:
            return box.volume() == 1
        if any(s != sides[0] for s in sides) or sides[0] <= 0:
            return False
        if self.kind == self.UNIT_CUBE:
            return sides[0] == 1
        if self.kind == self.SIGMA_BOUNDED:
            return 1 <= sides[0] <= self.sigma
        return True

    def spec(self):
        if self.sigma is None:
            return self.kind
        return "%s:%s" % (self.kind, format_rational(self.sigma))

    def __eq__(self, other):
        return isinstance(other, ShapeClass) and (self.kind, self.sigma) == (other.kind, other.sigma)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.sigma))

    def __repr__(self):
        return 'ShapeClass.parse(%s)' % repr(self.spec())


class ValidationReport(object):
    """ 検証結果

    Attributes:
        ok (bool): 検証に通ったかどうか
        first_violation: 最初の違反 (index または (i, j))、なければ None
    """

    def __init__(self, ok, first_violation=None):
        self.ok = ok
        self.first_violation = first_violation

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __eq__(self, other):
        return (isinstance(other, ValidationReport)
                and (self.ok, self.first_violation) == (other.ok, other.first_violation))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'ValidationReport(%r, %r)' % (self.ok, self.first_violation)
