# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

import six

from boxmis.utils.errors import BoxmisError, PreconditionError
from boxmis.utils.rational import format_rational, to_rational


class PolicySpec(object):
    """ オンライン方策の指定

    The text form is ``greedy``, ``greedyp:<p>`` or ``classified:<sigma>:<k>``.

    Args:
        kind (str): ``NAIVE``, ``GREEDY_P`` または ``CLASSIFIED``
        p (Fraction): 採用確率 (GREEDY_P)
        sigma (Fraction): 辺長の上限 (CLASSIFIED)
        k (int): クラス数 (CLASSIFIED)
    """
    NAIVE = "greedy"
    GREEDY_P = "greedyp"
    CLASSIFIED = "classified"

    def __init__(self, kind, p=None, sigma=None, k=None):
        if kind not in (self.NAIVE, self.GREEDY_P, self.CLASSIFIED):
            raise BoxmisError("Illegal policy kind: %s" % kind)
        self.kind = kind
        self.p = None
        self.sigma = None
        self.k = None
        if kind == self.GREEDY_P:
            self.p = to_rational(p)
            if not 0 <= self.p <= 1:
                raise PreconditionError("p must lie in [0, 1], got %s" % self.p)
        elif kind == self.CLASSIFIED:
            self.sigma = to_rational(sigma)
            self.k = int(k)
            if self.sigma < 1:
                raise PreconditionError("sigma must be at least 1, got %s" % self.sigma)
            if self.k < 1:
                raise PreconditionError("k must be positive, got %d" % self.k)

    @classmethod
    def naive(cls):
        return cls(cls.NAIVE)

    @classmethod
    def greedy_p(cls, p):
        return cls(cls.GREEDY_P, p=p)

    @classmethod
    def classified(cls, sigma, k):
        return cls(cls.CLASSIFIED, sigma=sigma, k=k)

    @classmethod
    def parse(cls, spec):
        assert isinstance(spec, six.text_type)
        fields = spec.strip().split(":")
        try:
            if fields[0] == cls.NAIVE and len(fields) == 1:
                return cls.naive()
            if fields[0] == cls.GREEDY_P and len(fields) == 2:
                return cls.greedy_p(fields[1])
            if fields[0] == cls.CLASSIFIED and len(fields) == 3:
                return cls.classified(fields[1], int(fields[2]))
        except ValueError as error:
            if isinstance(error, PreconditionError):
                raise
            raise BoxmisError("Illegal policy spec: %s" % spec)
        raise BoxmisError("Illegal policy spec: %s" % spec)

    @property
    def deterministic(self):
        return self.kind == self.NAIVE or (self.kind == self.GREEDY_P and self.p in (0, 1)) \
            or (self.kind == self.CLASSIFIED and self.k == 1)

    def spec(self):
        if self.kind == self.GREEDY_P:
            return "%s:%s" % (self.kind, format_rational(self.p))
        if self.kind == self.CLASSIFIED:
            return "%s:%s:%d" % (self.kind, format_rational(self.sigma), self.k)
        return self.kind

    def __eq__(self, other):
        return isinstance(other, PolicySpec) and self.spec() == other.spec()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.spec())

    def __repr__(self):
        return 'PolicySpec.parse(%s)' % repr(self.spec())
