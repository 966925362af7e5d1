# -*- encoding: utf-8 -*-
from __future__ import absolute_import

from fractions import Fraction

from boxmis.geometry.box import intersects
from boxmis.utils.errors import PreconditionError
from boxmis.utils.rational import to_rational

MAX_BOXES = 20


def exact_greedy_p_distribution(boxes, p):
    """ Greedy(p) の解の大きさの正確な期待値

    Recurses over the offers with the set of boxes blocked by accepted ones,
    memoized on (index, blocked mask). Independent of the polynomial code.
    """
    boxes = list(boxes)
    p = to_rational(p)
    if len(boxes) > MAX_BOXES:
        raise PreconditionError("%d boxes exceed the exact limit %d" % (len(boxes), MAX_BOXES))
    if not 0 <= p <= 1:
        raise PreconditionError("p must lie in [0, 1], got %s" % p)
    n = len(boxes)
    conflicts = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if intersects(boxes[i], boxes[j]):
                conflicts[i] |= 1 << j
    memo = {}

    def expect(i, blocked):
        if i == n:
            return Fraction(0)
        key = (i, blocked)
        if key in memo:
            return memo[key]
        if blocked >> i & 1:
            value = expect(i + 1, blocked)
        else:
            value = p * (1 + expect(i + 1, blocked | conflicts[i])) + (1 - p) * expect(i + 1, blocked)
        memo[key] = value
        return value

    return expect(0, 0)
