# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import itertools
from fractions import Fraction

from boxmis.expectation.graph import OrderedGraph
from boxmis.expectation.polynomial import asymptotic_block_ratio, greedy_p_polynomial
from boxmis.utils.errors import PreconditionError
from boxmis.utils.rational import to_rational


def marking_block_graph(levels, marks):
    """ 印付け敵対者の一ブロックの順序付きグラフ

    Level j occupies vertices 2j and 2j+1; both intersect the marked box of
    every earlier level and nothing else. Only levels 0..L-2 carry a mark.

    Args:
        levels (int): レベル数 L
        marks (sequence of int): 各レベルで印を付けた側 (0: 先, 1: 後)
    """
    if len(marks) < levels - 1:
        raise PreconditionError("%d levels need %d marks" % (levels, levels - 1))
    edges = []
    for j in range(1, levels):
        for i in range(j):
            marked = 2 * i + marks[i]
            edges.append((marked, 2 * j))
            edges.append((marked, 2 * j + 1))
    return OrderedGraph.from_edges(2 * levels, edges)


def marking_block_expectation(levels, p):
    """ L レベルの一ブロックでの Greedy(p) の解の大きさの正確な期待値

    Averages over all 2^(L-1) marking outcomes; the policy's coins are handled
    exactly by the expectation polynomial of each outcome.

    This is the exact value, not the nested bound: at p = 1/2 it gives 3/2 for
    two levels and 7/4 for three, while ``marking_block_bound`` gives 7/4 and
    15/8. The bound for L levels equals this expectation for L + 1 levels.
    """
    p = to_rational(p)
    if levels < 1:
        raise PreconditionError("a block needs at least one level")
    if not 0 <= p <= 1:
        raise PreconditionError("p must lie in [0, 1], got %s" % p)
    total = Fraction(0)
    outcomes = 0
    for marks in itertools.product((0, 1), repeat=levels - 1):
        total += greedy_p_polynomial(marking_block_graph(levels, marks)).evaluate(p)
        outcomes += 1
    return total / outcomes


def marking_block_bound(levels, q):
    """ 1 + q (1 + q (1 + ...)) を L 段重ねた上界

    q bounds the probability that a policy keeps exactly the marked box of a
    level; with q = 1/2 this is 7/4 for two levels and 15/8 for three, and it
    tends to 1 / (1 - q).
    """
    q = to_rational(q)
    value = Fraction(1)
    for _ in range(levels):
        value = 1 + q * value
    return value


def composite_ratio(n, block_n, block, remainder=None):
    """ 大きさ block_n の最悪ブロックを繰り返し、余りを別のブロックで埋めたときの比

    Args:
        n (int): 全体の頂点数
        block_n (int): 繰り返すブロックの頂点数
        block (tuple): ブロックの (opt, 期待値)
        remainder (tuple): 大きさ n mod block_n のブロックの (opt, 期待値)

    Returns:
        Fraction: OPT と期待値の和どうしの比
    """
    if block_n < 1 or n < block_n:
        raise PreconditionError("need 1 <= block_n <= n")
    count, rest = divmod(n, block_n)
    opt = count * block[0]
    expectation = count * Fraction(block[1])
    if rest:
        if remainder is None:
            raise PreconditionError("a block of size %d is needed for the remainder" % rest)
        opt += remainder[0]
        expectation += Fraction(remainder[1])
    return asymptotic_block_ratio(opt, expectation)
