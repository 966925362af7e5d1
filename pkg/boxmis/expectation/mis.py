# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging

from boxmis.expectation.graph import greedy_solution
from boxmis.geometry.arrangement import connected_components, intersection_graph
from boxmis.utils.errors import PreconditionError

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 24


def _popcount(mask):
    return bin(mask).count("1")


def mis_size(graph):
    """ 最大独立集合を分枝限定法で求める

    The bound is the number of accepted vertices plus the number of candidates;
    branching takes the candidate of largest remaining degree, and vertices with
    no remaining neighbours are taken outright.

    Args:
        graph (OrderedGraph): グラフ

    Returns:
        tuple: (大きさ, 証拠となる頂点マスク)
    """
    n = graph.n
    adj = graph.adj
    witness = greedy_solution(graph)
    best = [_popcount(witness), witness]

    def search(candidates, chosen, size):
        free = 0
        mask = candidates
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if not adj[v] & candidates:
                free |= low
            mask ^= low
        candidates &= ~free
        chosen |= free
        size += _popcount(free)
        if size + _popcount(candidates) <= best[0]:
            return
        if not candidates:
            best[0], best[1] = size, chosen
            return
        pivot = max(_iter_bits(candidates), key=lambda v: (_popcount(adj[v] & candidates), -v))
        search(candidates & ~adj[pivot] & ~(1 << pivot), chosen | 1 << pivot, size + 1)
        search(candidates & ~(1 << pivot), chosen, size)

    search((1 << n) - 1, 0, 0)
    return best[0], best[1]


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mis_exhaustive(graph):
    """ 2^n 通りの部分集合を全て調べる (n <= 24) """
    if graph.n > EXHAUSTIVE_LIMIT:
        raise PreconditionError("exhaustive scan limited to %d vertices" % EXHAUSTIVE_LIMIT)
    best = 0
    for subset in range(1 << graph.n):
        size = _popcount(subset)
        if size > best and graph.is_independent(subset):
            best = size
    return best


def mis_of_boxes(boxes):
    """ 成分ごとの最大独立集合の和 (箱の数に上限なし) """
    boxes = list(boxes)
    total = 0
    for component in connected_components(boxes):
        if len(component) == 1:
            total += 1
            continue
        size, _ = mis_size(intersection_graph([boxes[i] for i in component]))
        total += size
    logger.debug("exact MIS of %d boxes: %d", len(boxes), total)
    return total
