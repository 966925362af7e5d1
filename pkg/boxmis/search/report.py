# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging
from fractions import Fraction

from boxmis.expectation.blocks import composite_ratio
from boxmis.expectation.polynomial import greedy_p_polynomial, optimize_p
from boxmis.geometry.arrangement import arrangement_matches, validate_order, validate_shape
from boxmis.search.search import SearchConfig, minimax_search
from boxmis.utils.errors import PreconditionError
from boxmis.utils.rational import format_rational

logger = logging.getLogger(__name__)


class WorstGraphReport(object):
    """ 格子点 p での最悪のグラフとその最適な p

    Attributes:
        graph (OrderedGraph): 最悪のグラフ
        polynomial (ExpectationPolynomial): 期待値多項式
        opt (int): 最大独立集合の大きさ
        optimum (POptimum): optimize_p による最適化
        confirmed (bool): 最適な p でもこのグラフが最悪であるかどうか
    """

    def __init__(self, p, graph, polynomial, opt, optimum, confirmed):
        self.p = p
        self.graph = graph
        self.polynomial = polynomial
        self.opt = opt
        self.optimum = optimum
        self.confirmed = confirmed

    def spec(self):
        return "".join([
            "# p=%s opt=%d\n" % (format_rational(self.p), self.opt),
            "# polynomial: %s\n" % self.polynomial.spec(),
            "# p*=%s ratio=%s (%.6f) confirmed=%s\n" % (
                format_rational(self.optimum.p_star), self.optimum.min_ratio,
                float(self.optimum.min_ratio), str(self.confirmed).lower()),
            self.graph.spec(),
        ])

    def __repr__(self):
        return '<WorstGraphReport p=%s confirmed=%r>' % (format_rational(self.p), self.confirmed)


def worst_graph_report(result, p, workers=1):
    """ p での最悪のグラフを報告し、最適な p で全探索をやり直して確かめる """
    entry = result.entry(p)
    polynomial = greedy_p_polynomial(entry.graph)
    optimum = optimize_p(polynomial, entry.opt)
    if optimum.p_star == 0:
        confirmed = False
    else:
        rescan = minimax_search(SearchConfig(result.n, [optimum.p_star], workers=workers))
        worst = rescan.entry(optimum.p_star)
        confirmed = worst.ratio == optimum.min_ratio
    logger.info("n=%d p=%s: refined p*=%s confirmed=%s", result.n, format_rational(entry.p),
                optimum.p_star, confirmed)
    return WorstGraphReport(entry.p, entry.graph, polynomial, entry.opt, optimum, confirmed)


def realizability_check(graph, fixture):
    """ 配置が主張するクラスを満たし、交差グラフが graph と一致するか """
    if len(fixture) != graph.n:
        raise PreconditionError("fixture has %d boxes, graph has %d vertices" % (len(fixture), graph.n))
    return bool(validate_shape(fixture)) and bool(validate_order(fixture)) and arrangement_matches(fixture, graph)


def degree_report(result):
    """ 格子点ごとの最悪グラフの次数列と、最大次数の頂点が先頭かどうか """
    rows = []
    for p in sorted(result.entries):
        degrees = result.entries[p].graph.degree_sequence()
        rows.append((p, degrees, degrees[0] == max(degrees)))
    return rows


def monotonicity_report(results):
    """ n ごとの最良比と、それが n について単調非減少かどうか

    Args:
        results (list of SearchResult): n の昇順

    Returns:
        tuple: ([(n, best_p, ratio)], 単調かどうか)
    """
    rows = [(r.n, r.best_p, r.best_entry().ratio) for r in results]
    monotone = all(a[2] <= b[2] for a, b in zip(rows, rows[1:]))
    return rows, monotone


def composite_from_search(n, block_n, p, workers=1):
    """ 固定 p の最悪ブロックを繰り返したときの比 """
    def worst(size):
        entry = minimax_search(SearchConfig(size, [p], workers=workers)).entry(p)
        return entry.opt, entry.expectation

    rest = n % block_n
    return composite_ratio(n, block_n, worst(block_n), worst(rest) if rest else None)


def fixed_n_row(n, p_grid=None, workers=1):
    """ 固定 n の最良の p と比 """
    result = minimax_search(SearchConfig(n, p_grid, workers=workers))
    entry = result.best_entry()
    return result.best_p, Fraction(entry.ratio)
