# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import concurrent.futures
import logging
import math
import time
from fractions import Fraction

import numpy as np
import six

from boxmis.expectation.graph import OrderedGraph, edge_bit, edge_slots
from boxmis.expectation.polynomial import ExpectationPolynomial, expand_forward
from boxmis.search.checkpoint import config_digest, read_checkpoint, write_checkpoint
from boxmis.utils.errors import BoxmisError, PreconditionError
from boxmis.utils.rational import format_rational, to_rational

logger = logging.getLogger(__name__)

MIN_VERTICES = 1
MAX_VERTICES = 8
INT64_LIMIT = 2 ** 62
SCREEN_TOLERANCE = 1e-9


def default_grid(step=Fraction(1, 100)):
    step = to_rational(step)
    if step <= 0 or step > 1 or (1 / step).denominator != 1:
        raise PreconditionError("grid step must divide 1, got %s" % step)
    count = int(1 / step)
    return [k * step for k in range(count + 1)]


class SearchConfig(object):
    """ 全探索の設定

    Args:
        n (int): 頂点数
        p_grid (list): p の格子 (既定は 0.00, 0.01, ..., 1.00)
        workers (int): プロセス数
        checkpoint_interval (int): 一度に調べるグラフの数
        checkpoint (str): チェックポイントファイル (空なら使わない)
    """

    def __init__(self, n, p_grid=None, workers=1, checkpoint_interval=4096, checkpoint=""):
        if not MIN_VERTICES <= n <= MAX_VERTICES:
            raise PreconditionError("n must lie in [%d, %d], got %d" % (MIN_VERTICES, MAX_VERTICES, n))
        grid = default_grid() if p_grid is None else [to_rational(p) for p in p_grid]
        if not grid:
            raise PreconditionError("empty p grid")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise PreconditionError("p grid must be strictly increasing")
        if grid[0] < 0 or grid[-1] > 1:
            raise PreconditionError("p grid must lie in [0, 1]")
        if workers < 1 or checkpoint_interval < 1:
            raise PreconditionError("workers and checkpoint_interval must be positive")
        self.n = n
        self.p_grid = grid
        self.workers = workers
        self.checkpoint_interval = checkpoint_interval
        self.checkpoint = checkpoint

    @property
    def graph_count(self):
        return 1 << edge_slots(self.n)

    def digest(self):
        return config_digest(self.n, self.p_grid)


class SearchEntry(object):
    """ 格子点 p での最悪のグラフ """

    def __init__(self, p, graph, opt, expectation, coeffs=None):
        self.p = p
        self.graph = graph
        self.opt = opt
        self.expectation = expectation
        self.coeffs = coeffs

    @property
    def ratio(self):
        return Fraction(self.opt) / self.expectation

    def polynomial(self):
        return ExpectationPolynomial(self.coeffs)

    def __repr__(self):
        return '<SearchEntry p=%s ratio=%.6f>' % (format_rational(self.p), float(self.ratio))


class SearchResult(object):
    """ 全探索の結果

    Attributes:
        n (int): 頂点数
        p_grid (list of Fraction): 格子
        entries (dict): p (> 0) から SearchEntry への写像
        zero_excluded (bool): p = 0 が格子にあり、比を +inf としたかどうか
        graphs_scanned (int): 調べたグラフの数
        elapsed (float): 経過秒数
    """

    HEADER = "p,worst_ratio,worst_graph_hex,opt,expectation_num,expectation_den"

    def __init__(self, n, p_grid, entries, graphs_scanned=0, elapsed=0.0):
        self.n = n
        self.p_grid = list(p_grid)
        self.entries = entries
        self.zero_excluded = bool(p_grid) and p_grid[0] == 0
        self.graphs_scanned = graphs_scanned
        self.elapsed = elapsed

    def entry(self, p):
        p = to_rational(p)
        if p not in self.entries:
            raise PreconditionError("p=%s is not a positive grid point" % format_rational(p))
        return self.entries[p]

    @property
    def best_p(self):
        """ 最悪比が最小の格子点 (同点なら小さい p) """
        best = None
        for p in sorted(self.entries):
            if best is None or self.entries[p].ratio < self.entries[best].ratio:
                best = p
        return best

    def best_entry(self):
        return self.entries[self.best_p]

    def spec(self):
        lines = [self.HEADER]
        for p in self.p_grid:
            if p == 0:
                lines.append("0,inf,,,0,1")
                continue
            entry = self.entries[p]
            lines.append("%s,%.9f,%x,%d,%d,%d" % (
                format_rational(p), float(entry.ratio), entry.graph.edge_mask(), entry.opt,
                entry.expectation.numerator, entry.expectation.denominator))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_spec(cls, n, spec):
        assert isinstance(spec, six.text_type)
        lines = [line for line in spec.split("\n") if line.strip()]
        if not lines or lines[0] != cls.HEADER:
            raise BoxmisError("Illegal search result spec: missing header")
        grid = []
        entries = {}
        for line in lines[1:]:
            fields = line.split(",")
            if len(fields) != 6:
                raise BoxmisError("Illegal search result line: %s" % line)
            p = to_rational(fields[0])
            grid.append(p)
            if p == 0:
                continue
            graph = OrderedGraph.from_edge_mask(n, int(fields[2], 16))
            coeffs, _ = expand_forward([graph.forward(i) for i in range(n)])
            entries[p] = SearchEntry(p, graph, int(fields[3]), Fraction(int(fields[4]), int(fields[5])), coeffs)
        return cls(n, grid, entries)

    def __repr__(self):
        return '<SearchResult n=%d best_p=%s>' % (self.n, self.best_p)


def enumerate_ordered_graphs(n):
    """ n 頂点の順序付きグラフを正準ビットマスクの昇順に全て生成する """
    if not MIN_VERTICES <= n <= MAX_VERTICES:
        raise PreconditionError("n must lie in [%d, %d], got %d" % (MIN_VERTICES, MAX_VERTICES, n))
    for mask in six.moves.range(1 << edge_slots(n)):
        yield OrderedGraph.from_edge_mask(n, mask)


def _forward_rows(n, mask):
    rows = []
    for i in range(n):
        width = n - i - 1
        if width == 0:
            rows.append(0)
            continue
        offset = edge_bit(n, i, i + 1)
        rows.append(((mask >> offset) & ((1 << width) - 1)) << (i + 1))
    return rows


def _better(candidate, incumbent):
    """ (opt, scaled, mask) の比較: 比が大きい方、同点なら小さいマスク """
    if incumbent is None:
        return True
    left = candidate[0] * incumbent[1]
    right = incumbent[0] * candidate[1]
    if left != right:
        return left > right
    return candidate[2] < incumbent[2]


def merge_maxima(first, second):
    """ 格子点ごとの最大値を合わせる (結合的かつ可換) """
    merged = []
    for a, b in zip(first, second):
        merged.append(b if b is not None and _better(b, a) else a)
    return merged


def scan_range(n, numerators, denominator, lo, hi):
    """ マスク [lo, hi) のグラフについて格子点ごとの最大比を求める

    Every graph's polynomial is evaluated at a_k / D scaled by D^n, so all
    comparisons are between integers.

    Returns:
        list: 格子点ごとの (opt, scaled expectation, mask)、p = 0 の列は None
    """
    coeffs = []
    opts = []
    for mask in six.moves.range(lo, hi):
        poly, mis = expand_forward(_forward_rows(n, mask))
        coeffs.append(list(poly) + [0] * (n + 1 - len(poly)))
        opts.append(mis)
    powers = [[a ** t * denominator ** (n - t) for a in numerators] for t in range(n + 1)]
    largest = max(abs(c) for row in coeffs for c in row) or 1
    biggest_power = max(max(row) for row in powers) or 1
    if largest * biggest_power * (n + 1) < INT64_LIMIT:
        scaled = np.array(coeffs, dtype=np.int64).dot(np.array(powers, dtype=np.int64))
    else:
        scaled = np.array(coeffs, dtype=object).dot(np.array(powers, dtype=object))
    opt_column = np.array(opts, dtype=float)
    maxima = []
    for k, a in enumerate(numerators):
        if a == 0:
            maxima.append(None)
            continue
        column = scaled[:, k]
        ratios = opt_column / column.astype(float)
        top = ratios.max()
        best = None
        for row in np.nonzero(ratios >= top * (1 - SCREEN_TOLERANCE))[0]:
            candidate = (opts[row], int(column[row]), lo + int(row))
            if _better(candidate, best):
                best = candidate
        maxima.append(best)
    return maxima


def _grid_scale(grid):
    denominator = 1
    for p in grid:
        denominator = denominator * p.denominator // math.gcd(denominator, p.denominator)
    return [int(p * denominator) for p in grid], denominator


def minimax_search(cfg):
    """ 全ての順序付きグラフについて、格子点ごとに最悪の比を求める

    Ranges of ``checkpoint_interval`` masks are scanned (in worker processes
    when ``workers`` > 1) and merged in mask order, so the result does not
    depend on the worker count.

    Args:
        cfg (SearchConfig): 設定

    Returns:
        SearchResult: 結果
    """
    start_time = time.time()
    numerators, denominator = _grid_scale(cfg.p_grid)
    total = cfg.graph_count
    maxima = [None] * len(numerators)
    next_mask = 0
    digest = cfg.digest()
    if cfg.checkpoint:
        state = read_checkpoint(cfg.checkpoint, digest, len(numerators))
        if state is not None:
            next_mask, maxima = state
    ranges = [(lo, min(lo + cfg.checkpoint_interval, total))
              for lo in six.moves.range(next_mask, total, cfg.checkpoint_interval)]
    logger.info("n=%d: scanning %d graphs in %d range(s)", cfg.n, total - next_mask, len(ranges))

    def absorb(hi, partial):
        merged = merge_maxima(maxima, partial)
        maxima[:] = merged
        if cfg.checkpoint:
            write_checkpoint(cfg.checkpoint, digest, hi, maxima)
        logger.debug("scanned masks below %d of %d", hi, total)

    if cfg.workers == 1:
        for lo, hi in ranges:
            absorb(hi, scan_range(cfg.n, numerators, denominator, lo, hi))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            futures = [executor.submit(scan_range, cfg.n, numerators, denominator, lo, hi)
                       for lo, hi in ranges]
            for (lo, hi), future in zip(ranges, futures):
                absorb(hi, future.result())

    entries = {}
    for p, best in zip(cfg.p_grid, maxima):
        if best is None:
            continue
        graph = OrderedGraph.from_edge_mask(cfg.n, best[2])
        coeffs, _ = expand_forward([graph.forward(i) for i in range(cfg.n)])
        expectation = Fraction(best[1], denominator ** cfg.n)
        entries[p] = SearchEntry(p, graph, best[0], expectation, coeffs)
    elapsed = time.time() - start_time
    logger.info("n=%d done in %.1fs", cfg.n, elapsed)
    return SearchResult(cfg.n, cfg.p_grid, entries, total, elapsed)
