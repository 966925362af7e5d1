# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

import unittest

import six

from boxmis.utils.errors import BoxmisError, PreconditionError

MAX_VERTICES = 63


def edge_bit(n, i, j):
    """ 辺 (i, j) の正準ビット位置 (i < j) """
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def edge_slots(n):
    return n * (n - 1) // 2


class OrderedGraph(object):
    """ 入力順に頂点が並んだ交差グラフ

    Args:
        adj (list of int): adj[i] の j ビット目が辺 {i, j} を表す

    Attributes:
        n (int): 頂点数
    """

    __slots__ = ("_adj",)

    def __init__(self, adj):
        adj = tuple(int(mask) for mask in adj)
        n = len(adj)
        if n > MAX_VERTICES:
            raise PreconditionError("%d vertices exceed the %d-vertex cap" % (n, MAX_VERTICES))
        full = (1 << n) - 1
        for i, mask in enumerate(adj):
            if mask & ~full or mask < 0:
                raise BoxmisError("adjacency of vertex %d points outside the graph" % i)
            if mask >> i & 1:
                raise BoxmisError("self-loop at vertex %d" % i)
            for j in range(n):
                if (mask >> j & 1) != (adj[j] >> i & 1):
                    raise BoxmisError("asymmetric adjacency between %d and %d" % (i, j))
        self._adj = adj

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise BoxmisError("Illegal edge (%d, %d) for n=%d" % (i, j, n))
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(adj)

    @classmethod
    def from_edge_mask(cls, n, mask):
        if mask < 0 or mask >> edge_slots(n):
            raise BoxmisError("edge mask %x does not fit n=%d" % (mask, n))
        adj = [0] * n
        bit = 0
        for i in range(n):
            for j in range(i + 1, n):
                if mask >> bit & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit += 1
        return cls(adj)

    @classmethod
    def from_spec(cls, spec):
        """ "n=<n>" の後に頂点ごとの16進隣接マスクが並ぶ形式 """
        assert isinstance(spec, six.text_type)
        lines = [line.strip() for line in spec.split("\n")
                 if line.strip() and not line.startswith("#")]
        if not lines or not lines[0].startswith("n="):
            raise BoxmisError("Illegal graph spec: %s" % spec)
        try:
            n = int(lines[0][2:])
            adj = [int(line, 16) for line in lines[1:]]
        except ValueError:
            raise BoxmisError("Illegal graph spec: %s" % spec)
        if len(adj) != n:
            raise BoxmisError("Illegal graph spec: header says n=%d, found %d rows" % (n, len(adj)))
        return cls(adj)

    @property
    def n(self):
        return len(self._adj)

    @property
    def adj(self):
        return self._adj

    def forward(self, i):
        """ i より後ろの隣接頂点のマスク """
        return self._adj[i] >> (i + 1) << (i + 1)

    def has_edge(self, i, j):
        return bool(self._adj[i] >> j & 1)

    def neighbors(self, i):
        return [j for j in range(self.n) if self._adj[i] >> j & 1]

    def edges(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self._adj[i] >> j & 1]

    def edge_mask(self):
        mask = 0
        for i, j in self.edges():
            mask |= 1 << edge_bit(self.n, i, j)
        return mask

    def degree_sequence(self):
        return [bin(mask).count("1") for mask in self._adj]

    def is_independent(self, vertices_mask):
        for i in range(self.n):
            if vertices_mask >> i & 1 and self._adj[i] & vertices_mask:
                return False
        return True

    def induced(self, vertices):
        vertices = list(vertices)
        position = dict((v, k) for k, v in enumerate(vertices))
        adj = []
        for v in vertices:
            mask = 0
            for u in self.neighbors(v):
                if u in position:
                    mask |= 1 << position[u]
            adj.append(mask)
        return OrderedGraph(adj)

    def disjoint_union(self, other, order=None):
        """ 辺を持たない二つのグラフの和 (入力順は交互配置可)

        Args:
            other (OrderedGraph): もう一方のグラフ
            order (list of int): 0 なら self、1 なら other の次の頂点を置く。
                省略時は self の全頂点の後に other を並べる

        Returns:
            OrderedGraph: 和グラフ
        """
        if order is None:
            order = [0] * self.n + [1] * other.n
        order = list(order)
        if order.count(0) != self.n or order.count(1) != other.n or len(order) != self.n + other.n:
            raise PreconditionError("interleaving does not match the graph sizes")
        positions = ([], [])
        for k, side in enumerate(order):
            positions[side].append(k)
        adj = [0] * len(order)
        for side, graph in enumerate((self, other)):
            where = positions[side]
            for i, j in graph.edges():
                adj[where[i]] |= 1 << where[j]
                adj[where[j]] |= 1 << where[i]
        return OrderedGraph(adj)

    def spec(self):
        return "n=%d\n%s\n" % (self.n, "\n".join("%x" % mask for mask in self._adj)) \
            if self.n else "n=0\n"

    def __eq__(self, other):
        return isinstance(other, OrderedGraph) and self._adj == other._adj

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return 'OrderedGraph.from_spec(%s)' % repr(self.spec())


def greedy_solution(graph):
    """ 入力順の決定的貪欲法が採用する頂点のマスク """
    accepted = 0
    for i in range(graph.n):
        if not graph.adj[i] & accepted:
            accepted |= 1 << i
    return accepted


class OrderedGraphTest(unittest.TestCase):

    def test_edge_bit(self):
        self.assertEqual([edge_bit(3, 0, 1), edge_bit(3, 0, 2), edge_bit(3, 1, 2)], [0, 1, 2])

    def test_mask(self):
        graph = OrderedGraph.from_edges(3, [(0, 1), (0, 2)])
        self.assertEqual(graph.edge_mask(), 3)
        self.assertEqual(OrderedGraph.from_edge_mask(3, 3), graph)

    def test_repr(self):
        graph = OrderedGraph.from_edges(4, [(0, 3), (1, 2)])
        self.assertEqual(eval(repr(graph)), graph)


if __name__ == '__main__':
    unittest.main()
