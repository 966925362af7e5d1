# -*- encoding: utf-8 -*-
from __future__ import absolute_import
from __future__ import unicode_literals

import codecs
import unittest

import six

from boxmis.expectation.graph import MAX_VERTICES, OrderedGraph
from boxmis.geometry.box import Box, dominates, intersects
from boxmis.geometry.classes import ORDER, ShapeClass, ValidationReport
from boxmis.utils.errors import BoxmisError, DimensionError, PreconditionError
from boxmis.utils.rational import ceil_root


class Arrangement(object):
    """
    順序付きの箱の列と、主張する形状クラス・順序クラスを保持するオブジェクト

    The claimed classes are not enforced here; ``validate_shape`` and
    ``validate_order`` report whether they hold.

    Args:
        boxes (list of Box): 入力順の箱
        shape (ShapeClass): 主張する形状クラス
        order (str): 主張する順序クラス (``ORDER``)
        comment (str): ``#`` で始まるコメント行
    """

    def __init__(self, boxes, shape=None, order=ORDER.ARBITRARY, comment=""):
        self._boxes = tuple(boxes)
        self.shape = shape if shape is not None else ShapeClass(ShapeClass.ARBITRARY_RECT)
        self.order = ORDER.parse(order)
        self.comment = comment
        dims = set(box.dim for box in self._boxes)
        if len(dims) > 1:
            raise DimensionError("boxes of dimensions %s in one arrangement" % sorted(dims))

    @classmethod
    def from_spec(cls, spec):
        assert isinstance(spec, six.text_type)
        header = None
        comment = ""
        boxes = []
        for line in spec.split("\n"):
            if line.strip() == "":
                continue
            if line.startswith("#"):
                comment += line + "\n"
                continue
            if header is None:
                header = _parse_header(line)
                continue
            box = Box.from_spec(line)
            if box.dim != header["dim"]:
                raise BoxmisError("Illegal box line (dim=%d expected): %s" % (header["dim"], line))
            boxes.append(box)
        if header is None:
            raise BoxmisError("Illegal arrangement spec: missing header")
        if len(boxes) != header["n"]:
            raise BoxmisError("Illegal arrangement spec: header says n=%d, found %d boxes"
                              % (header["n"], len(boxes)))
        return cls(boxes, header["shape"], header["order"], comment)

    @classmethod
    def from_file(cls, path):
        with codecs.open(path, "r", "utf8") as f:
            return cls.from_spec(f.read())

    @property
    def dim(self):
        if not self._boxes:
            return 0
        return self._boxes[0].dim

    def box_list(self):
        return list(self._boxes)

    def with_classes(self, shape=None, order=None):
        return Arrangement(self._boxes,
                           self.shape if shape is None else shape,
                           self.order if order is None else order,
                           self.comment)

    def translate(self, offset):
        return Arrangement([box.translate(offset) for box in self._boxes],
                           self.shape, self.order, self.comment)

    def spec(self):
        lines = [self.comment.rstrip("\n")] if self.comment else []
        lines.append("dim=%d shape=%s order=%s n=%d"
                     % (self.dim, self.shape.spec(), self.order, len(self._boxes)))
        lines.extend(box.spec() for box in self._boxes)
        return "\n".join(lines) + "\n"

    def __getitem__(self, index):
        return self._boxes[index]

    def __len__(self):
        return len(self._boxes)

    def __iter__(self):
        return iter(self._boxes)

    def __eq__(self, other):
        return (isinstance(other, Arrangement) and self._boxes == other._boxes
                and self.shape == other.shape and self.order == other.order)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'Arrangement.from_spec(%s)' % repr(self.spec())


def _parse_header(line):
    fields = {}
    for token in line.split():
        if "=" not in token:
            raise BoxmisError("Illegal arrangement header: %s" % line)
        key, value = token.split("=", 1)
        fields[key] = value
    try:
        dim = int(fields["dim"])
        n = int(fields["n"])
        shape = ShapeClass.parse(fields["shape"])
        order = ORDER.parse(fields["order"])
    except (KeyError, ValueError):
        raise BoxmisError("Illegal arrangement header: %s" % line)
    if dim < 1 or n < 0:
        raise BoxmisError("Illegal arrangement header: %s" % line)
    return {"dim": dim, "n": n, "shape": shape, "order": order}


def validate_order(arr):
    """ 主張する順序クラスを満たすか調べる

    Returns:
        ValidationReport: 違反は j の昇順、次に i の昇順で最初の (i, j) (i < j)
    """
    boxes = arr.box_list()
    if arr.order == ORDER.ARBITRARY:
        return ValidationReport(True)
    for j in range(1, len(boxes)):
        for i in range(j):
            if arr.order == ORDER.DOMINATING:
                bad = not dominates(boxes[j], boxes[i])
            else:
                bad = dominates(boxes[i], boxes[j])
            if bad:
                return ValidationReport(False, (i, j))
    return ValidationReport(True)


def validate_shape(arr):
    for index, box in enumerate(arr):
        if not arr.shape.admits(box):
            return ValidationReport(False, index)
    return ValidationReport(True)


def intersection_graph(arr):
    """ 入力順の交差グラフ

    Args:
        arr (Arrangement or list of Box): 配置

    Returns:
        OrderedGraph: vertex i is the i-th box
    """
    boxes = list(arr)
    if not boxes:
        raise PreconditionError("intersection graph of an empty arrangement")
    if len(boxes) > MAX_VERTICES:
        raise PreconditionError("%d boxes exceed the %d-vertex cap" % (len(boxes), MAX_VERTICES))
    adj = [0] * len(boxes)
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if intersects(boxes[i], boxes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return OrderedGraph(adj)


def arrangement_matches(arr, graph):
    if len(arr) == 0:
        raise PreconditionError("empty arrangement")
    if len(arr) != graph.n:
        raise PreconditionError("arrangement has %d boxes, graph has %d vertices" % (len(arr), graph.n))
    return intersection_graph(arr) == graph


def connected_components(boxes):
    """ 交差グラフの連結成分 (頂点数の上限なし)

    Sweeps along axis 0 so that only boxes whose axis-0 intervals overlap are
    compared.

    Returns:
        list of list of int: 各成分の入力順インデックス (昇順)
    """
    boxes = list(boxes)
    parent = list(range(len(boxes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    events = sorted(range(len(boxes)), key=lambda i: boxes[i].lower[0])
    active = []
    for i in events:
        start = boxes[i].lower[0]
        active = [k for k in active if boxes[k].upper[0] >= start]
        for k in active:
            if intersects(boxes[i], boxes[k]):
                ri, rk = find(i), find(k)
                if ri != rk:
                    parent[max(ri, rk)] = min(ri, rk)
        active.append(i)
    groups = {}
    for i in range(len(boxes)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def unit_grid_maximum(d, sigma=1, order=ORDER.ARBITRARY):
    """ 一つの箱に交差させられる互いに素な単位立方体の最大数

    2^d and 2^d - 1 for unit targets; (c+1)^d and (c+1)^d - c^d with c = ceil(sigma)
    for a target of side sigma.
    """
    if d < 1:
        raise PreconditionError("dimension must be positive, got %d" % d)
    c = ceil_root(sigma, 1)
    if order == ORDER.NON_DOMINATED:
        return (c + 1) ** d - c ** d
    return (c + 1) ** d


class ArrangementTest(unittest.TestCase):

    def setUp(self):
        self.spec = ("dim=2 shape=unit order=nondominated n=3\n"
                     "1.5 2.5 1.5 2.5\n"
                     "2.3 3.3 0.7 1.7\n"
                     "0.7 1.7 2.3 3.3\n")

    def test_spec(self):
        arr = Arrangement.from_spec(self.spec)
        self.assertEqual(len(arr), 3)
        self.assertEqual(arr.spec(), self.spec)

    def test_repr(self):
        arr = Arrangement.from_spec(self.spec)
        self.assertEqual(eval(repr(arr)), arr)

    def test_graph(self):
        graph = intersection_graph(Arrangement.from_spec(self.spec))
        self.assertEqual(sorted(graph.edges()), [(0, 1), (0, 2)])


if __name__ == '__main__':
    unittest.main()
