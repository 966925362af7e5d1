# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging
from fractions import Fraction

import pkg_resources
import six

from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.search.report import fixed_n_row
from boxmis.search.search import SearchConfig, minimax_search
from boxmis.tuning.bounds import ADVERSARY, BoundQuery, bounds_table
from boxmis.tuning.sigma import k_multiplier
from boxmis.utils.errors import BoxmisError, GoldenMismatch, PreconditionError
from boxmis.utils.rational import format_rational, to_rational

logger = logging.getLogger(__name__)


class TABLE(object):
    NONDOMINATED_BOUNDS = "nondominated-bounds"
    ARBITRARY_BOUNDS = "arbitrary-bounds"
    FIXED_N_RATIOS = "fixed-n-ratios"
    K_MULTIPLIERS = "k-multipliers"
    N6_RATIO = "n6-ratio"

    ALL = (NONDOMINATED_BOUNDS, ARBITRARY_BOUNDS, FIXED_N_RATIOS, K_MULTIPLIERS, N6_RATIO)

    # 表番号 (T1 などの形でもよい)
    NUMBERS = {"1": NONDOMINATED_BOUNDS, "2": ARBITRARY_BOUNDS, "4": FIXED_N_RATIOS,
               "5": K_MULTIPLIERS, "6": N6_RATIO}
    CHOICES = tuple(sorted(NUMBERS)) + tuple("T" + number for number in sorted(NUMBERS)) + ALL

    @classmethod
    def resolve(cls, table_id):
        number = table_id[1:] if table_id[:1] in ("T", "t") else table_id
        return cls.NUMBERS.get(number, table_id)


# (列, 許容誤差, 相対誤差かどうか); 列にないものは完全一致
TOLERANCES = {
    TABLE.FIXED_N_RATIOS: {"ratio": (1e-6, False)},
    TABLE.N6_RATIO: {"ratio": (1e-6, False)},
    TABLE.K_MULTIPLIERS: {"multiplier": (1e-5, True)},
}

BOUND_SHAPES = ("unit", "sigma:5/2", "unitvol", "cube", "rect")
BOUND_D = 2
BOUND_N = 10
K_DIMENSIONS = (1, 2, 3, 4, 10, 100, 1000)
FIXED_N = (1, 2, 3, 4, 5)


class ResultTable(object):
    """ 再現した表

    Attributes:
        table_id (str): 表の名前
        header (list of str): 列名
        rows (list of list of str): 書式化済みのセル
    """

    def __init__(self, table_id, header, rows):
        self.table_id = table_id
        self.header = list(header)
        self.rows = [list(row) for row in rows]

    @classmethod
    def from_spec(cls, table_id, spec):
        assert isinstance(spec, six.text_type)
        lines = [line for line in spec.split("\n") if line.strip() and not line.startswith("#")]
        if not lines:
            raise BoxmisError("Illegal table spec: empty")
        return cls(table_id, lines[0].split(","), [line.split(",") for line in lines[1:]])

    def spec(self):
        return "".join(",".join(row) + "\n" for row in [self.header] + self.rows)

    def markdown(self):
        lines = ["| " + " | ".join(self.header) + " |",
                 "|" + "|".join("---" for _ in self.header) + "|"]
        lines.extend("| " + " | ".join(row) + " |" for row in self.rows)
        return "\n".join(lines) + "\n"

    def render(self, fmt="csv"):
        if fmt == "md":
            return self.markdown()
        if fmt != "csv":
            raise PreconditionError("unknown format %r" % fmt)
        return self.spec()

    def __repr__(self):
        return '<ResultTable %s rows=%d>' % (self.table_id, len(self.rows))


def _bounds_rows(order):
    rows = []
    for tag in BOUND_SHAPES:
        shape = ShapeClass.parse(tag)
        n = BOUND_N if shape.kind not in (ShapeClass.UNIT_CUBE, ShapeClass.SIGMA_BOUNDED) else None
        adaptive = bounds_table(BoundQuery(shape, order, ADVERSARY.ADAPTIVE, BOUND_D, n))
        oblivious = bounds_table(BoundQuery(shape, order, ADVERSARY.OBLIVIOUS, BOUND_D, n))
        rows.append([tag, format_rational(adaptive.upper),
                     format_rational(oblivious.lower), format_rational(oblivious.upper)])
    return rows


def reproduce(table_id, workers=1):
    """ 表を計算しなおす

    Args:
        table_id (str): ``TABLE.ALL`` のいずれか、または表番号
        workers (int): 全探索のワーカー数

    Returns:
        ResultTable: 計算した表
    """
    table_id = TABLE.resolve(table_id)
    if table_id == TABLE.NONDOMINATED_BOUNDS:
        return ResultTable(table_id, ["shape", "adaptive", "oblivious_lower", "oblivious_upper"],
                           _bounds_rows(ORDER.NON_DOMINATED))
    if table_id == TABLE.ARBITRARY_BOUNDS:
        return ResultTable(table_id, ["shape", "adaptive", "oblivious_lower", "oblivious_upper"],
                           _bounds_rows(ORDER.ARBITRARY))
    if table_id == TABLE.FIXED_N_RATIOS:
        rows = []
        for n in FIXED_N:
            best_p, ratio = fixed_n_row(n, workers=workers)
            rows.append(["%d" % n, format_rational(best_p), "%.6f" % ratio])
        return ResultTable(table_id, ["n", "p", "ratio"], rows)
    if table_id == TABLE.K_MULTIPLIERS:
        return ResultTable(table_id, ["d", "multiplier"],
                           [["%d" % d, "%.6g" % k_multiplier(d)] for d in K_DIMENSIONS])
    if table_id == TABLE.N6_RATIO:
        p = Fraction(1, 2)
        entry = minimax_search(SearchConfig(6, [p], workers=workers)).entry(p)
        return ResultTable(table_id, ["n", "p", "ratio"],
                           [["6", format_rational(p), "%.6f" % entry.ratio]])
    raise PreconditionError("unknown table %r (expected one of %s)" % (table_id, ", ".join(TABLE.ALL)))


def load_golden(table_id):
    table_id = TABLE.resolve(table_id)
    data = pkg_resources.resource_string("boxmis", "data/golden/%s.csv" % table_id)
    return ResultTable.from_spec(table_id, data.decode("utf-8"))


def _cell_matches(expected, got, tolerance):
    if tolerance is None:
        if expected == got:
            return True
        try:
            return to_rational(expected) == to_rational(got)
        except BoxmisError:
            return False
    limit, relative = tolerance
    try:
        want, have = float(expected), float(got)
    except ValueError:
        return False
    if relative:
        return abs(have - want) <= limit * abs(want)
    return abs(have - want) <= limit


def compare_golden(table, golden=None):
    """ 表を保存済みの正解と比べ、外れたセルがあれば GoldenMismatch を送出する """
    golden = load_golden(table.table_id) if golden is None else golden
    if golden.header != table.header or len(golden.rows) != len(table.rows):
        raise GoldenMismatch(table.table_id, [("*", "*", ",".join(golden.header), ",".join(table.header))])
    tolerances = TOLERANCES.get(table.table_id, {})
    cells = []
    for r, (want_row, got_row) in enumerate(zip(golden.rows, table.rows)):
        for column, want, got in zip(table.header, want_row, got_row):
            if not _cell_matches(want, got, tolerances.get(column)):
                cells.append((r, column, want, got))
    if cells:
        raise GoldenMismatch(table.table_id, cells)
    logger.info("%s matches its golden table", table.table_id)
