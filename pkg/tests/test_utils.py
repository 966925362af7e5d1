# -*- encoding: utf-8 -*-
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from parameterized import parameterized

from boxmis import BoxmisError, GoldenMismatch
from boxmis.utils.config import DEFAULTS, default_workers, load_config, resolve
from boxmis.utils.loader import load_graphs_from_stream
from boxmis.utils.rational import ceil_log2, ceil_root, format_rational, to_rational


class RationalTest(unittest.TestCase):

    @parameterized.expand([
        ("2.651", Fraction(2651, 1000)),
        ("5/2", Fraction(5, 2)),
        (" 3 ", Fraction(3)),
        (0.1, Fraction(1, 10)),
        (7, Fraction(7)),
    ])
    def test_parse(self, value, expected):
        self.assertEqual(to_rational(value), expected)

    @parameterized.expand([("abc",), ("1/0",), (True,), (float("nan"),), (None,)])
    def test_parse_errors(self, value):
        with self.assertRaises(BoxmisError):
            to_rational(value)

    @parameterized.expand([
        (Fraction(3), "3"),
        (Fraction(-1, 4), "-0.25"),
        (Fraction(56, 100), "0.56"),
        (Fraction(1, 20), "0.05"),
        (Fraction(12, 7), "12/7"),
    ])
    def test_format(self, value, text):
        self.assertEqual(format_rational(value), text)

    @parameterized.expand([
        (1, 3, 1),
        (Fraction(5, 2), 1, 3),
        (16, 2, 4),
        (17, 2, 5),
        (16, 3, 3),
        (1000, 3, 10),
    ])
    def test_ceil_root(self, value, k, expected):
        self.assertEqual(ceil_root(value, k), expected)

    def test_ceil_log2(self):
        self.assertEqual([ceil_log2(v) for v in (1, 2, Fraction(5, 2), 16, 17)], [0, 1, 2, 4, 5])


@given(st.fractions(min_value=-100, max_value=100, max_denominator=1000))
def test_format_round_trip(value):
    assert to_rational(format_rational(value)) == value


@given(st.fractions(min_value=1, max_value=10 ** 6, max_denominator=100), st.integers(min_value=1, max_value=12))
def test_ceil_root_is_least(value, k):
    c = ceil_root(value, k)
    assert c ** k >= value
    assert c == 1 or (c - 1) ** k < value


def test_config_precedence(tmp_path):
    rcfile = tmp_path / "boxmisrc"
    rcfile.write_text(u"workers = 3\nslack=1/5\ncheckpoint-interval=10\n")
    config = load_config(str(rcfile))
    assert config == {"workers": "3", "slack": "1/5", "checkpoint_interval": "10"}
    env = {"BOXMIS_WORKERS": "6"}
    assert resolve("workers", 2, config, env) == 2
    assert resolve("workers", None, config, env) == 3
    assert resolve("workers", None, {}, env) == 6
    assert resolve("workers", None, {}, {}) == DEFAULTS["workers"]
    assert resolve("slack", None, config, cast=to_rational) == Fraction(1, 5)
    assert resolve("slack", None, {}, cast=to_rational) == Fraction(1, 10)
    assert resolve("checkpoint_interval", None, config) == 10


def test_config_errors(tmp_path):
    with pytest.raises(BoxmisError, match=r"Can't read rcfile"):
        load_config(str(tmp_path / "missing"))
    bad = tmp_path / "bad"
    bad.write_text(u"workers\n")
    with pytest.raises(BoxmisError, match="line 1"):
        load_config(str(bad))
    with pytest.raises(BoxmisError):
        resolve("trials", None, {"trials": "many"})
    with pytest.raises(BoxmisError):
        default_workers({"BOXMIS_WORKERS": "0"})
    assert load_config("") == {}


def test_graph_stream():
    lines = [u"# two graphs\n", u"n=2\n", u"2\n", u"1\n", u"\n", u"\n", u"n=1\n", u"0\n"]
    graphs = list(load_graphs_from_stream(lines))
    assert [g.n for g in graphs] == [2, 1]
    assert graphs[0].edges() == [(0, 1)]


def test_golden_mismatch_message():
    error = GoldenMismatch("k-multipliers", [(1, "multiplier", "1.10537", "1.2")])
    assert str(error).splitlines() == [
        "k-multipliers: 1 cell(s) out of tolerance",
        "  row 1, column multiplier: expected 1.10537, got 1.2",
    ]
