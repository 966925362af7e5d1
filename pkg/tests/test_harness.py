# -*- encoding: utf-8 -*-
import math
import unittest
from fractions import Fraction

import pytest
from parameterized import parameterized

from boxmis import AdaptivePackSpec, GoldenMismatch, MarkingSpec, ORDER, PolicySpec, PreconditionError, \
    ShapeClass
from boxmis.harness import TABLE, ExperimentRecord, ResultTable, adaptive_game, compare_golden, \
    dominating_optimality_sweep, mc_estimate, mc_ratio, reproduce
from boxmis.harness.montecarlo import expected_solution_size
from boxmis.harness.reproduce import load_golden

HALF = Fraction(1, 2)


def _marking(shape="unit", order=ORDER.NON_DOMINATED, levels=2, blocks=10, extra=0):
    return MarkingSpec(2, ShapeClass.parse(shape), order, levels, blocks, extra)


def test_mc_estimate():
    estimate = mc_estimate([1, 2, 3], seed=4)
    assert estimate.mean == 2.0
    assert estimate.stderr == pytest.approx(1 / math.sqrt(3))
    assert estimate.ci95[0] < 2.0 < estimate.ci95[1]
    assert mc_estimate([5]).stderr == 0.0
    with pytest.raises(PreconditionError):
        mc_estimate([])


class MarkingMonteCarloTest(unittest.TestCase):

    @parameterized.expand([
        ("nondominated", ORDER.NON_DOMINATED, 2, 0),
        ("arbitrary", ORDER.ARBITRARY, 3, 0),
        ("with_extra", ORDER.ARBITRARY, 3, 3),
    ])
    def test_greedy_half_matches_exact(self, _, order, levels, extra):
        spec = _marking(order=order, levels=levels, extra=extra)
        result = mc_ratio(PolicySpec.greedy_p(HALF), spec, 2000, seed=17)
        expected = float(expected_solution_size(spec, HALF))
        self.assertEqual(result.opt, spec.opt_size)
        self.assertGreater(result.estimate.stderr, 0)
        self.assertLessEqual(abs(result.estimate.mean - expected), 4 * result.estimate.stderr)

    def test_naive_is_deterministic(self):
        spec = _marking(blocks=6, extra=1)
        result = mc_ratio(PolicySpec.naive(), spec, 50)
        self.assertEqual(result.estimate.mean, 13.0)
        self.assertEqual(result.estimate.stderr, 0.0)
        self.assertAlmostEqual(result.ratio_point, 19 / 13.0)

    def test_same_seed_same_estimate(self):
        spec = _marking(order=ORDER.ARBITRARY, levels=3)
        first = mc_ratio(PolicySpec.greedy_p(HALF), spec, 300, seed=2, batch=64)
        second = mc_ratio(PolicySpec.greedy_p(HALF), spec, 300, seed=2, batch=1000)
        self.assertEqual(first.estimate.mean, second.estimate.mean)

    def test_geometric_path(self):
        spec = _marking(blocks=2)
        result = mc_ratio(PolicySpec.greedy_p(HALF), spec, 300, seed=5, geometric=True)
        self.assertLessEqual(abs(result.estimate.mean - 3.0), 5 * result.estimate.stderr)

    def test_classified_plays_geometry(self):
        spec = _marking(shape="sigma:4", blocks=2)
        result = mc_ratio(PolicySpec.parse("classified:4:2"), spec, 20, seed=1)
        self.assertEqual(result.estimate.trials, 20)
        self.assertLessEqual(result.estimate.mean, spec.opt_size)

    def test_rejects_adaptive_spec(self):
        pack = AdaptivePackSpec(ShapeClass.parse("unit"), ORDER.ARBITRARY, 2)
        with self.assertRaises(PreconditionError):
            mc_ratio(PolicySpec.naive(), pack, 10)
        with self.assertRaises(PreconditionError):
            mc_ratio(PolicySpec.naive(), _marking(), 0)


def test_exact_block_ratios():
    spec = _marking(order=ORDER.ARBITRARY, levels=3)
    assert expected_solution_size(spec, HALF) == Fraction(35, 2)
    assert Fraction(spec.opt_size) / expected_solution_size(spec, HALF) == Fraction(16, 7)
    spec = _marking(levels=2)
    assert Fraction(spec.opt_size) / expected_solution_size(spec, HALF) == 2
    assert Fraction(16, 7) >= Fraction(32, 15) and 2 >= Fraction(12, 7)


@pytest.mark.slow
def test_large_marking_run():
    spec = _marking(order=ORDER.ARBITRARY, levels=3, blocks=100)
    result = mc_ratio(PolicySpec.greedy_p(HALF), spec, 10 ** 5, seed=2024)
    assert result.ratio_point == pytest.approx(16 / 7.0, abs=0.01)
    assert result.ratio_point >= 32 / 15.0


def test_adaptive_game():
    pack = AdaptivePackSpec(ShapeClass.parse("unit"), ORDER.NON_DOMINATED, 2, blocks=3)
    result = adaptive_game(PolicySpec.greedy_p(HALF), pack, seed=8)
    assert result.sol == 3
    assert result.ratio >= 3


def test_dominating_sweep():
    report = dominating_optimality_sweep(1000, 12, seed=3)
    assert report.passed
    assert report.spec() == "# trials=1000 counterexamples=0\n"
    with pytest.raises(PreconditionError):
        dominating_optimality_sweep(0, 5)


def test_record_digest():
    record = ExperimentRecord("bounds --shape unit", "", "lower,upper\n3,3\n", 0.25, "0.1.0")
    config, inputs, outputs = record.digest()
    assert inputs == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    assert len(config) == len(outputs) == 64
    lines = record.spec().splitlines()
    assert lines[0] == "config=bounds --shape unit"
    assert lines[4] == "wall_time=0.250"
    assert ExperimentRecord("bounds --shape unit", "", "x", 9.0, "0.1.0").digest()[0] == config


class ReproduceTest(unittest.TestCase):

    @parameterized.expand([
        (TABLE.NONDOMINATED_BOUNDS,),
        (TABLE.ARBITRARY_BOUNDS,),
        (TABLE.K_MULTIPLIERS,),
        (TABLE.FIXED_N_RATIOS,),
    ])
    def test_matches_golden(self, table_id):
        table = reproduce(table_id)
        compare_golden(table)
        self.assertEqual(ResultTable.from_spec(table_id, table.spec()).rows, table.rows)

    @parameterized.expand([
        ("1", TABLE.NONDOMINATED_BOUNDS),
        ("T2", TABLE.ARBITRARY_BOUNDS),
        ("4", TABLE.FIXED_N_RATIOS),
        ("t5", TABLE.K_MULTIPLIERS),
        ("6", TABLE.N6_RATIO),
        (TABLE.K_MULTIPLIERS, TABLE.K_MULTIPLIERS),
    ])
    def test_table_numbers(self, table_id, name):
        self.assertEqual(TABLE.resolve(table_id), name)
        self.assertEqual(load_golden(table_id).table_id, name)

    def test_reproduce_by_number(self):
        table = reproduce("2")
        self.assertEqual(table.table_id, TABLE.ARBITRARY_BOUNDS)
        compare_golden(table)
        with self.assertRaises(PreconditionError):
            reproduce("3")

    @pytest.mark.slow
    def test_six_vertex_table(self):
        compare_golden(reproduce(TABLE.N6_RATIO, workers=2))

    def test_mismatch_names_cells(self):
        table = reproduce(TABLE.K_MULTIPLIERS)
        table.rows[1][1] = "1.2"
        with self.assertRaises(GoldenMismatch) as caught:
            compare_golden(table)
        self.assertEqual(caught.exception.cells, [(1, "multiplier", "1.10537", "1.2")])

    def test_tolerance(self):
        golden = load_golden(TABLE.FIXED_N_RATIOS)
        table = ResultTable(golden.table_id, golden.header, golden.rows)
        table.rows[2][2] = "1.7777785"
        compare_golden(table)
        table.rows[2][2] = "1.777780"
        with self.assertRaises(GoldenMismatch):
            compare_golden(table)

    def test_rational_cells_compare_by_value(self):
        golden = load_golden(TABLE.NONDOMINATED_BOUNDS)
        table = ResultTable(golden.table_id, golden.header, golden.rows)
        table.rows[1][2] = "3/2"
        compare_golden(table)

    def test_markdown(self):
        table = ResultTable("t", ["a", "b"], [["1", "2"]])
        self.assertEqual(table.render("md"), "| a | b |\n|---|---|\n| 1 | 2 |\n")
        with self.assertRaises(PreconditionError):
            table.render("html")
        with self.assertRaises(PreconditionError):
            reproduce("table-9")
