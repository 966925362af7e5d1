#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import codecs
import logging
import os
import sys
import time

import boxmis
from boxmis.adversaries.chain import dominating_chain
from boxmis.adversaries.instance import AdaptivePackSpec, MarkingSpec
from boxmis.adversaries.marking import marking_generate
from boxmis.expectation.mis import mis_size
from boxmis.expectation.polynomial import ExpectationPolynomial, greedy_p_polynomial, optimize_p
from boxmis.geometry.arrangement import Arrangement, intersection_graph, validate_order, validate_shape
from boxmis.geometry.classes import ORDER, ShapeClass
from boxmis.harness.games import adaptive_game, dominating_optimality_sweep
from boxmis.harness.montecarlo import mc_estimate, mc_ratio
from boxmis.harness.record import ExperimentRecord
from boxmis.harness.reproduce import TABLE, ResultTable, compare_golden, reproduce
from boxmis.policies.policy import run_policy
from boxmis.policies.random_source import RandomSource
from boxmis.policies.spec import PolicySpec
from boxmis.search.report import worst_graph_report
from boxmis.search.search import SearchConfig, default_grid, minimax_search
from boxmis.tuning.bounds import ADVERSARY, BoundQuery, bounds_table
from boxmis.tuning.sigma import choose_k
from boxmis.utils.config import load_config, resolve
from boxmis.utils.errors import BoxmisError, GoldenMismatch
from boxmis.utils.loader import load_graphs_from_stream
from boxmis.utils.rational import format_rational, to_rational

logger = logging.getLogger("boxmis")

KIND_PACK = "pack"
KIND_MARKING = "marking"
KIND_CHAIN = "chain"


def _table(header, rows):
    return ResultTable("", header, rows)


def _slack(args, config):
    flag = to_rational(args.slack) if args.slack else None
    return resolve("slack", flag, config, cast=to_rational)


def _read(path):
    with codecs.open(path, "r", "utf8") as f:
        return f.read()


def _simulate_arrangement(args, config, policy):
    args.inputs = _read(args.input)
    boxes = Arrangement.from_spec(args.inputs).box_list()
    # 一回の実行が既定 (rcfile か --trials で増やす)
    trials = resolve("trials", args.trials, config) if args.trials or "trials" in config else 1
    seed = resolve("seed", args.seed, config)
    root = RandomSource(seed)
    sizes = [run_policy(policy, boxes, root.spawn(t)).solution_size for t in range(trials)]
    if args.per_trial:
        rows = [["%d" % t, "%d" % size] for t, size in enumerate(sizes)]
        with codecs.open(args.per_trial, "w", "utf8") as f:
            f.write(_table(["trial", "solution_size"], rows).spec())
    est = mc_estimate(sizes, seed)
    return _table(["policy", "boxes", "trials", "seed", "mean", "stderr", "min", "max"],
                  [[policy.spec(), "%d" % len(boxes), "%d" % trials, "%d" % seed, "%.6f" % est.mean,
                    "%.6f" % est.stderr, "%d" % min(sizes), "%d" % max(sizes)]])


def cmd_simulate(args, config):
    policy = PolicySpec.parse(args.policy)
    if args.input:
        if args.marking:
            raise BoxmisError("--input and --marking are exclusive")
        return _simulate_arrangement(args, config, policy)
    if not args.marking:
        raise BoxmisError("give an arrangement with --input or play the marking adversary with --marking")
    spec = MarkingSpec(args.dim, ShapeClass.parse(args.shape), args.order, args.levels, args.blocks,
                       args.extra, _slack(args, config))
    trials = resolve("trials", args.trials, config)
    seed = resolve("seed", args.seed, config)
    result = mc_ratio(policy, spec, trials, seed, geometric=args.geometric)
    est = result.estimate
    return _table(["policy", "trials", "seed", "opt", "mean", "stderr", "ci_low", "ci_high", "ratio"],
                  [[policy.spec(), "%d" % est.trials, "%d" % seed, "%d" % result.opt, "%.6f" % est.mean,
                    "%.6f" % est.stderr, "%.6f" % est.ci95[0], "%.6f" % est.ci95[1],
                    "%.6f" % result.ratio_point]])


def _grid_step(text):
    """ "step=0.01" または "0.01" """
    key, _, value = text.rpartition("=")
    if key not in ("", "step"):
        raise BoxmisError("Illegal p grid: %s" % text)
    return to_rational(value)


def cmd_search(args, config):
    points = list(args.p or [])
    if args.fixed_p is not None:
        points.append(args.fixed_p)
    if points:
        grid = sorted(set(to_rational(p) for p in points))
    else:
        grid = default_grid(_grid_step(args.p_grid))
    cfg = SearchConfig(args.n, grid,
                       workers=resolve("workers", args.workers, config),
                       checkpoint_interval=resolve("checkpoint_interval", args.checkpoint_interval, config),
                       checkpoint=args.checkpoint)
    result = minimax_search(cfg)
    if args.report:
        report = worst_graph_report(result, result.best_p, cfg.workers)
        sys.stderr.write(report.spec())
    return ResultTable.from_spec("search", result.spec())


def cmd_optimize_p(args, config):
    if os.path.isfile(args.target):
        args.inputs = _read(args.target)
        graph = next(load_graphs_from_stream(args.inputs.splitlines(True)))
        poly = greedy_p_polynomial(graph)
        opt = args.opt if args.opt is not None else mis_size(graph)[0]
    else:
        if args.opt is None:
            raise BoxmisError("--opt is required with a polynomial")
        poly = ExpectationPolynomial.from_spec(args.target)
        opt = args.opt
    optimum = optimize_p(poly, opt)
    return _table(["polynomial", "opt", "p_star", "max_expectation", "min_ratio", "min_ratio_float", "exact"],
                  [[poly.pretty(), "%d" % opt, format_rational(optimum.p_star),
                    format_rational(optimum.max_expectation), format_rational(optimum.min_ratio),
                    "%.9f" % optimum.min_ratio, str(optimum.exact).lower()]])


def cmd_tune_k(args, config):
    tuning = choose_k(args.dim, to_rational(args.sigma), args.order)
    rows = [["%d" % k, "%d" % bound, "*" if k == tuning.k_chosen else ""] for k, bound in tuning.candidates]
    sys.stderr.write("k_star=%.6f\n" % tuning.k_star)
    return _table(["k", "bound", "chosen"], rows)


def cmd_bounds(args, config):
    shape = ShapeClass.parse(args.shape)
    entry = bounds_table(BoundQuery(shape, args.order, args.adversary, args.dim, args.n, args.sigma))
    return _table(["lower", "upper", "tight"],
                  [[format_rational(entry.lower), format_rational(entry.upper), str(entry.tight).lower()]])


def cmd_adversary(args, config):
    shape = ShapeClass.parse(args.shape)
    slack = _slack(args, config)
    seed = resolve("seed", args.seed, config)
    kind = args.kind or (KIND_MARKING if args.action == "generate" else KIND_PACK)
    if args.action == "play" and kind != KIND_PACK:
        raise BoxmisError("only pack adversaries play adaptively, got %s" % kind)
    if kind == KIND_MARKING:
        spec = MarkingSpec(args.dim, shape, args.order, args.levels, args.blocks, args.extra, slack)
        return marking_generate(spec, RandomSource(seed)).arrangement.spec()
    if kind == KIND_CHAIN:
        return dominating_chain(args.count, args.dim, args.overlapping).spec()
    pack = AdaptivePackSpec(shape, args.order, args.dim, args.pack_count, args.blocks, slack,
                            resolve("patience", args.patience, config))
    result = adaptive_game(PolicySpec.parse(args.policy), pack, seed)
    if args.action == "generate":
        # 方策に対して実際に出力した入力
        return result.instance.arrangement.spec()
    ratio = result.ratio
    return _table(["blocks", "opt", "sol", "ratio"],
                  [["%d" % pack.blocks, "%d" % result.opt_size, "%d" % result.sol,
                    "inf" if ratio == float("inf") else format_rational(ratio)]])


def cmd_verify(args, config):
    args.inputs = _read(args.file)
    arrangement = Arrangement.from_spec(args.inputs)
    shape = validate_shape(arrangement)
    order = validate_order(arrangement)
    graph = intersection_graph(arrangement)
    lines = ["# shape %s: %s" % (arrangement.shape.spec(), "ok" if shape else "box %s" % shape.first_violation),
             "# order %s: %s" % (arrangement.order, "ok" if order else "pair %s" % (order.first_violation,))]
    ok = bool(shape) and bool(order)
    if args.graph:
        expected = next(load_graphs_from_stream(_read(args.graph).splitlines(True)))
        matches = expected == graph
        lines.append("# graph: %s" % ("matches" if matches else "differs"))
        ok = ok and matches
    args.exit_code = 0 if ok else 1
    return "\n".join(lines) + "\n" + graph.spec()


def cmd_reproduce(args, config):
    table = reproduce(TABLE.resolve(args.table), resolve("workers", args.workers, config))
    if args.check:
        compare_golden(table)
    return table


def cmd_sweep(args, config):
    report = dominating_optimality_sweep(args.trials, args.n_max, resolve("seed", args.seed, config), args.dim)
    args.exit_code = 0 if report.passed else 1
    return report.spec()


def _parser():
    parser = argparse.ArgumentParser(
        prog='boxmis',
        description='online independent sets of boxes: simulations, searches and bounds',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-o", "--output", default="-", help="output destination")
    parser.add_argument("--format", choices=("csv", "md"), default="csv", help="table format")
    parser.add_argument("--rcfile", default="", help="key=value settings file")
    parser.add_argument("--record", default="", help="write an experiment record here")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command")
    sub.required = True
    fmt = argparse.ArgumentDefaultsHelpFormatter

    def classes(p, default_shape="unit"):
        p.add_argument("--shape", default=default_shape, help="unit, sigma:<s>, unitvol, cube or rect")
        p.add_argument("--order", default=ORDER.ARBITRARY, choices=ORDER.ALL)
        p.add_argument("-d", "--dim", type=int, default=2)

    p = sub.add_parser("simulate", help="run a policy on an arrangement file or against the marking adversary",
                       formatter_class=fmt)
    classes(p)
    p.add_argument("--policy", default="greedyp:1/2", help="greedy, greedyp:<p> or classified:<sigma>:<k>")
    p.add_argument("--input", default="", help="arrangement file to offer box by box")
    p.add_argument("--per-trial", default="", help="write trial,solution_size rows here (with --input)")
    p.add_argument("--marking", action="store_true", help="Monte Carlo against the marking adversary")
    p.add_argument("-L", "--levels", type=int, default=2)
    p.add_argument("-B", "--blocks", type=int, default=100)
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--slack")
    p.add_argument("--geometric", action="store_true", help="play full geometric instances")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search", help="minimax search over ordered graphs", formatter_class=fmt)
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("--p-grid", default="step=0.01", help="evenly spaced grid over [0, 1]")
    p.add_argument("--fixed-p", help="search a single p")
    p.add_argument("--p", action="append", help="explicit grid point (repeatable)")
    p.add_argument("--out", default="", help="write the result CSV here")
    p.add_argument("--workers", type=int)
    p.add_argument("--checkpoint", default="")
    p.add_argument("--checkpoint-interval", type=int)
    p.add_argument("--report", action="store_true", help="refine the best grid point")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("optimize-p", help="maximise an expectation polynomial", formatter_class=fmt)
    p.add_argument("target", help='graph file or coefficients such as "0 5 -7 3"')
    p.add_argument("--opt", type=int)
    p.set_defaults(func=cmd_optimize_p)

    p = sub.add_parser("tune-k", help="number of size classes for sigma-bounded cubes", formatter_class=fmt)
    p.add_argument("-d", "--dim", type=int, required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--order", default=ORDER.ARBITRARY, choices=(ORDER.NON_DOMINATED, ORDER.ARBITRARY))
    p.set_defaults(func=cmd_tune_k)

    p = sub.add_parser("bounds", help="competitive ratio table entry", formatter_class=fmt)
    classes(p)
    p.add_argument("--adversary", default=ADVERSARY.ADAPTIVE, choices=ADVERSARY.ALL)
    p.add_argument("--sigma")
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("adversary", help="generate an adversarial arrangement or play an adaptive game",
                       formatter_class=fmt)
    p.add_argument("action", choices=("generate", "play"))
    p.add_argument("--kind", choices=(KIND_PACK, KIND_MARKING, KIND_CHAIN),
                   help="generate defaults to marking, play to pack")
    p.add_argument("-n", "--count", type=int, default=8, help="chain length")
    p.add_argument("--overlapping", action="store_true", help="consecutive chain boxes meet")
    p.add_argument("--out", default="", help="write the arrangement or table here")
    classes(p)
    p.add_argument("--policy", default="greedy")
    p.add_argument("-L", "--levels", type=int, default=2)
    p.add_argument("-B", "--blocks", type=int, default=1)
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("-m", "--pack-count", type=int)
    p.add_argument("--patience", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--slack")
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("verify-arrangement", help="validate an arrangement file", formatter_class=fmt)
    p.add_argument("file")
    p.add_argument("--graph", default="", help="expected intersection graph file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce-table", help="recompute a table and diff it against its golden file",
                       formatter_class=fmt)
    p.add_argument("table", choices=TABLE.CHOICES, help="1, 2, 4, 5, 6 or a table name")
    p.add_argument("--workers", type=int)
    p.add_argument("--no-check", dest="check", action="store_false")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("sweep", help="naive greedy against exact MIS in dominating order", formatter_class=fmt)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("-d", "--dim", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv=None, outf=None):
    """ サブコマンドを実行し、終了コードを返す """
    args = _parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    args.exit_code = 0
    args.inputs = ""
    started = time.time()
    try:
        config = load_config(args.rcfile)
        output = args.func(args, config)
    except GoldenMismatch as e:
        sys.stderr.write(u"%s\n" % e)
        return 1
    except BoxmisError as e:
        sys.stderr.write(u"boxmis %s: %s\n" % (args.command, e))
        return 2
    text = output if isinstance(output, str) else output.render(args.format)
    destination = getattr(args, "out", "") or args.output
    if outf is not None and destination == "-":
        outf.write(text)
    elif destination == "-":
        sys.stdout.write(text)
    else:
        with codecs.open(destination, "w", "utf8") as f:
            f.write(text)
    if args.record:
        command = " ".join(argv if argv is not None else sys.argv[1:])
        record = ExperimentRecord(command, args.inputs, text, time.time() - started, boxmis.__version__)
        with codecs.open(args.record, "w", "utf8") as f:
            f.write(record.spec())
    return args.exit_code


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
