# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging

from boxmis.adversaries.chain import random_dominating_arrangement
from boxmis.adversaries.instance import VerifiedInstance
from boxmis.adversaries.pack import adaptive_pack_play
from boxmis.policies.policy import run_policy
from boxmis.policies.random_source import RandomSource
from boxmis.policies.spec import PolicySpec
from boxmis.utils.errors import PreconditionError

logger = logging.getLogger(__name__)


def adaptive_game(policy, pack, seed=0):
    """ 適応的敵対者との対戦を最後まで行う

    Args:
        policy (PolicySpec): 方策
        pack (AdaptivePackSpec): 敵対者
        seed (int): 方策の乱数のシード

    Returns:
        GameResult: opt, sol と比
    """
    return adaptive_pack_play(pack, policy, RandomSource(seed))


class SweepReport(object):
    """ 支配順での素朴な貪欲法の最適性の検査結果

    Attributes:
        trials (int): 調べた入力の数
        counterexamples (list of str): 反例の配置 (spec 形式)
    """

    def __init__(self, trials, counterexamples):
        self.trials = trials
        self.counterexamples = counterexamples

    @property
    def passed(self):
        return not self.counterexamples

    def spec(self):
        lines = ["# trials=%d counterexamples=%d\n" % (self.trials, len(self.counterexamples))]
        lines.extend(text + "\n" for text in self.counterexamples)
        return "".join(lines)

    def __repr__(self):
        return '<SweepReport trials=%d passed=%r>' % (self.trials, self.passed)


def dominating_optimality_sweep(trials, n_max, seed=0, d=2):
    """ ランダムな支配順の入力で素朴な貪欲法の解が最大独立集合になるかを調べる """
    if trials < 1 or n_max < 1:
        raise PreconditionError("trials and n_max must be positive")
    root = RandomSource(seed)
    naive = PolicySpec.naive()
    counterexamples = []
    for t in range(trials):
        rng = root.spawn(t)
        arrangement = random_dominating_arrangement(rng.integer(1, n_max + 1), d, rng)
        instance = VerifiedInstance(arrangement)
        sol = run_policy(naive, list(arrangement)).solution_size
        if sol != instance.opt_size:
            logger.warning("trial %d: greedy %d, MIS %d", t, sol, instance.opt_size)
            counterexamples.append(arrangement.spec())
    return SweepReport(trials, counterexamples)
