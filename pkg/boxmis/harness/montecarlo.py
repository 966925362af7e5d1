# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging
import math

import numpy as np

from boxmis.adversaries.instance import MarkingSpec
from boxmis.adversaries.marking import marking_generate
from boxmis.expectation.blocks import marking_block_expectation
from boxmis.policies.policy import run_policy
from boxmis.policies.random_source import RandomSource
from boxmis.policies.spec import PolicySpec
from boxmis.utils.errors import PreconditionError
from boxmis.utils.rational import to_rational

logger = logging.getLogger(__name__)

Z95 = 1.96
DEFAULT_BATCH = 1000


class McEstimate(object):
    """ モンテカルロ推定値

    Attributes:
        trials (int): 試行回数
        mean (float): 標本平均
        stderr (float): 標本標準偏差 / sqrt(trials)
        ci95 (tuple): 正規近似の 95% 信頼区間
        seed (int): 乱数のシード
    """

    def __init__(self, trials, mean, stderr, seed):
        self.trials = trials
        self.mean = mean
        self.stderr = stderr
        self.ci95 = (mean - Z95 * stderr, mean + Z95 * stderr)
        self.seed = seed

    def __repr__(self):
        return '<McEstimate mean=%.6f stderr=%.6f trials=%d>' % (self.mean, self.stderr, self.trials)


def mc_estimate(samples, seed=0):
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise PreconditionError("at least one sample is needed")
    stderr = 0.0
    if samples.size > 1:
        stderr = float(samples.std(ddof=1) / math.sqrt(samples.size))
    return McEstimate(int(samples.size), float(samples.mean()), stderr, seed)


class McRatio(object):

    def __init__(self, opt, estimate):
        self.opt = opt
        self.estimate = estimate

    @property
    def ratio_point(self):
        if self.estimate.mean == 0:
            return math.inf
        return self.opt / self.estimate.mean

    def __repr__(self):
        return '<McRatio opt=%d ratio=%.6f>' % (self.opt, self.ratio_point)


def _block_sizes(uniforms, p, levels):
    """ (trials, blocks, L, 3) の一様乱数から各試行の解の大きさを求める

    Per level the columns are the two coins and the mark; a level is open
    until an earlier marked box has been accepted.
    """
    accept = uniforms[..., :2] < p
    marks = (uniforms[..., 2] < 0.5).astype(np.intp)
    trials, blocks = uniforms.shape[:2]
    open_ = np.ones((trials, blocks), dtype=bool)
    sizes = np.zeros(trials, dtype=np.int64)
    for j in range(levels):
        taken = accept[:, :, j, :] & open_[..., None]
        sizes += taken.sum(axis=(1, 2))
        if j < levels - 1:
            marked = np.take_along_axis(taken, marks[:, :, j, None], axis=2)[..., 0]
            open_ &= ~marked
    return sizes


def _fast_samples(policy, spec, trials, seed, batch):
    p = 1.0 if policy.kind == PolicySpec.NAIVE else float(policy.p)
    root = RandomSource(seed)
    width = spec.blocks * spec.levels * 3
    samples = np.empty(trials, dtype=np.int64)
    for start in range(0, trials, batch):
        stop = min(trials, start + batch)
        draws = np.stack([root.spawn(t).generator().random(width + spec.extra)
                          for t in range(start, stop)])
        grid = draws[:, :width].reshape(stop - start, spec.blocks, spec.levels, 3)
        samples[start:stop] = _block_sizes(grid, p, spec.levels) + (draws[:, width:] < p).sum(axis=1)
        logger.debug("trials %d..%d done", start, stop)
    return samples


def _geometric_samples(policy, spec, trials, seed):
    root = RandomSource(seed)
    samples = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        trial = root.spawn(t)
        instance = marking_generate(spec, trial.spawn(0))
        samples[t] = run_policy(policy, list(instance.arrangement), trial.spawn(1)).solution_size
    return samples


def mc_ratio(policy, spec, trials, seed=0, geometric=False, batch=DEFAULT_BATCH):
    """ 印付け敵対者に対する方策の解の大きさの期待値と比を推定する

    Greedy(p) and the naive greedy run on the marking structure with numpy
    unless ``geometric`` is set; the classified policy always plays full
    geometric instances. Trial t draws from ``SeedSequence(seed, (t,))``.

    Args:
        policy (PolicySpec): 方策
        spec (MarkingSpec): 敵対者
        trials (int): 試行回数
        seed (int): シード

    Returns:
        McRatio: opt と推定値
    """
    if not isinstance(spec, MarkingSpec):
        raise PreconditionError("mc_ratio plays marking adversaries, got %r" % spec)
    if trials < 1 or batch < 1:
        raise PreconditionError("trials and batch must be positive")
    opt = marking_generate(spec, RandomSource(seed).spawn(0).spawn(0)).opt_size
    if geometric or policy.kind == PolicySpec.CLASSIFIED:
        samples = _geometric_samples(policy, spec, trials, seed)
    else:
        samples = _fast_samples(policy, spec, trials, seed, batch)
    result = McRatio(opt, mc_estimate(samples, seed))
    logger.info("%s vs %s: %r", policy.spec(), spec.spec(), result)
    return result


def expected_solution_size(spec, p):
    """ Greedy(p) の解の大きさの正確な期待値 (B ブロックと末尾のおとり) """
    p = to_rational(p)
    return spec.blocks * marking_block_expectation(spec.levels, p) + spec.extra * p
