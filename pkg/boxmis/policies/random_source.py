# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import numpy as np

from boxmis.utils.errors import PreconditionError

SEED_LIMIT = 2 ** 64


class RandomSource(object):
    """ シード付きの乱数列

    Wraps a PCG64 generator and counts the draws taken from it.

    Args:
        seed (int): 64ビット符号なし整数
        spawn_key (tuple): 試行ごとの派生キー

    Attributes:
        position (int): これまでに消費した乱数の数
    """

    def __init__(self, seed=0, spawn_key=()):
        if not 0 <= seed < SEED_LIMIT:
            raise PreconditionError("seed must be a 64-bit unsigned integer, got %r" % seed)
        self.seed = int(seed)
        self.spawn_key = tuple(spawn_key)
        self._generator = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)))
        self.position = 0

    def spawn(self, trial):
        """ 試行 trial 用の独立な乱数列 (バッチの切り方に依存しない) """
        return RandomSource(self.seed, self.spawn_key + (int(trial),))

    def uniform(self):
        self.position += 1
        return float(self._generator.random())

    def integer(self, low, high):
        """ [low, high) の一様な整数 """
        self.position += 1
        return int(self._generator.integers(low, high))

    def generator(self):
        """ ベクトル化した試行用の numpy Generator (position は数えない) """
        return self._generator

    def __repr__(self):
        return 'RandomSource(%d, spawn_key=%r)' % (self.seed, self.spawn_key)
