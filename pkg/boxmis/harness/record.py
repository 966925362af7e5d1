# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import hashlib


def _sha256(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class ExperimentRecord(object):
    """ 実験の出所の記録

    Args:
        config (str): 正規化した設定 (サブコマンドと引数)
        inputs (str): 入力 (配置やグラフ) のテキスト
        outputs (str): 出力 CSV
        wall_time (float): 経過秒数
        version (str): boxmis の版
    """

    def __init__(self, config, inputs, outputs, wall_time, version):
        self.config = config
        self.inputs = inputs
        self.outputs = outputs
        self.wall_time = wall_time
        self.version = version

    def digest(self):
        """ (設定, 入力, 出力) の sha256 """
        return _sha256(self.config), _sha256(self.inputs), _sha256(self.outputs)

    def spec(self):
        config, inputs, outputs = self.digest()
        return "".join([
            "config=%s\n" % self.config,
            "config_digest=%s\n" % config,
            "inputs_digest=%s\n" % inputs,
            "outputs_digest=%s\n" % outputs,
            "wall_time=%.3f\n" % self.wall_time,
            "version=%s\n" % self.version,
        ])

    def __repr__(self):
        return '<ExperimentRecord %s>' % self.digest()[0][:12]
