# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import hashlib
import json
import logging
import os
import tempfile

from boxmis.utils.errors import CheckpointError
from boxmis.utils.rational import format_rational

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def config_digest(n, grid):
    text = "n=%d;grid=%s" % (n, ",".join(format_rational(p) for p in grid))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def write_checkpoint(path, digest, next_mask, maxima):
    """ 途中経過を原子的に書き出す

    Args:
        path (str): 書き出し先
        digest (str): 設定のダイジェスト
        next_mask (int): 次に調べる正準ビットマスク
        maxima (list): 格子点ごとの (opt, scaled expectation, mask) または None
    """
    payload = {
        "version": FORMAT_VERSION,
        "config": digest,
        "next_mask": next_mask,
        "maxima": [None if entry is None else [entry[0], str(entry[1]), entry[2]] for entry in maxima],
    }
    directory = os.path.dirname(os.path.abspath(path))
    handle, temporary = tempfile.mkstemp(prefix=".boxmis-", dir=directory)
    try:
        with os.fdopen(handle, "w") as f:
            json.dump(payload, f, sort_keys=True)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise
    logger.debug("checkpoint at mask %d written to %s", next_mask, path)


def read_checkpoint(path, digest, columns):
    """ チェックポイントを読み、設定が一致することを確かめる

    Returns:
        tuple: (next_mask, maxima)、ファイルがなければ None
    """
    if not os.path.exists(path):
        return None
    try:
        with open(path) as f:
            payload = json.load(f)
        if payload["version"] != FORMAT_VERSION:
            raise CheckpointError("unsupported checkpoint version %r in %s" % (payload["version"], path))
        if payload["config"] != digest:
            raise CheckpointError("checkpoint %s belongs to a different search" % path)
        next_mask = int(payload["next_mask"])
        maxima = []
        for entry in payload["maxima"]:
            if entry is None:
                maxima.append(None)
            else:
                maxima.append((int(entry[0]), int(entry[1]), int(entry[2])))
    except CheckpointError:
        raise
    except (ValueError, KeyError, TypeError, IndexError) as error:
        raise CheckpointError("corrupt checkpoint %s: %s" % (path, error))
    if len(maxima) != columns or next_mask < 0:
        raise CheckpointError("corrupt checkpoint %s: wrong shape" % path)
    logger.info("resuming from %s at mask %d", path, next_mask)
    return next_mask, maxima
