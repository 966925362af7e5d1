# -*- encoding: utf-8 -*-
from __future__ import absolute_import

import logging
import os

import six

from boxmis.utils.errors import BoxmisError

logger = logging.getLogger(__name__)

WORKERS_ENV = "BOXMIS_WORKERS"

DEFAULTS = {
    "workers": 1,
    "trials": 100000,
    "checkpoint_interval": 4096,
    "slack": "1/10",
    "patience": 64,
    "seed": 0,
}


def load_config(rcfile=""):
    """ key=value 形式の設定ファイルを読む

    Args:
        rcfile (str): 設定ファイルへのパス (空文字列なら読まない)

    Returns:
        dict: 設定値 (文字列)
    """
    config = {}
    if not rcfile:
        return config
    if not os.path.isfile(os.path.expanduser(rcfile)):
        raise BoxmisError("Can't read rcfile (%s)!" % rcfile)
    with open(os.path.expanduser(rcfile)) as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise BoxmisError("Illegal rcfile line %d: %s" % (number, line))
            key, value = line.split("=", 1)
            config[key.strip().replace("-", "_")] = value.strip()
    logger.debug("read %d setting(s) from %s", len(config), rcfile)
    return config


def default_workers(environ=None):
    environ = os.environ if environ is None else environ
    value = environ.get(WORKERS_ENV, "")
    if not value:
        return DEFAULTS["workers"]
    try:
        workers = int(value)
    except ValueError:
        raise BoxmisError("Illegal %s: %s" % (WORKERS_ENV, value))
    if workers < 1:
        raise BoxmisError("Illegal %s: %s" % (WORKERS_ENV, value))
    return workers


def resolve(key, flag=None, config=None, environ=None, cast=int):
    """ flag > rcfile > 環境変数 > 既定値 の順で設定値を決める """
    if flag is not None:
        return flag
    config = config or {}
    if key in config:
        try:
            return cast(config[key])
        except (TypeError, ValueError):
            raise BoxmisError("Illegal value for %s: %s" % (key, config[key]))
    if key == "workers":
        return default_workers(environ)
    value = DEFAULTS[key]
    if isinstance(value, six.string_types) and cast is not str:
        return cast(value)
    return value
