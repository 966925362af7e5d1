# -*- encoding: utf-8 -*-
from boxmis.geometry.arrangement import Arrangement
from boxmis.expectation.graph import OrderedGraph


def load_arrangements_from_stream(f):
    """
    配置ファイルを解釈し、配置オブジェクトを返す

    Arrangements in one stream are separated by blank lines; each one starts
    with its ``dim=... shape=... order=... n=...`` header.

    Args:
        f (file): 配置ファイルのファイルオブジェクト

    Yields:
        Arrangement: 配置オブジェクト
    """
    buf = ""
    for line in f:
        if line.strip() == "":
            if _has_payload(buf):
                yield Arrangement.from_spec(buf)
            buf = ""
            continue
        buf += line
    if _has_payload(buf):
        yield Arrangement.from_spec(buf)


def load_graphs_from_stream(f):
    """
    グラフファイルを解釈し、順序付きグラフオブジェクトを返す

    Args:
        f (file): グラフファイルのファイルオブジェクト

    Yields:
        OrderedGraph: 順序付きグラフオブジェクト
    """
    buf = ""
    for line in f:
        if line.strip() == "":
            if _has_payload(buf):
                yield OrderedGraph.from_spec(buf)
            buf = ""
            continue
        buf += line
    if _has_payload(buf):
        yield OrderedGraph.from_spec(buf)


def _has_payload(buf):
    return any(line.strip() and not line.startswith("#") for line in buf.split("\n"))
