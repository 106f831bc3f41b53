"""Polarizability, normality and linear presentation of degree-2 monomial sets.

Inputs are .mon text, a path to a .mon file, or ``(n, pairs)`` with 1-based pairs.
Every call returns the same dictionary the command line tool prints as JSON.
"""

import json
import os

from . import _polsyz
from ._polsyz import IncohesiveError, InvariantBreach, ParseError

__all__ = [
    "analyze", "walks", "bowties", "syzygies", "oracle", "pinch", "to_mon",
    "ParseError", "IncohesiveError", "InvariantBreach",
]


def _text(source):
    if isinstance(source, tuple):
        n, pairs = source
        return _polsyz.from_pairs(n, [tuple(p) for p in pairs])
    if isinstance(source, os.PathLike) or (isinstance(source, str) and "\n" not in source and os.path.isfile(source)):
        with open(source) as fh:
            return fh.read()
    return source


def _doc(fn, source, **kw):
    return json.loads(fn(_text(source), **kw))


def analyze(source, max_walk_len=8, degree_bound=8, seed=0):
    return _doc(_polsyz.analyze, source, max_walk_len=max_walk_len, degree_bound=degree_bound, seed=seed)


def walks(source, max_walk_len=8):
    return _doc(_polsyz.walks, source, max_walk_len=max_walk_len)


def bowties(source, max_walk_len=8):
    return _doc(_polsyz.bowties, source, max_walk_len=max_walk_len)


def syzygies(source, module="Z", max_walk_len=8, seed=0):
    return _doc(_polsyz.syzygies, source, module=module, max_walk_len=max_walk_len, seed=seed)


def oracle(source, degree_bound=8):
    return _doc(_polsyz.oracle, source, degree_bound=degree_bound)


def pinch(source, i, j):
    return json.loads(_polsyz.pinch(_text(source), i, j))


def to_mon(source):
    return _polsyz.normalize(_text(source))
