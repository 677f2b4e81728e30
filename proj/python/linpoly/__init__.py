"""Python access to the linpoly core. Every call returns decoded JSON."""

import json as _json

from . import _core
from ._core import DEFAULT_SEED, LinpolyError, __version__

__all__ = [
    "DEFAULT_SEED",
    "LinpolyError",
    "classify",
    "cycle_types",
    "deduction",
    "factor",
    "group_order",
    "hensel",
    "multiplicity",
    "proposition",
    "reproduce_paper",
    "verify_theorem",
]


def factor(field, poly, seed=DEFAULT_SEED):
    return _json.loads(_core.factor(field, poly, seed))


def group_order(n, q, d=0):
    return int(_core.group_order(n, q, d))


def cycle_types(n, q, d=0):
    return _json.loads(_core.cycle_types(n, q, d))


def deduction(q, n):
    return _json.loads(_core.deduction(q, n))


def multiplicity(field, L, seed=DEFAULT_SEED):
    return _json.loads(_core.multiplicity(field, L, seed))


def classify(field, L, seed=DEFAULT_SEED, count=64, max_k=6):
    return _json.loads(_core.classify(field, L, seed, count, max_k))


def proposition(field, L, seed=DEFAULT_SEED):
    return _json.loads(_core.proposition(field, L, seed))


def verify_theorem(q, n, seed=DEFAULT_SEED):
    return _json.loads(_core.verify_theorem(q, n, seed))


def hensel(field, f, g, alpha="", beta="", N=32, seed=DEFAULT_SEED):
    return _json.loads(_core.hensel(field, f, g, alpha, beta, N, seed))


def reproduce_paper(sections=(), seed=DEFAULT_SEED, meta=False):
    return _json.loads(_core.reproduce_paper(list(sections), seed, meta))
