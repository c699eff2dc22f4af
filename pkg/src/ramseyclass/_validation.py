"""Argument checks shared by the estimators and the command line."""

from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np

from .hypercore import Hypergraph, from_json, parse


def check_probability(p) -> float:
    if isinstance(p, bool) or not isinstance(p, (numbers.Real, Fraction)):
        raise TypeError(f"probability must be a real number, got {type(p).__name__}")
    if not 0 <= p <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    return float(p)


def check_n_values(n_values, minimum: int = 1) -> list[int]:
    """Distinct positive integers in increasing order."""
    arr = np.asarray(n_values)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence of vertex counts, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.mod(arr, 1) == 0):
            raise ValueError("vertex counts must be integers")
    ns = sorted({int(x) for x in arr})
    if len(ns) < minimum:
        raise ValueError(f"need at least {minimum} distinct vertex counts, got {len(ns)}")
    if ns and ns[0] < 1:
        raise ValueError("vertex counts must be positive")
    return ns


def check_hypergraph(h) -> Hypergraph:
    """Accept a Hypergraph, its text form, or its JSON mirror (dict)."""
    if isinstance(h, Hypergraph):
        return h
    if isinstance(h, str):
        return parse(h)
    if isinstance(h, dict):
        return from_json(h)
    raise TypeError(f"cannot interpret {type(h).__name__} as a hypergraph")


def check_same_uniformity(hs) -> int:
    rs = {h.r for h in hs}
    if len(rs) != 1:
        raise ValueError(f"expected one uniformity, got {sorted(rs)}")
    return rs.pop()
