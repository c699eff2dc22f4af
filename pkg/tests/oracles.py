"""Brute-force reference implementations, deliberately naive.

They share nothing with the package beyond the Hypergraph container.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np


def edge_subsets(h):
    """Every subgraph as (edge tuple, covered vertex count); isolated
    vertices only lower the ratios below, so they are never added."""
    for k in range(len(h.edges) + 1):
        for es in combinations(h.edges, k):
            yield es, len({x for e in es for x in e})


def density_m(h) -> Fraction:
    best = Fraction(0)
    for es, v in edge_subsets(h):
        if es:
            best = max(best, Fraction(len(es), v))
    return best


def density_mr(h) -> Fraction:
    best = Fraction(0)
    for es, v in edge_subsets(h):
        if len(es) == 1:
            best = max(best, Fraction(1, h.r))
        elif len(es) >= 2:
            best = max(best, Fraction(len(es) - 1, v - h.r))
    return best


def density_asym(t, f) -> Fraction:
    inv = 1 / density_mr(f)
    best = Fraction(0)
    for es, v in edge_subsets(t):
        if es:
            best = max(best, len(es) / (v - t.r + inv))
    return best


def copies(pattern, host) -> set[frozenset]:
    """Edge sets of all copies, by trying every injective vertex map."""
    used = sorted({x for e in pattern.edges for x in e})
    host_edges = set(host.edges)
    found = set()
    for image in permutations(range(host.n), len(used)):
        phi = dict(zip(used, image))
        mapped = [tuple(sorted(phi[x] for x in e)) for e in pattern.edges]
        if all(e in host_edges for e in mapped):
            found.add(frozenset(mapped))
    return found


def arrows(host, targets) -> bool:
    """Enumerate all s**e colorings (vectorised); True if none avoids every
    target in its color."""
    s, m = len(targets), len(host.edges)
    index = {e: k for k, e in enumerate(host.edges)}
    cols = np.indices((s,) * m).reshape(m, -1).T if m else np.zeros((1, 0), dtype=int)
    good = np.ones(len(cols), dtype=bool)
    for i, f in enumerate(targets):
        for cp in copies(f, host):
            idx = [index[e] for e in cp]
            good &= ~np.all(cols[:, idx] == i, axis=1)
    return not good.any()


def arrows2(host, f0, f1) -> bool:
    """Two-color version over bitmasks; fine up to about 20 edges."""
    m = len(host.edges)
    index = {e: k for k, e in enumerate(host.edges)}
    c = np.arange(1 << m, dtype=np.int64)
    good = np.ones(1 << m, dtype=bool)
    for color, f in ((0, f0), (1, f1)):
        for cp in copies(f, host):
            mask = sum(1 << index[e] for e in cp)
            mono = (c & mask) == (mask if color else 0)
            good &= ~mono
    return not good.any()


def strongly_partite(h) -> bool:
    for labels in product(range(h.r), repeat=h.n):
        if all(len({labels[x] for x in e}) == h.r for e in h.edges):
            return True
    return False


def chromatic(h) -> int:
    if not h.edges:
        return 1
    for k in range(1, h.n + 1):
        for labels in product(range(k), repeat=h.n):
            if all(len({labels[x] for x in e}) > 1 for e in h.edges):
                return k
    return h.n
