"""Named small hypergraphs, so common inputs need no files.

Names: ``K4`` (graph K_4), ``K4_3`` (3-uniform K_4^(3)), ``C3``..``C6``
(cycles), ``P2``..``P5`` (paths on that many vertices) and ``K6-e``
(K_6 with one edge removed).
"""

from __future__ import annotations

import os

from .hypercore import Hypergraph, parse


def _cycle(k: int) -> Hypergraph:
    return Hypergraph(2, k, tuple((i, (i + 1) % k) for i in range(k)))


def _path(k: int) -> Hypergraph:
    return Hypergraph(2, k, tuple((i, i + 1) for i in range(k - 1)))


def _build() -> dict[str, Hypergraph]:
    cat = {}
    for m in range(2, 9):
        cat[f"K{m}"] = Hypergraph.complete(m, 2)
    for m in range(3, 9):
        cat[f"K{m}_3"] = Hypergraph.complete(m, 3)
    for k in range(3, 7):
        cat[f"C{k}"] = _cycle(k)
    for k in range(2, 6):
        cat[f"P{k}"] = _path(k)
    cat["K6-e"] = Hypergraph.complete(6).without_edge((4, 5))
    return cat


CATALOG: dict[str, Hypergraph] = _build()
ALIASES = {"K6_minus_edge": "K6-e", "K6minus": "K6-e"}


def lookup(name: str) -> Hypergraph | None:
    name = ALIASES.get(name, name)
    if name in CATALOG:
        return CATALOG[name]
    # K<m>_2 is the same as K<m>
    if name.endswith("_2") and name[:-2] in CATALOG:
        return CATALOG[name[:-2]]
    return None


def resolve(token: str) -> Hypergraph:
    """A catalog name, a file path, or inline text such as ``"r=2 n=3; 0 1"``."""
    token = token.strip()
    h = lookup(token)
    if h is not None:
        return h
    if os.path.isfile(token):
        with open(token, encoding="utf-8") as fh:
            return parse(fh.read())
    if token.lstrip().startswith(("r=", "r =", "{")):
        return parse(token)
    raise ValueError(f"{token!r} is neither a catalog name nor a readable file (see the 'catalog' subcommand)")


def resolve_list(text: str) -> list[Hypergraph]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("expected a comma-separated list of hypergraphs")
    return [resolve(p) for p in parts]
