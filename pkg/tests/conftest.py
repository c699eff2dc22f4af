import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ramseyclass.hypercore import Hypergraph  # noqa: E402


def random_hypergraph(rng: random.Random, r: int, n: int, p: float) -> Hypergraph:
    from itertools import combinations

    return Hypergraph(r, n, tuple(e for e in combinations(range(n), r) if rng.random() < p))


def atlas_graphs(max_nodes=7, max_edges=None):
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() > max_nodes:
            continue
        if max_edges is not None and g.number_of_edges() > max_edges:
            continue
        out.append(Hypergraph(2, g.number_of_nodes(), tuple(g.edges())))
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)
