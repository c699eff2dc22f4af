"""Uniform hypergraphs: data model, text/JSON format, and the small
enumeration primitives (copies, isomorphism, colorings) used everywhere else.

Vertices are the integers ``0..n-1``; edges are sorted ``r``-tuples kept in a
sorted tuple, so iteration order is deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, ...]

MAX_CANONICAL_VERTICES = 12

_HEADER = re.compile(r"^\s*r\s*=\s*(-?\d+)\s+n\s*=\s*(-?\d+)\s*$")


class HypergraphFormatError(ValueError):
    """Malformed hypergraph text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on vertices ``0..n-1``.

    Edges may be given in any order and orientation; they are stored sorted
    and deduplicated.
    """

    r: int
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"uniformity must be >= 2, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        normalized = set()
        for edge in self.edges:
            e = tuple(sorted(int(v) for v in edge))
            if len(e) != self.r or len(set(e)) != self.r:
                raise ValueError(f"edge {edge} does not have {self.r} distinct vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {edge} has a vertex outside 0..{self.n - 1}")
            normalized.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def complete(cls, n: int, r: int = 2) -> "Hypergraph":
        return cls(r, n, tuple(combinations(range(n), r)))

    @classmethod
    def empty(cls, n: int, r: int = 2) -> "Hypergraph":
        return cls(r, n, ())

    @property
    def v(self) -> int:
        return self.n

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Each edge as a vertex bitmask, in edge order."""
        return tuple(sum(1 << x for x in edge) for edge in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for edge in self.edges:
            for x in edge:
                deg[x] += 1
        return tuple(deg)

    def isolated_vertices(self) -> list[int]:
        return [x for x, d in enumerate(self.degrees) if d == 0]

    def without_edge(self, edge: Edge) -> "Hypergraph":
        edge = tuple(sorted(edge))
        return Hypergraph(self.r, self.n, tuple(x for x in self.edges if x != edge))

    def with_edge(self, edge: Edge) -> "Hypergraph":
        return Hypergraph(self.r, self.n, self.edges + (tuple(edge),))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex map ``x -> perm[x]`` (a permutation of 0..n-1)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of the vertex set")
        return Hypergraph(self.r, self.n, tuple(tuple(perm[x] for x in edge) for edge in self.edges))

    def __str__(self):
        return serialize(self)


# ---------------------------------------------------------------------------
# text / JSON format


def parse(text: str) -> Hypergraph:
    """Parse the text format (``"r=2 n=3; 0 1; 1 2"``) or its JSON mirror.

    Newlines and semicolons both separate records; lines starting with ``#``
    are comments.
    """
    if text.lstrip().startswith("{"):
        return from_json(text)

    records: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip().startswith("#"):
            continue
        for chunk in line.split(";"):
            if chunk.strip():
                records.append((lineno, chunk.strip()))
    if not records:
        raise HypergraphFormatError("missing header 'r=<int> n=<int>'", 1)

    header_line, header = records[0]
    m = _HEADER.match(header)
    if m is None:
        raise HypergraphFormatError(f"malformed header {header!r}", header_line)
    r, n = int(m.group(1)), int(m.group(2))
    if r < 2:
        raise HypergraphFormatError(f"uniformity must be >= 2, got {r}", header_line)
    if n < 0:
        raise HypergraphFormatError(f"vertex count must be >= 0, got {n}", header_line)

    edges = []
    seen = set()
    for lineno, chunk in records[1:]:
        try:
            verts = [int(tok) for tok in chunk.split()]
        except ValueError:
            raise HypergraphFormatError(f"non-integer vertex in edge {chunk!r}", lineno) from None
        if len(verts) != r:
            raise HypergraphFormatError(f"edge arity {len(verts)} != {r} in {chunk!r}", lineno)
        if len(set(verts)) != r:
            raise HypergraphFormatError(f"repeated vertex in edge {chunk!r}", lineno)
        for x in verts:
            if x < 0 or x >= n:
                raise HypergraphFormatError(f"vertex label {x} out of range 0..{n - 1}", lineno)
        e = tuple(sorted(verts))
        if e in seen:
            raise HypergraphFormatError(f"duplicate edge {chunk!r}", lineno)
        seen.add(e)
        edges.append(e)
    return Hypergraph(r, n, tuple(edges))


def serialize(h: Hypergraph) -> str:
    """Canonical one-line text form; edges in lexicographic order."""
    head = f"r={h.r} n={h.n};"
    if not h.edges:
        return head
    return head + " " + "; ".join(" ".join(map(str, e)) for e in h.edges)


def to_json(h: Hypergraph) -> dict:
    return {"r": h.r, "n": h.n, "edges": [list(e) for e in h.edges]}


def from_json(data) -> Hypergraph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise HypergraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    try:
        r, n, edges = int(data["r"]), int(data["n"]), data.get("edges", [])
    except (KeyError, TypeError, ValueError):
        raise HypergraphFormatError("JSON hypergraph needs integer 'r', 'n' and an 'edges' list") from None
    seen = set()
    for i, edge in enumerate(edges):
        e = tuple(sorted(edge))
        if len(e) != r or len(set(e)) != r:
            raise HypergraphFormatError(f"edge #{i} {list(edge)} does not have {r} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise HypergraphFormatError(f"edge #{i} {list(edge)} has a vertex outside 0..{n - 1}")
        if e in seen:
            raise HypergraphFormatError(f"duplicate edge #{i} {list(edge)}")
        seen.add(e)
    return Hypergraph(r, n, tuple(tuple(e) for e in edges))


# ---------------------------------------------------------------------------
# structure


def _check_vertices(h: Hypergraph, w: Iterable[int]) -> list[int]:
    ws = sorted(set(w))
    if ws and (ws[0] < 0 or ws[-1] >= h.n):
        raise ValueError(f"vertex set {ws} not within 0..{h.n - 1}")
    return ws


def induced(h: Hypergraph, w: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph induced on ``w``, relabeled ``0..|w|-1`` in increasing order."""
    ws = _check_vertices(h, w)
    index = {x: i for i, x in enumerate(ws)}
    edges = tuple(tuple(index[x] for x in e) for e in h.edges if all(x in index for x in e))
    return Hypergraph(h.r, len(ws), edges)


def induced_mask(h: Hypergraph, mask: int) -> Hypergraph:
    return induced(h, [x for x in range(h.n) if mask >> x & 1])


def strip_isolated(h: Hypergraph) -> Hypergraph:
    """Drop isolated vertices, relabeling the rest in order."""
    return induced(h, [x for x, d in enumerate(h.degrees) if d > 0])


def components(h: Hypergraph) -> list[list[int]]:
    """Vertex classes joined by chains of pairwise-intersecting edges."""
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for edge in h.edges:
        root = find(edge[0])
        for x in edge[1:]:
            other = find(x)
            if other != root:
                parent[other] = root
    groups: dict[int, list[int]] = {}
    for x in range(h.n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def is_connected(h: Hypergraph) -> bool:
    """At least one vertex, and a single edge-path component.

    A lone vertex counts as connected; an isolated vertex next to anything
    else does not.
    """
    return h.n >= 1 and len(components(h)) == 1


def is_vertex_cut(h: Hypergraph, s: Iterable[int]) -> bool:
    """Deleting ``s`` leaves fewer than two vertices or a disconnected remainder."""
    removed = set(_check_vertices(h, s))
    rest = [x for x in range(h.n) if x not in removed]
    if len(rest) < 2:
        return True
    return not is_connected(induced(h, rest))


def _rainbow_colorable(h: Hypergraph, k: int) -> bool:
    # k classes, every edge meets each class at most once
    if h.n == 0:
        return True
    if k < h.r:
        return h.e == 0
    if h.r == 2 and k == 2:
        return _is_bipartite(h)
    order = sorted(range(h.n), key=lambda x: -h.degrees[x])
    incident: list[list[Edge]] = [[] for _ in range(h.n)]
    for edge in h.edges:
        for x in edge:
            incident[x].append(edge)
    color = [-1] * h.n

    def place(i, used):
        if i == len(order):
            return True
        x = order[i]
        for c in range(min(k, used + 1)):
            ok = True
            for edge in incident[x]:
                if any(y != x and color[y] == c for y in edge):
                    ok = False
                    break
            if ok:
                color[x] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                color[x] = -1
        return False

    return place(0, 0)


def _is_bipartite(h: Hypergraph) -> bool:
    adj = [[] for _ in range(h.n)]
    for a, b in h.edges:
        adj[a].append(b)
        adj[b].append(a)
    side = [-1] * h.n
    for start in range(h.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_strongly_r_partite(h: Hypergraph) -> bool:
    """Vertices split into at most ``r`` classes, each edge meeting every class at most once."""
    return _rainbow_colorable(h, h.r)


def _properly_colorable(h: Hypergraph, k: int) -> bool:
    # no edge monochromatic
    if h.e == 0:
        return k >= 1 or h.n == 0
    if k == 1:
        return False
    if h.r == 2 and k == 2:
        return _is_bipartite(h)
    order = sorted(range(h.n), key=lambda x: -h.degrees[x])
    incident: list[list[Edge]] = [[] for _ in range(h.n)]
    for edge in h.edges:
        for x in edge:
            incident[x].append(edge)
    color = [-1] * h.n

    def place(i, used):
        if i == len(order):
            return True
        x = order[i]
        for c in range(min(k, used + 1)):
            color[x] = c
            if not any(all(color[y] == c for y in edge) for edge in incident[x]):
                if place(i + 1, max(used, c + 1)):
                    return True
        color[x] = -1
        return False

    return place(0, 0)


def chromatic_number(h: Hypergraph) -> int:
    """Fewest vertex colors leaving no edge monochromatic (0 for the null hypergraph)."""
    if h.n == 0:
        return 0
    k = 1
    while not _properly_colorable(h, k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# isomorphism


def _vertex_invariants(h: Hypergraph) -> list[tuple]:
    deg = h.degrees
    nbr_degs: list[list[int]] = [[] for _ in range(h.n)]
    for edge in h.edges:
        for x in edge:
            nbr_degs[x].extend(deg[y] for y in edge if y != x)
    return [(deg[x], tuple(sorted(nbr_degs[x]))) for x in range(h.n)]


def _transposition_is_automorphism(h: Hypergraph, a: int, b: int) -> bool:
    es = h.edge_set
    for edge in h.edges:
        if (a in edge) != (b in edge):
            swapped = tuple(sorted(b if x == a else a if x == b else x for x in edge))
            if swapped not in es:
                return False
    return True


def canonical_form(h: Hypergraph, max_vertices: int = MAX_CANONICAL_VERTICES) -> tuple:
    """A hashable key equal for two hypergraphs exactly when they are isomorphic.

    Labels are assigned one at a time, restricted to vertices whose degree
    profile matches the sorted invariant order; each step appends the block
    of r-subsets whose largest member is the new label (colex order), and
    the lexicographically greatest block sequence wins.  Vertices related by
    a transposition automorphism are tried once per search node.
    """
    if h.n > max_vertices:
        raise ValueError(f"canonical_form supports at most {max_vertices} vertices, got {h.n}")
    r, n = h.r, h.n
    inv = _vertex_invariants(h)
    slots = sorted(inv)
    es = h.edge_set
    twin = [[False] * n for _ in range(n)]
    for a, b in combinations(range(n), 2):
        if inv[a] == inv[b] and _transposition_is_automorphism(h, a, b):
            twin[a][b] = twin[b][a] = True

    best: list[tuple] | None = None
    labels: list[int] = []  # labels[k] = vertex given label k
    used = [False] * n

    def block(k: int) -> tuple:
        new = labels[k]
        bits = []
        for rest in combinations(range(k), r - 1):
            e = tuple(sorted((new,) + tuple(labels[i] for i in rest)))
            bits.append(1 if e in es else 0)
        return tuple(bits)

    def search(k: int, prefix: list[tuple]):
        nonlocal best
        if k == n:
            if best is None or prefix > best:
                best = prefix
            return
        tried: list[int] = []
        for x in range(n):
            if used[x] or inv[x] != slots[k]:
                continue
            if any(twin[t][x] for t in tried):
                continue
            tried.append(x)
            used[x] = True
            labels.append(x)
            extended = prefix + [block(k)]
            if best is None or extended >= best[: k + 1]:
                search(k + 1, extended)
            labels.pop()
            used[x] = False

    search(0, [])
    return (r, n, tuple(slots), tuple(best))


def are_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    if (a.r, a.n, a.e) != (b.r, b.n, b.e) or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# copies


def _embeddings(pattern: Hypergraph, host: Hypergraph):
    """Yield injective maps (as tuples indexed by pattern vertex) sending every
    pattern edge to a host edge.  ``pattern`` must have no isolated vertices."""
    k = pattern.n
    if k == 0 or k > host.n:
        return
    # order pattern vertices so each one (after the first) touches an earlier one
    incident: list[list[Edge]] = [[] for _ in range(k)]
    for edge in pattern.edges:
        for x in edge:
            incident[x].append(edge)
    order: list[int] = []
    placed = set()
    remaining = set(range(k))
    while remaining:
        frontier = [x for x in remaining if any(y in placed for e in incident[x] for y in e)]
        pool = frontier or list(remaining)
        x = max(pool, key=lambda v: (pattern.degrees[v], -v))
        order.append(x)
        placed.add(x)
        remaining.discard(x)
    position = {x: i for i, x in enumerate(order)}
    # edges to check when order[i] is placed: those whose last-placed vertex is order[i]
    closing: list[list[Edge]] = [[] for _ in range(k)]
    for edge in pattern.edges:
        closing[max(position[x] for x in edge)].append(edge)

    host_es = host.edge_set
    host_nbrs: list[set[int]] = [set() for _ in range(host.n)]
    for edge in host.edges:
        for x in edge:
            host_nbrs[x].update(edge)
    for x in range(host.n):
        host_nbrs[x].discard(x)
    host_deg = host.degrees
    pat_deg = pattern.degrees

    image = [-1] * k
    taken = [False] * host.n

    def extend(i):
        if i == k:
            yield tuple(image)
            return
        x = order[i]
        anchors = [image[y] for e in incident[x] for y in e if y != x and image[y] >= 0]
        if anchors:
            candidates = set(host_nbrs[anchors[0]])
            for a in anchors[1:]:
                candidates &= host_nbrs[a]
            candidates = sorted(candidates)
        else:
            candidates = range(host.n)
        for c in candidates:
            if taken[c] or host_deg[c] < pat_deg[x]:
                continue
            image[x] = c
            ok = True
            for edge in closing[i]:
                if tuple(sorted(image[y] for y in edge)) not in host_es:
                    ok = False
                    break
            if ok:
                taken[c] = True
                yield from extend(i + 1)
                taken[c] = False
            image[x] = -1

    yield from extend(0)


def copies_of(pattern: Hypergraph, host: Hypergraph) -> list[frozenset[Edge]]:
    """All subgraphs of ``host`` isomorphic to ``pattern`` (isolated vertices
    of the pattern ignored), each given by its set of host edges."""
    if pattern.r != host.r:
        raise ValueError(f"uniformity mismatch: pattern r={pattern.r}, host r={host.r}")
    pattern = strip_isolated(pattern)
    if pattern.e == 0:
        return []
    found = set()
    for image in _embeddings(pattern, host):
        found.add(frozenset(tuple(sorted(image[x] for x in edge)) for edge in pattern.edges))
    return sorted(found, key=sorted)


def contains_copy(pattern: Hypergraph, host: Hypergraph) -> bool:
    """Whether ``host`` has a subgraph isomorphic to ``pattern`` (stops at the first)."""
    if pattern.r != host.r:
        raise ValueError(f"uniformity mismatch: pattern r={pattern.r}, host r={host.r}")
    pattern = strip_isolated(pattern)
    if pattern.e == 0:
        return True
    if pattern.e > host.e:
        return False
    return next(_embeddings(pattern, host), None) is not None
