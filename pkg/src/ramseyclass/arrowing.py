"""Decide G -> (F_1, ..., F_s) by backtracking over edge colorings.

Colors are 0-based: color ``i`` is the color in which a copy of
``targets[i]`` is forbidden.  An s-edge-coloring is any total map from host
edges to ``range(s)``; color classes may be empty.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .hypercore import Edge, Hypergraph, canonical_form, copies_of, strip_isolated

DEFAULT_BUDGET = 1_000_000


class Outcome(enum.Enum):
    ARROWS = "ARROWS"
    NOT_ARROWS = "NOT ARROWS"
    UNKNOWN = "UNKNOWN"


class RamseySearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class ArrowInstance:
    """A host and a nonempty tuple of targets of the same uniformity.

    Isolated vertices of the targets are dropped on construction.
    """

    host: Hypergraph
    targets: tuple[Hypergraph, ...]

    def __post_init__(self):
        targets = tuple(self.targets)
        if not targets:
            raise ValueError("an arrowing instance needs at least one target")
        stripped = []
        for i, f in enumerate(targets):
            if f.r != self.host.r:
                raise ValueError(f"target {i} has uniformity {f.r}, host has {self.host.r}")
            f = strip_isolated(f)
            if f.e == 0:
                raise ValueError(f"target {i} has no edges")
            stripped.append(f)
        object.__setattr__(self, "targets", tuple(stripped))

    @property
    def s(self) -> int:
        return len(self.targets)


@dataclass
class ArrowResult:
    outcome: Outcome
    witness: dict[Edge, int] | None = None
    nodes: int = 0

    @property
    def arrows(self) -> bool:
        return self.outcome is Outcome.ARROWS

    def witness_json(self) -> list[dict] | None:
        if self.witness is None:
            return None
        return [{"edge": list(e), "color": c} for e, c in sorted(self.witness.items())]


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Search:
    """Backtracking with unit propagation on per-color copy lists."""

    def __init__(self, inst: ArrowInstance, budget: int):
        host = inst.host
        self.s = inst.s
        self.m = host.e
        self.budget = budget
        index = {e: k for k, e in enumerate(host.edges)}
        cache: dict[Hypergraph, list[int]] = {}
        self.copies: list[list[int]] = []
        for f in inst.targets:
            if f not in cache:
                cache[f] = [sum(1 << index[e] for e in cp) for cp in copies_of(f, host)]
            self.copies.append(cache[f])
        self.full_copies = self.copies
        self.peeled = self._peel()
        self.by_edge = [[[] for _ in range(self.m)] for _ in range(self.s)]
        for i, cps in enumerate(self.copies):
            for cp in cps:
                x = cp
                while x:
                    low = x & -x
                    self.by_edge[i][low.bit_length() - 1].append(cp)
                    x ^= low
        keys = {canonical_form(f) if f.n <= 12 else f for f in inst.targets}
        self.symmetric = self.s > 1 and len(keys) == 1
        self.nodes = 0

    def _peel(self) -> list[tuple[int, list[tuple[int, int]]]]:
        """Remove edges whose coloring can always be completed afterwards.

        An edge e is removable when some color has no copy through e, or when
        (s >= 2) any two copies through e of different colors share another
        edge: then at most one color can be blocked for e once everything else
        is colored.  Removed edges and the copies through them leave the
        search; ``_extend`` colors them back in reverse order.
        """
        s, m = self.s, self.m
        alive = [set(cps) for cps in self.copies]
        through = [[[] for _ in range(m)] for _ in range(s)]
        for i, cps in enumerate(self.copies):
            for cp in cps:
                x = cp
                while x:
                    low = x & -x
                    through[i][low.bit_length() - 1].append(cp)
                    x ^= low
        removed = []
        gone = [False] * m
        work = list(range(m))
        queued = [True] * m
        while work:
            e = work.pop()
            queued[e] = False
            if gone[e]:
                continue
            here = [(i, cp) for i in range(s) for cp in through[i][e] if cp in alive[i]]
            if not here:
                ok = True
            elif len({i for i, _ in here}) < s:
                ok = True
            elif s >= 2:
                bit = 1 << e
                ok = all(
                    (a & ~bit) & (b & ~bit)
                    for k, (i, a) in enumerate(here)
                    for j, b in here[k + 1:]
                    if i != j
                )
            else:
                ok = False
            if not ok:
                continue
            gone[e] = True
            removed.append((e, here))
            for i, cp in here:
                alive[i].discard(cp)
                x = cp
                while x:
                    low = x & -x
                    f = low.bit_length() - 1
                    x ^= low
                    if not gone[f] and not queued[f]:
                        queued[f] = True
                        work.append(f)
        self.copies = [[cp for cp in cps if cp in alive[i]] for i, cps in enumerate(self.copies)]
        return removed

    def _extend(self, masks: list[int]) -> list[int]:
        for e, here in reversed(self.peeled):
            bit = 1 << e
            for c in range(self.s):
                masks[c] &= ~bit
            blocked = 0
            for i, cp in here:
                if (cp & ~bit) & ~masks[i] == 0:
                    blocked |= 1 << i
            c = next(c for c in range(self.s) if not blocked >> c & 1)
            masks[c] |= bit
        return masks

    def _assign(self, dom, masks, colored, queue):
        """Apply queued assignments; return the new colored mask or None on conflict."""
        s = self.s
        by_edge = self.by_edge
        while queue:
            e, c = queue.pop()
            bit = 1 << e
            if colored & bit:
                if not masks[c] & bit:
                    return None
                continue
            if not dom[e] >> c & 1:
                return None
            dom[e] = 1 << c
            masks[c] |= bit
            colored |= bit
            mc = masks[c]
            other = colored & ~mc
            for cp in by_edge[c][e]:
                if cp & other:
                    continue
                rem = cp & ~mc
                if not rem:
                    return None
                if rem & (rem - 1):
                    continue
                u = rem.bit_length() - 1
                d = dom[u]
                if d >> c & 1:
                    d &= ~(1 << c)
                    if not d:
                        return None
                    dom[u] = d
                    if not d & (d - 1):
                        queue.append((u, d.bit_length() - 1))
        return colored

    def _branch_edge(self, dom, masks, colored):
        """Uncolored edge with the highest fail-first score; -1 if no live copy
        passes through any uncolored edge.

        Each live copy through e in a color e may still take contributes
        4**k, where k counts its edges already in that color.  Ties go to the
        lowest edge index.
        """
        best, best_score = -1, 0
        s = self.s
        by_edge = self.by_edge
        dead = [colored & ~masks[i] for i in range(s)]
        for e in range(self.m):
            if colored >> e & 1:
                continue
            score = 0
            d = dom[e]
            for i in range(s):
                if d >> i & 1:
                    di = dead[i]
                    mi = masks[i]
                    for cp in by_edge[i][e]:
                        if not cp & di:
                            score += 1 << (2 * (cp & mi).bit_count())
            if score > best_score:
                best, best_score = e, score
        return best

    def _fill(self, dom, masks, colored):
        for e in range(self.m):
            if not colored >> e & 1:
                c = (dom[e] & -dom[e]).bit_length() - 1
                masks[c] |= 1 << e
        return masks

    def run(self) -> tuple[Outcome, list[int] | None]:
        s, m = self.s, self.m
        full = (1 << m) - 1
        dom = [(1 << s) - 1] * m
        masks = [0] * s
        queue = []
        for i, cps in enumerate(self.copies):
            for cp in cps:
                if not cp & (cp - 1):
                    e = cp.bit_length() - 1
                    dom[e] &= ~(1 << i)
                    if not dom[e]:
                        return Outcome.ARROWS, None
        for e in range(m):
            if not dom[e] & (dom[e] - 1):
                queue.append((e, dom[e].bit_length() - 1))
        colored = self._assign(dom, masks, 0, queue)
        if colored is None:
            return Outcome.ARROWS, None

        def frame(dom, masks, colored):
            if colored == full:
                return None
            e = self._branch_edge(dom, masks, colored)
            if e < 0:
                return None
            options = [c for c in range(s) if dom[e] >> c & 1]
            if self.symmetric:
                # unused colors are interchangeable here: keep only the first
                fresh = [c for c in options if not masks[c]]
                options = [c for c in options if masks[c]] + fresh[:1]
            options.reverse()
            return (dom, masks, colored, e, options)

        top = frame(dom, masks, colored)
        if top is None:
            return Outcome.NOT_ARROWS, self._extend(self._fill(dom, masks, colored))
        stack = [top]
        while stack:
            dom0, masks0, colored0, e, options = stack[-1]
            if not options:
                stack.pop()
                continue
            c = options.pop()
            self.nodes += 1
            if self.nodes > self.budget:
                return Outcome.UNKNOWN, None
            dom1 = list(dom0)
            masks1 = list(masks0)
            colored1 = self._assign(dom1, masks1, colored0, [(e, c)])
            if colored1 is None:
                continue
            nxt = frame(dom1, masks1, colored1)
            if nxt is None:
                return Outcome.NOT_ARROWS, self._extend(self._fill(dom1, masks1, colored1))
            stack.append(nxt)
        return Outcome.ARROWS, None


def arrows(inst: ArrowInstance, budget: int = DEFAULT_BUDGET) -> ArrowResult:
    """Whether every s-coloring of the host has a copy of F_i in color i.

    Returns NOT_ARROWS with a witness coloring, ARROWS, or UNKNOWN when the
    node budget runs out.
    """
    search = _Search(inst, budget)
    outcome, masks = search.run()
    witness = None
    if outcome is Outcome.NOT_ARROWS:
        witness = {}
        for k, e in enumerate(inst.host.edges):
            for c, mk in enumerate(masks):
                if mk >> k & 1:
                    witness[e] = c
                    break
    return ArrowResult(outcome, witness, search.nodes)


def arrows_to(host: Hypergraph, targets: Sequence[Hypergraph], budget: int = DEFAULT_BUDGET) -> ArrowResult:
    return arrows(ArrowInstance(host, tuple(targets)), budget)


def verify_witness(inst: ArrowInstance, witness: dict[Edge, int]) -> bool:
    """Independent check of a claimed non-arrowing coloring, using only
    ``copies_of``."""
    host_edges = set(inst.host.edges)
    if set(witness) != host_edges:
        return False
    if any(not 0 <= c < inst.s for c in witness.values()):
        return False
    for i, f in enumerate(inst.targets):
        for cp in copies_of(f, inst.host):
            if all(witness[e] == i for e in cp):
                return False
    return True


@dataclass
class RamseyNumberResult:
    value: int
    witness: dict[Edge, int]
    trace: list[tuple[int, Outcome]] = field(default_factory=list)

    def witness_json(self) -> list[dict]:
        return [{"edge": list(e), "color": c} for e, c in sorted(self.witness.items())]


def ramsey_number(targets: Sequence[Hypergraph], cap: int, budget: int = DEFAULT_BUDGET) -> RamseyNumberResult:
    """Least N <= cap with K_N -> targets, with a refuting coloring of K_{N-1}.

    Only complete hosts are tried: if some N-vertex hypergraph arrows the
    targets then so does K_N, since any coloring of K_N restricts to one of
    the smaller host.
    """
    targets = [strip_isolated(f) for f in targets]
    if not targets:
        raise ValueError("need at least one target")
    r = targets[0].r
    if any(f.r != r for f in targets):
        raise ValueError("targets must share one uniformity")
    start = max(f.n for f in targets) - 1
    trace = []
    previous = None
    for n in range(start, cap + 1):
        res = arrows(ArrowInstance(Hypergraph.complete(n, r), tuple(targets)), budget)
        trace.append((n, res.outcome))
        if res.outcome is Outcome.UNKNOWN:
            raise RamseySearchError(f"search budget exhausted at N={n}")
        if res.outcome is Outcome.ARROWS:
            if previous is None:
                raise RamseySearchError(f"K_{n} already arrows; no refuting coloring below")
            return RamseyNumberResult(n, previous, trace)
        previous = res.witness
    raise RamseySearchError(f"no N <= {cap} found")
