"""Ramsey-class containment through the partition condition, Ramsey
equivalence of tuples, and checks of small separation examples.

For targets Q_1..Q_t in X_r or Y_r, R(F_1..F_s) is contained in
R(Q_1..Q_t) exactly when [t] splits into parts A_1..A_s (some possibly
empty) with F_i -> (Q_j : j in A_i) for every i.  Indices in this module are
0-based; an assignment is a tuple ``a`` with ``a[j]`` the part receiving
``qs[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .arrowing import DEFAULT_BUDGET, ArrowInstance, Outcome, arrows, ramsey_number, verify_witness
from .classes import in_xr_or_yr
from .hypercore import Edge, Hypergraph, canonical_form, contains_copy, strip_isolated


class HypothesisError(ValueError):
    """Inputs fall outside the class where the decision procedure is valid."""


class UndecidedError(RuntimeError):
    """An arrowing sub-problem ran out of search budget."""


@dataclass(frozen=True)
class PartFailure:
    """Why one assignment fails: part ``part`` does not arrow its targets."""

    assignment: tuple[int, ...]
    part: int
    targets: tuple[int, ...]
    witness: dict[Edge, int]
    pruned: bool  # found by the missing-copy test rather than a search

    def as_dict(self) -> dict:
        return {
            "assignment": list(self.assignment),
            "part": self.part,
            "targets": list(self.targets),
            "pruned": self.pruned,
            "witness": [{"edge": list(e), "color": c} for e, c in sorted(self.witness.items())],
        }


@dataclass
class PartitionResult:
    certificate: tuple[int, ...] | None
    failures: list[PartFailure] = field(default_factory=list)
    arrow_calls: int = 0

    @property
    def holds(self) -> bool:
        return self.certificate is not None

    def parts(self, s: int) -> list[list[int]]:
        if self.certificate is None:
            return []
        return [[j for j, i in enumerate(self.certificate) if i == k] for k in range(s)]


def _check_uniform(*tuples: Sequence[Hypergraph]) -> int:
    rs = {h.r for tup in tuples for h in tup}
    if len(rs) > 1:
        raise ValueError(f"all hypergraphs must share one uniformity, got {sorted(rs)}")
    return rs.pop() if rs else 2


class _ArrowCache:
    """Memoized F -> (Q_j : j in A); keyed by F and the multiset of Q's up to
    isomorphism, so reordered parts reuse one search."""

    def __init__(self, qs: Sequence[Hypergraph], budget: int):
        self.qs = [strip_isolated(q) for q in qs]
        self.keys = [canonical_form(q) for q in self.qs]
        self.budget = budget
        self.memo: dict = {}
        self.calls = 0

    def check(self, f: Hypergraph, part: tuple[int, ...]):
        """Return (outcome, witness) with witness colors indexing ``part``."""
        if not part:
            return Outcome.ARROWS, None
        order = sorted(part, key=lambda j: (self.keys[j], j))
        key = (f, tuple(self.keys[j] for j in order))
        if key not in self.memo:
            self.memo[key] = self._decide(f, order)
        outcome, witness = self.memo[key]
        if witness is None:
            return outcome, None
        # colors refer to positions in ``order``; move them to positions in ``part``
        position = {j: k for k, j in enumerate(part)}
        remap = [position[j] for j in order]
        return outcome, {e: remap[c] for e, c in witness.items()}

    def _decide(self, f: Hypergraph, order: list[int]):
        # If F does not arrow a sub-multiset, it does not arrow the whole:
        # the same coloring works with the dropped targets' colors left empty.
        if len(order) > 1:
            seen = set()
            for drop in range(len(order)):
                if self.keys[order[drop]] in seen:
                    continue
                seen.add(self.keys[order[drop]])
                sub = tuple(order[:drop] + order[drop + 1:])
                outcome, witness = self.check(f, sub)
                if outcome is Outcome.NOT_ARROWS:
                    position = {j: k for k, j in enumerate(order)}
                    return outcome, {e: position[sub[c]] for e, c in witness.items()}
        self.calls += 1
        res = arrows(ArrowInstance(f, tuple(self.qs[j] for j in order)), self.budget)
        return res.outcome, res.witness


def partition_condition(
    fs: Sequence[Hypergraph],
    qs: Sequence[Hypergraph],
    budget: int = DEFAULT_BUDGET,
    record_failures: bool = True,
    order: str = "lex",
) -> PartitionResult:
    """Search the s**t assignments in lexicographic order for a partition
    with F_i -> (Q_j : j in A_i) for all i.

    With ``order="any"`` assignments with smaller largest part come first;
    the answer is the same but the certificate need not be the lex-least.

    Assigning Q_j to F_i is ruled out at once when F_i has no copy of Q_j:
    coloring F_i entirely in Q_j's color is then a valid refutation.
    Raises :class:`UndecidedError` if no certificate is found and some
    needed arrowing search was cut off by the budget.
    """
    fs = list(fs)
    qs = list(qs)
    _check_uniform(fs, qs)
    s, t = len(fs), len(qs)
    if s == 0:
        raise ValueError("need at least one F_i")
    cache = _ArrowCache(qs, budget)
    has_copy = [[contains_copy(q, f) for q in cache.qs] for f in fs]
    result = PartitionResult(None)
    undecided = False

    assignments = product(range(s), repeat=t)
    if order == "any":
        assignments = sorted(assignments, key=lambda a: max(a.count(i) for i in range(s)))
    elif order != "lex":
        raise ValueError(f"order must be 'lex' or 'any', got {order!r}")
    for assignment in assignments:
        parts = [tuple(j for j in range(t) if assignment[j] == i) for i in range(s)]
        failure = None
        for i, part in enumerate(parts):
            missing = next((j for j in part if not has_copy[i][j]), None)
            if missing is not None:
                color = part.index(missing)
                witness = {e: color for e in fs[i].edges}
                failure = PartFailure(assignment, i, part, witness, True)
                break
        if failure is None:
            for i, part in enumerate(parts):
                outcome, witness = cache.check(fs[i], part)
                if outcome is Outcome.UNKNOWN:
                    undecided = True
                    failure = False
                    break
                if outcome is Outcome.NOT_ARROWS:
                    failure = PartFailure(assignment, i, part, witness, False)
                    break
        if failure is None:
            result.certificate = assignment
            break
        if failure and record_failures:
            result.failures.append(failure)
    result.arrow_calls = cache.calls
    if result.certificate is None and undecided:
        raise UndecidedError("an arrowing search exhausted its budget; raise --budget")
    return result


def verify_refutation(fs: Sequence[Hypergraph], qs: Sequence[Hypergraph], failure: PartFailure) -> bool:
    """Re-check one failing part with the independent witness checker."""
    f = fs[failure.part]
    targets = tuple(qs[j] for j in failure.targets)
    if not targets:
        return False
    return verify_witness(ArrowInstance(f, targets), failure.witness)


def verify_certificate(fs, qs, certificate, budget: int = DEFAULT_BUDGET) -> bool:
    """Every part arrows its targets (fresh searches, no memo)."""
    for i, f in enumerate(fs):
        part = tuple(qs[j] for j, a in enumerate(certificate) if a == i)
        if part and not arrows(ArrowInstance(f, part), budget).arrows:
            return False
    return True


def class_violations(qs: Sequence[Hypergraph]) -> list[int]:
    bad = []
    for j, q in enumerate(qs):
        report = in_xr_or_yr(strip_isolated(q))
        if not (report.in_xr or report.in_yr):
            bad.append(j)
    return bad


@dataclass
class ContainmentVerdict:
    holds: bool
    certificate: tuple[int, ...] | None
    refutation: list[PartFailure]
    arrow_calls: int = 0

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "certificate": list(self.certificate) if self.certificate is not None else None,
            "refutation": [f.as_dict() for f in self.refutation] if not self.holds else [],
        }


def containment_decision(fs, qs, budget: int = DEFAULT_BUDGET) -> ContainmentVerdict:
    """Decide R(fs) ⊆ R(qs); every Q_j must lie in X_r or Y_r."""
    bad = class_violations(qs)
    if bad:
        raise HypothesisError(f"Q_j outside X_r and Y_r at indices {bad}; containment is not decidable this way")
    res = partition_condition(fs, qs, budget)
    return ContainmentVerdict(res.holds, res.certificate, res.failures, res.arrow_calls)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    mapping: tuple[int, ...] | None  # mapping[i] = index j with fs[i] ≅ qs[j]


def equivalence_decision(fs: Sequence[Hypergraph], qs: Sequence[Hypergraph]) -> EquivalenceResult:
    """Ramsey equivalence of tuples from X_r ∪ Y_r with at least two edges
    each: the same multiset up to isomorphism."""
    _check_uniform(fs, qs)
    for name, tup in (("fs", fs), ("qs", qs)):
        bad = class_violations(tup)
        small = [j for j, h in enumerate(tup) if h.e < 2]
        if bad or small:
            raise HypothesisError(
                f"{name}: members outside X_r ∪ Y_r at {bad}, fewer than two edges at {small}"
            )
    if len(fs) != len(qs):
        return EquivalenceResult(False, None)
    fkeys = [canonical_form(strip_isolated(f)) for f in fs]
    qkeys = [canonical_form(strip_isolated(q)) for q in qs]
    used = [False] * len(qs)
    mapping = []
    for key in fkeys:
        j = next((j for j, k in enumerate(qkeys) if not used[j] and k == key), None)
        if j is None:
            return EquivalenceResult(False, None)
        used[j] = True
        mapping.append(j)
    return EquivalenceResult(True, tuple(mapping))


@dataclass
class SeparationReport:
    item: str
    r: int
    k: int
    l: int
    fs: list[Hypergraph]
    qs: list[Hypergraph]
    q: int | None
    partition: PartitionResult
    ramsey_trace: list = field(default_factory=list)

    @property
    def separated(self) -> bool:
        return self.partition.certificate is None

    def as_dict(self) -> dict:
        return {
            "item": self.item,
            "r": self.r,
            "k": self.k,
            "l": self.l,
            "q": self.q,
            "fs": [f.n for f in self.fs],
            "qs": [q.n for q in self.qs],
            "separated": self.separated,
            "assignments_refuted": len(self.partition.failures),
            "refutation": [f.as_dict() for f in self.partition.failures],
            "ramsey_trace": [[n, o.value] for n, o in self.ramsey_trace],
        }


def corollary71_verify(item: str, r: int, k: int, l: int, budget: int = DEFAULT_BUDGET, cap: int = 12) -> SeparationReport:
    """Confirm that no partition exists for the complete-hypergraph tuples of
    the three counterintuitive separation examples, certifying an r-graph G
    that arrows the first tuple but not the second:

    * ``i``:   (K_q, K_l) vs (K_k, K_k) with q = R(K_k, K_k) - 1
    * ``ii``:  (K_{k-1}, K_{k-1}, K_l) vs (K_k, K_l)
    * ``iii``: (K_{k+1}, K_{k-1}, K_l) vs (K_k, K_k, K_l)
    """
    if not k > l >= r >= 2:
        raise ValueError(f"need k > l >= r >= 2, got r={r}, k={k}, l={l}")

    def K(m):
        return Hypergraph.complete(m, r)

    q = None
    trace = []
    if item == "i":
        rn = ramsey_number([K(k), K(k)], cap, budget)
        q, trace = rn.value - 1, rn.trace
        fs, qs = [K(q), K(l)], [K(k), K(k)]
    elif item == "ii":
        fs, qs = [K(k - 1), K(k - 1), K(l)], [K(k), K(l)]
    elif item == "iii":
        fs, qs = [K(k + 1), K(k - 1), K(l)], [K(k), K(k), K(l)]
    else:
        raise ValueError(f"item must be one of i, ii, iii; got {item!r}")
    bad = class_violations(qs)
    if bad:
        raise HypothesisError(f"Q_j outside X_r and Y_r at indices {bad}")
    res = partition_condition(fs, qs, budget)
    return SeparationReport(item, r, k, l, fs, qs, q, res, trace)
