"""Exact density parameters of uniform hypergraphs.

All values are :class:`fractions.Fraction`.  Maxima are taken over vertex
subsets only: adding edges on a fixed vertex set never lowers any of the
ratios below, so an induced subgraph always attains the maximum.  For
"proper subgraph" questions the candidate set is every proper induced
subgraph plus the spanning subgraphs with one edge deleted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .hypercore import Hypergraph, induced, induced_mask

ZERO = Fraction(0)


class DensityPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class DensityReport:
    value: Fraction
    maximizer: tuple[int, ...]
    unique_at_whole: bool

    def __str__(self):
        return _fmt(self.value)


@dataclass(frozen=True)
class Heart:
    t_prime: Hypergraph
    f_prime: Hypergraph
    t_vertices: tuple[int, ...]
    f_vertices: tuple[int, ...]


@dataclass(frozen=True)
class DeltaReport:
    mu: Fraction
    sigma: Fraction
    delta: Fraction
    sigma_arg_index: int  # 1-based position in qs attaining sigma


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _subset_counts(h: Hypergraph) -> list[int]:
    """Edge count of the induced subgraph on every vertex mask."""
    counts = [0] * (1 << h.n)
    for em in h.edge_masks:
        counts[em] += 1
    # superset sums: e(S) = number of edges contained in S
    for bit in range(h.n):
        step = 1 << bit
        for mask in range(1 << h.n):
            if mask & step:
                counts[mask] += counts[mask ^ step]
    return counts


def _mask_vertices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _masks_by_size(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda m: (bin(m).count("1"), _mask_vertices(m)))


def _maximize(h: Hypergraph, ratio: Callable[[int, int], Fraction | None], spanning: Fraction | None) -> DensityReport:
    """Max of ``ratio(e, v)`` over vertex subsets (``None`` = not a candidate).

    ``spanning`` is the ratio of the whole vertex set with one edge removed,
    used only to decide uniqueness at the whole hypergraph.
    """
    counts = _subset_counts(h)
    full = (1 << h.n) - 1
    best = None
    best_mask = 0
    for mask in _masks_by_size(h.n):
        val = ratio(counts[mask], bin(mask).count("1"))
        if val is not None and (best is None or val > best):
            best, best_mask = val, mask
    if best is None:
        return DensityReport(ZERO, (), False)
    proper = [ratio(counts[m], bin(m).count("1")) for m in range(full)]
    proper_best = max((x for x in proper if x is not None), default=None)
    whole = ratio(counts[full], h.n)
    unique = (
        whole == best
        and (proper_best is None or proper_best < best)
        and (spanning is None or spanning < best)
    )
    return DensityReport(best, _mask_vertices(best_mask), unique)


def max_density(f: Hypergraph) -> DensityReport:
    """m(F): the largest edges-per-vertex ratio of a subgraph (0 when edgeless)."""
    def ratio(e, v):
        return Fraction(e, v) if e >= 1 else None

    spanning = Fraction(f.e - 1, f.n) if f.e >= 1 else None
    return _maximize(f, ratio, spanning)


def _r_ratio(r: int) -> Callable[[int, int], Fraction | None]:
    # m_r of an induced subgraph with e edges on v vertices, taken alone
    def ratio(e, v):
        if e == 0:
            return ZERO
        if e == 1:
            return Fraction(1, r)
        return Fraction(e - 1, v - r)

    return ratio


def max_r_density(f: Hypergraph) -> DensityReport:
    """m_r(F) with the conventions 0 (no edges) and 1/r (one edge)."""
    r = f.r
    if f.e == 0:
        return DensityReport(ZERO, (), False)
    if f.e == 1:
        only = f.edges[0]
        return DensityReport(Fraction(1, r), only, f.n == r)
    ratio = _r_ratio(r)
    spanning = ratio(f.e - 1, f.n)
    rep = _maximize(f, ratio, spanning)
    return rep


def mr(f: Hypergraph) -> Fraction:
    return max_r_density(f).value


def _check_pair(t: Hypergraph, f: Hypergraph) -> tuple[Fraction, Fraction]:
    if t.r != f.r:
        raise DensityPreconditionError(f"uniformity mismatch: {t.r} vs {f.r}")
    mt, mf = mr(t), mr(f)
    if not (mt >= mf > 0):
        raise DensityPreconditionError(
            f"need m_r(T) >= m_r(F) > 0, got m_r(T)={_fmt(mt)}, m_r(F)={_fmt(mf)}"
        )
    return mt, mf


def _asym_ratio(r: int, mf: Fraction) -> Callable[[int, int], Fraction | None]:
    inv = 1 / mf

    def ratio(e, v):
        if v < r or e == 0:
            return None
        return e / (v - r + inv)

    return ratio


def asym_density(t: Hypergraph, f: Hypergraph) -> DensityReport:
    """m_r(T, F), the asymmetric maximum r-density of the ordered pair."""
    _, mf = _check_pair(t, f)
    ratio = _asym_ratio(t.r, mf)
    spanning = ratio(t.e - 1, t.n) if t.e >= 2 else None
    return _maximize(t, ratio, spanning)


def is_strictly_r_balanced(f: Hypergraph) -> bool:
    if f.e == 0:
        raise DensityPreconditionError("strict r-balance needs at least one edge")
    return max_r_density(f).unique_at_whole


def is_strictly_f_balanced(t: Hypergraph, f: Hypergraph) -> bool:
    """Whether m_r(T, F) is attained only by T itself.

    When m_r(T) = m_r(F) a single edge of T already attains m_r(T, F), so
    uniqueness is read as strict r-balance of T in that case.
    """
    mt, mf = _check_pair(t, f)
    if mt == mf:
        return is_strictly_r_balanced(t)
    return asym_density(t, f).unique_at_whole


def _balanced_subsets(h: Hypergraph, target: Fraction, balanced: Callable[[Hypergraph], bool]):
    """Vertex subsets (by size, then lexicographic) whose induced subgraph has
    ``balanced`` true and maximum r-density ``target``."""
    counts = _subset_counts(h)
    for mask in _masks_by_size(h.n):
        if counts[mask] == 0:
            continue
        sub = induced_mask(h, mask)
        if sub.isolated_vertices():
            continue
        if mr(sub) == target and balanced(sub):
            yield _mask_vertices(mask), sub


def _first_min(cands):
    best = None
    for verts, sub in cands:
        key = (sub.n, sub.e)
        if best is None or key < best[0]:
            best = (key, verts, sub)
    return best


def find_heart(t: Hypergraph, f: Hypergraph) -> Heart:
    """The lexicographically least heart by (v(F'), e(F'), v(T'), e(T')).

    Both parts of a heart are necessarily induced: adding an edge on the same
    vertex set would raise the relevant density past its maximum.
    """
    mt, mf = _check_pair(t, f)
    fp = _first_min(_balanced_subsets(f, mf, is_strictly_r_balanced))
    if fp is None:
        raise RuntimeError("no strictly r-balanced subgraph attains m_r(F); this cannot happen")
    _, f_verts, f_prime = fp
    if mt == mf:
        tp = _first_min(_balanced_subsets(t, mt, is_strictly_r_balanced))
    else:
        target = asym_density(t, f).value
        counts = _subset_counts(t)
        cands = []
        for mask in _masks_by_size(t.n):
            if counts[mask] == 0:
                continue
            sub = induced_mask(t, mask)
            if sub.isolated_vertices() or mr(sub) < mr(f_prime):
                continue
            if asym_density(sub, f_prime).value == target and is_strictly_f_balanced(sub, f_prime):
                cands.append((_mask_vertices(mask), sub))
        tp = _first_min(cands)
    if tp is None:
        raise RuntimeError("no admissible T' found; this cannot happen")
    _, t_verts, t_prime = tp
    return Heart(t_prime, f_prime, t_verts, f_verts)


def is_heart(t: Hypergraph, f: Hypergraph, heart: Heart) -> bool:
    """Check the three defining clauses for vertex-subset hearts."""
    mt, mf = _check_pair(t, f)
    tp, fp = heart.t_prime, heart.f_prime
    if induced(f, heart.f_vertices) != fp or induced(t, heart.t_vertices) != tp:
        return False
    if not (fp.e >= 1 and is_strictly_r_balanced(fp) and mr(fp) == mf):
        return False
    if mt == mf:
        return tp.e >= 1 and is_strictly_r_balanced(tp) and mr(tp) == mt
    if mr(tp) < mr(fp):
        return False
    return is_strictly_f_balanced(tp, fp) and asym_density(tp, fp).value == asym_density(t, f).value


def delta_parameter(qs: Sequence[Hypergraph], s: int) -> DeltaReport:
    """mu = max m(Q_j), sigma = min_{i<=s} m_r(Q_i, Q_{s+1}), delta = max(mu, sigma)."""
    t = len(qs)
    if not 2 <= s < t:
        raise DensityPreconditionError(f"need 2 <= s < t, got s={s}, t={t}")
    if len({q.r for q in qs}) != 1:
        raise DensityPreconditionError("all Q_j must share one uniformity")
    dens = [mr(q) for q in qs]
    if any(d <= 0 for d in dens):
        raise DensityPreconditionError("every Q_j needs positive maximum r-density")
    if any(a < b for a, b in zip(dens, dens[1:])):
        shown = ", ".join(_fmt(d) for d in dens)
        raise DensityPreconditionError(f"m_r(Q_j) must be non-increasing, got {shown}")
    mu = max(max_density(q).value for q in qs)
    pivot = qs[s]
    sigmas = [asym_density(qs[i], pivot).value for i in range(s)]
    sigma = min(sigmas)
    return DeltaReport(mu, sigma, max(mu, sigma), sigmas.index(sigma) + 1)
