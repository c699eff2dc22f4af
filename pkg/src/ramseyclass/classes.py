"""Membership in the families X_r (non-trivially connected) and Y_r (every
vertex pair covered by an edge), and a sufficient test for Ramsey-denseness."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .densities import DensityPreconditionError, is_strictly_r_balanced, mr
from .hypercore import (
    Hypergraph,
    chromatic_number,
    induced,
    induced_mask,
    is_connected,
    is_strongly_r_partite,
    is_vertex_cut,
)

MAX_CUT_VERTICES = 12


@dataclass(frozen=True)
class ClassReport:
    in_xr: bool
    in_yr: bool
    xr_witness: tuple[int, ...] | None = None
    yr_witness: tuple[int, int] | None = None

    def as_dict(self) -> dict:
        return {
            "inXr": self.in_xr,
            "inYr": self.in_yr,
            "xrWitness": list(self.xr_witness) if self.xr_witness is not None else None,
            "yrWitness": list(self.yr_witness) if self.yr_witness is not None else None,
        }


def in_yr(f: Hypergraph) -> tuple[bool, tuple[int, int] | None]:
    """Every pair of vertices lies in a common edge; else the first uncovered pair."""
    covered = set()
    for edge in f.edges:
        covered.update(combinations(edge, 2))
    for pair in combinations(range(f.n), 2):
        if pair not in covered:
            return False, pair
    return True, None


def in_xr(f: Hypergraph) -> tuple[bool, tuple[int, ...] | None]:
    """Every vertex cut S has F[S] not strongly r-partite.

    Disconnected hypergraphs are never members and get no witness.  A
    witness is the first offending cut by size, then lexicographically.
    """
    if f.n > MAX_CUT_VERTICES:
        raise ValueError(f"cut enumeration supports at most {MAX_CUT_VERTICES} vertices, got {f.n}")
    if not is_connected(f):
        return False, None
    for size in range(f.n + 1):
        for s in combinations(range(f.n), size):
            if is_vertex_cut(f, s) and is_strongly_r_partite(induced(f, s)):
                return False, s
    return True, None


def in_xr_or_yr(f: Hypergraph) -> ClassReport:
    x, xw = in_xr(f)
    y, yw = in_yr(f)
    return ClassReport(x, y, xw, yw)


class Denseness(enum.Enum):
    PROVEN = "Proven"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class DenseVerdict:
    status: Denseness
    reason: str
    f_prime: Hypergraph | None = None
    trace: list[str] = field(default_factory=list)


def ramsey_dense_sufficient(t: Hypergraph, f: Hypergraph) -> DenseVerdict:
    """Proven when r = 2, or when some strictly r-balanced F' of F with
    m_r(F') = m_r(F) has chromatic number above r.  Never disproves."""
    if t.r != f.r:
        raise DensityPreconditionError(f"uniformity mismatch: {t.r} vs {f.r}")
    mt, mf = mr(t), mr(f)
    if not (mt >= mf > 1):
        raise DensityPreconditionError(
            f"need m_r(T) >= m_r(F) > 1, got {mt.numerator}/{mt.denominator} and {mf.numerator}/{mf.denominator}"
        )
    if f.r == 2:
        return DenseVerdict(Denseness.PROVEN, "every graph pair with m_2 > 1 is Ramsey-dense", None, ["r=2"])
    trace = []
    candidates = [(f"vertices {_verts(mask)}", induced_mask(f, mask)) for mask in range(1, 1 << f.n)]
    candidates += [(f"minus edge {e}", f.without_edge(e)) for e in f.edges]
    for label, sub in candidates:
        if sub.e == 0 or mr(sub) != mf or not is_strictly_r_balanced(sub):
            continue
        chi = chromatic_number(sub)
        trace.append(f"{label}: strictly balanced, m_r={_frac(mf)}, chi={chi}")
        if chi > f.r:
            return DenseVerdict(Denseness.PROVEN, f"F' = {label} has chi {chi} > {f.r}", sub, trace)
    return DenseVerdict(Denseness.INCONCLUSIVE, "no strictly r-balanced F' with chi > r", None, trace)


def _verts(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
