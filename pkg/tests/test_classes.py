from itertools import combinations

import pytest

from ramseyclass.catalog import CATALOG
from ramseyclass.classes import Denseness, in_xr, in_xr_or_yr, in_yr, ramsey_dense_sufficient
from ramseyclass.densities import DensityPreconditionError
from ramseyclass.hypercore import Hypergraph, induced, is_strongly_r_partite, is_vertex_cut

K = Hypergraph.complete


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("m", range(3, 9))
def test_complete_membership(r, m):
    if m < r:
        return
    assert in_xr(K(m, r))[0] == (m >= 2 * r)
    assert in_yr(K(m, r))[0]


def test_k6_minus_edge():
    rep = in_xr_or_yr(CATALOG["K6-e"])
    assert rep.in_xr and not rep.in_yr
    assert rep.yr_witness == (4, 5)


def test_small_examples():
    rep = in_xr_or_yr(K(3))
    assert not rep.in_xr and rep.in_yr
    assert is_vertex_cut(K(3), rep.xr_witness)
    rep = in_xr_or_yr(CATALOG["P4"])
    assert not rep.in_xr and not rep.in_yr
    assert in_yr(CATALOG["P3"]) == (False, (0, 2))
    ok, pair = in_yr(CATALOG["C4"])
    assert not ok and pair in {(0, 2), (1, 3)}


def test_disconnected_not_in_xr():
    assert in_xr(Hypergraph(2, 8, tuple(combinations(range(4), 2)) + tuple(combinations(range(4, 8), 2)))) == (False, None)


def test_witnesses_reverify():
    for name, h in CATALOG.items():
        ok, cut = in_xr(h)
        if not ok and cut is not None:
            assert is_vertex_cut(h, cut)
            assert is_strongly_r_partite(induced(h, cut))
        ok, pair = in_yr(h)
        if not ok:
            assert not any(set(pair) <= set(e) for e in h.edges)


def test_cut_size_limit():
    with pytest.raises(ValueError):
        in_xr(K(13))


def test_denseness():
    assert ramsey_dense_sufficient(K(4), K(4)).status is Denseness.PROVEN
    v = ramsey_dense_sufficient(K(7, 3), K(7, 3))
    assert v.status is Denseness.PROVEN and v.f_prime is not None
    assert ramsey_dense_sufficient(K(5, 3), K(4, 3)).status is Denseness.INCONCLUSIVE
    with pytest.raises(DensityPreconditionError):
        ramsey_dense_sufficient(K(3), Hypergraph(2, 3, ((0, 1), (1, 2))))


def test_denseness_every_r2_catalog_pair():
    graphs = [h for h in CATALOG.values() if h.r == 2]
    from ramseyclass.densities import mr

    count = 0
    for t in graphs:
        for f in graphs:
            if mr(t) >= mr(f) > 1:
                assert ramsey_dense_sufficient(t, f).status is Denseness.PROVEN
                count += 1
    assert count > 10
