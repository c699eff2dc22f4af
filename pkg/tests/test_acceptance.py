"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``python tests/test_acceptance.py`` or through pytest.  Seeds
are fixed here and never tuned.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from conftest import atlas_graphs, random_hypergraph  # noqa: E402
from ramseyclass.arrowing import ArrowInstance, Outcome, arrows, ramsey_number, verify_witness  # noqa: E402
from ramseyclass.catalog import CATALOG  # noqa: E402
from ramseyclass.classes import Denseness, in_xr, in_xr_or_yr, in_yr, ramsey_dense_sufficient  # noqa: E402
from ramseyclass.containment import (  # noqa: E402
    containment_decision,
    equivalence_decision,
    partition_condition,
    verify_certificate,
    verify_refutation,
)
from ramseyclass.densities import asym_density, delta_parameter, find_heart, max_density, mr  # noqa: E402
from ramseyclass.hypercore import Hypergraph  # noqa: E402
from ramseyclass.randlab import (  # noqa: E402
    ArrowsTuple,
    ContainmentHolds,
    ContainsCopy,
    SampleConfig,
    fit_threshold,
    trial_outcomes,
)

K = Hypergraph.complete
F = Fraction

SEED_ORDERING = 1
SEED_THRESHOLD = 0
SEEDS_MONOTONE = (0, 1, 2, 3, 4)


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line, flush=True)
    return line


# ---------------------------------------------------------------------------


def criterion_1():
    cases = [
        ("m2(K3)", lambda: mr(K(3)), lambda: oracles.density_mr(K(3)), F(2)),
        ("m2(K4)", lambda: mr(K(4)), lambda: oracles.density_mr(K(4)), F(5, 2)),
        ("m2(K5)", lambda: mr(K(5)), lambda: oracles.density_mr(K(5)), F(3)),
        ("m3(K4_3)", lambda: mr(K(4, 3)), lambda: oracles.density_mr(K(4, 3)), F(3)),
        ("m(K4)", lambda: max_density(K(4)).value, lambda: oracles.density_m(K(4)), F(3, 2)),
        ("m2(K4,K3)", lambda: asym_density(K(4), K(3)).value, lambda: oracles.density_asym(K(4), K(3)), F(12, 5)),
    ]
    start = time.perf_counter()
    got = [fn() for _, fn, _, _ in cases]
    elapsed = time.perf_counter() - start
    bad = []
    for (name, _, oracle, expected), value in zip(cases, got):
        if not (isinstance(value, Fraction) and value == oracle() == expected):
            bad.append(name)
    ok = not bad and elapsed < 1.0
    return ok, f"6 densities exact vs brute force, mismatches={bad}, {elapsed:.3f}s (< 1s)"


def criterion_2():
    rng = random.Random(SEED_ORDERING)
    pairs = violations = 0
    while pairs < 200:
        r = rng.choice([2, 3])
        t = random_hypergraph(rng, r, rng.randint(r, 7), rng.random())
        f = random_hypergraph(rng, r, rng.randint(r, 7), rng.random())
        mt, mf = mr(t), mr(f)
        if not mt >= mf > 0:
            continue
        pairs += 1
        a = asym_density(t, f).value
        if not mt >= a >= mf or (mt > mf and not mt > a > mf):
            violations += 1
    return violations == 0, f"{pairs} random pairs, {violations} ordering violations"


def criterion_3():
    start = time.perf_counter()
    k6 = arrows(ArrowInstance(K(6), (K(3), K(3))))
    k5 = arrows(ArrowInstance(K(5), (K(3), K(3))))
    k5_ok = k5.outcome is Outcome.NOT_ARROWS and verify_witness(ArrowInstance(K(5), (K(3), K(3))), k5.witness)
    r33 = ramsey_number([K(3), K(3)], cap=8).value
    hosts = atlas_graphs(max_nodes=7, max_edges=15)
    disagree = 0
    for g in hosts:
        res = arrows(ArrowInstance(g, (K(3), K(3))))
        truth = oracles.arrows2(g, K(3), K(3))
        if res.arrows != truth:
            disagree += 1
        elif not truth and not verify_witness(ArrowInstance(g, (K(3), K(3))), res.witness):
            disagree += 1
    elapsed = time.perf_counter() - start
    ok = k6.outcome is Outcome.ARROWS and k5_ok and r33 == 6 and disagree == 0 and elapsed < 60
    return ok, (
        f"K6 {k6.outcome.value}, K5 {k5.outcome.value} (witness ok={k5_ok}), R(K3,K3)={r33}, "
        f"{len(hosts)} hosts with <=15 edges vs 2^e enumeration: {disagree} disagreements, {elapsed:.1f}s (< 60s)"
    )


def criterion_4():
    bad = []
    for r, lo in ((2, 4), (3, 6)):
        for m in range(r, 9):
            if in_xr(K(m, r))[0] != (m >= lo):
                bad.append(f"X{r}(K{m})")
            if not in_yr(K(m, r))[0]:
                bad.append(f"Y{r}(K{m})")
    rep = in_xr_or_yr(CATALOG["K6-e"])
    if not (rep.in_xr and not rep.in_yr):
        bad.append("K6-e")
    return not bad, f"complete r-graphs r=2,3 m<=8 and K6-e, failures={bad}"


def criterion_5():
    bad = []
    heart = find_heart(K(4), K(3))
    if not (heart.t_prime == K(4) and heart.f_prime == K(3)):
        bad.append("heart(K4,K3)")
    if ramsey_dense_sufficient(K(7, 3), K(7, 3)).status is not Denseness.PROVEN:
        bad.append("(K7_3,K7_3)")
    if ramsey_dense_sufficient(K(5, 3), K(4, 3)).status is not Denseness.INCONCLUSIVE:
        bad.append("(K5_3,K4_3)")
    graphs = {k: h for k, h in CATALOG.items() if h.r == 2}
    count = 0
    for tn, t in graphs.items():
        for fn, f in graphs.items():
            if mr(t) >= mr(f) > 1:
                count += 1
                if ramsey_dense_sufficient(t, f).status is not Denseness.PROVEN:
                    bad.append(f"({tn},{fn})")
    return not bad, f"heart, two 3-uniform verdicts and {count} graph pairs with m2 > 1; failures={bad}"


TUPLES = {
    "a": ("K3",), "b": ("K4",), "c": ("K3", "K3"), "d": ("K3", "K4"), "e": ("K4", "K3"),
    "f": ("K6-e",), "g": ("K5",), "h": ("K4", "K4"), "i": ("K3", "K3", "K3"), "j": ("K5", "K3"),
}
PAIRS = ["ab", "ac", "bc", "cd", "de", "ci", "af", "bf", "fc", "gc",
         "gd", "hc", "hd", "ig", "jc", "jd", "aa", "cc", "dd", "gb"]


def _cross_check(fs, qs):
    """Decide R(fs) ⊆ R(qs) and re-verify the evidence independently."""
    verdict = containment_decision(fs, qs)
    if verdict.holds:
        return verdict.holds, verify_certificate(fs, qs, verdict.certificate)
    complete = len(verdict.refutation) == len(fs) ** len(qs)
    return verdict.holds, complete and all(verify_refutation(fs, qs, f) for f in verdict.refutation)


def criterion_6():
    start = time.perf_counter()
    bad = []
    fs, qs = [K(5), K(2)], [K(3), K(3)]
    res = partition_condition(fs, qs)
    if res.certificate is not None or len(res.failures) != 4 or not all(verify_refutation(fs, qs, f) for f in res.failures):
        bad.append("(K5,K2) vs (K3,K3)")
    if not equivalence_decision([K(3), K(4)], [K(4), K(3)]).equivalent:
        bad.append("equiv (K3,K4)")
    if equivalence_decision([K(3), K(3)], [K(3)]).equivalent:
        bad.append("equiv (K3,K3)/(K3)")
    for a, b in PAIRS:
        ta = [CATALOG[x] for x in TUPLES[a]]
        tb = [CATALOG[x] for x in TUPLES[b]]
        ab, ok1 = _cross_check(ta, tb)
        ba, ok2 = _cross_check(tb, ta)
        eq = equivalence_decision(ta, tb).equivalent
        if not (ok1 and ok2) or (ab and ba) != eq:
            bad.append(a + b)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    return ok, f"{len(PAIRS)} tuple pairs both directions; failures={bad}, {elapsed:.1f}s (< 300s)"


def criterion_7():
    start = time.perf_counter()
    lines = []
    ok = True
    workloads = [
        ("ContainsCopy(K4)", ContainsCopy(K(4)), [12, 18, 24, 30], 0.10),
        ("ArrowsTuple(K3,K3)", ArrowsTuple((K(3), K(3))), [8, 12, 16, 20], 0.15),
        ("ContainmentHolds(2,(K3,K3,K3))", ContainmentHolds(2, (K(3), K(3), K(3))), [8, 12, 16, 20], 0.15),
    ]
    for name, event, ns, tol in workloads:
        fit = fit_threshold(event, ns, trials=200, seed=SEED_THRESHOLD)
        good = abs(fit.slope - fit.predicted_slope) <= tol
        ok &= good
        lines.append(f"{name} slope={fit.slope:.3f} predicted={fit.predicted_slope:.3f} tol={tol} {'ok' if good else 'OUT'}")
    delta = delta_parameter([K(3)] * 3, 2).delta
    if delta != 2:
        ok = False
    elapsed = time.perf_counter() - start
    ok &= elapsed <= 900
    return ok, "; ".join(lines) + f"; delta={delta}; {elapsed:.0f}s (<= 900s)"


def criterion_8():
    events = [ContainsCopy(K(4)), ArrowsTuple((K(3), K(3))), ContainmentHolds(2, (K(3), K(3), K(3)))]
    grid = [i / 10 for i in range(11)]
    breaks = checked = 0
    for event in events:
        for seed in SEEDS_MONOTONE:
            prev = None
            for p in grid:
                cur = trial_outcomes(SampleConfig(2, 9, p, seed), event, 10)
                if prev is not None:
                    breaks += sum(1 for a, b in zip(prev, cur) if a and not b)
                    checked += len(cur)
                prev = cur
    return breaks == 0, f"{checked} coupled indicator steps over 3 events x {len(SEEDS_MONOTONE)} seeds, {breaks} decreases"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("number", range(1, 9))
def test_acceptance_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    with capsys.disabled():
        print()
        report(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        report(k, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
