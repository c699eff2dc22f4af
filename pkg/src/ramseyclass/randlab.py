"""Random r-graphs H^(r)(n, p) and Monte Carlo threshold estimates.

Every trial draws one uniform variate per r-subset of [n] from a Philox
stream keyed by the trial seed; the subset is an edge when its variate is
below p.  Trials at different p therefore see nested edge sets (samplewise
coupling), and each trial of a monotone event has a single critical
probability above which it succeeds.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_n_values, check_probability
from .arrowing import DEFAULT_BUDGET, ArrowInstance, Outcome, arrows
from .containment import HypothesisError, UndecidedError, class_violations, partition_condition
from .densities import asym_density, delta_parameter, max_density, mr
from .hypercore import Hypergraph, contains_copy

CSV_HEADER = ["n", "p", "trials", "successes", "phat"]


class BudgetExhausted(RuntimeError):
    """A trial's decision ran out of search budget, so the record is void."""


@dataclass(frozen=True)
class SampleConfig:
    r: int
    n: int
    p: float | Fraction
    seed: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"uniformity must be >= 2, got {self.r}")
        if self.n < self.r:
            raise ValueError(f"need n >= r, got n={self.n}, r={self.r}")
        check_probability(self.p)


def subset_variates(r: int, n: int, seed: int) -> np.ndarray:
    """One uniform variate per r-subset of [n], indexed by lexicographic rank."""
    count = math.comb(n, r)
    gen = np.random.Generator(np.random.Philox(key=seed % (1 << 64)))
    return gen.random(count)


def sample(cfg: SampleConfig) -> Hypergraph:
    """Draw H^(r)(n, p): each r-subset is an edge independently with probability p."""
    u = subset_variates(cfg.r, cfg.n, cfg.seed)
    p = float(cfg.p)
    subsets = combinations(range(cfg.n), cfg.r)
    return Hypergraph(cfg.r, cfg.n, tuple(e for e, x in zip(subsets, u) if x < p))


def trial_seed(master_seed: int, r: int, n: int, trial: int) -> int:
    """Seed of one trial; depends on (master seed, r, n, trial) but not on p."""
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(r, n, trial))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


# ---------------------------------------------------------------------------
# events


@dataclass(frozen=True)
class ContainsCopy:
    """H contains a copy of ``pattern``."""

    pattern: Hypergraph

    @property
    def r(self) -> int:
        return self.pattern.r

    def __call__(self, h: Hypergraph, budget: int = DEFAULT_BUDGET) -> bool:
        return contains_copy(self.pattern, h)

    def predicted_exponent(self) -> Fraction:
        """Density d with threshold n**(-1/d)."""
        return max_density(self.pattern).value

    def describe(self) -> str:
        return f"ContainsCopy({self.pattern})"


@dataclass(frozen=True)
class ArrowsTuple:
    """H -> (F_1, ..., F_s)."""

    targets: tuple[Hypergraph, ...]

    @property
    def r(self) -> int:
        return self.targets[0].r

    def __call__(self, h: Hypergraph, budget: int = DEFAULT_BUDGET) -> bool:
        res = arrows(ArrowInstance(h, self.targets), budget)
        if res.outcome is Outcome.UNKNOWN:
            raise BudgetExhausted(f"arrowing search exceeded {budget} nodes")
        return res.outcome is Outcome.ARROWS

    def predicted_exponent(self) -> Fraction:
        if len(self.targets) == 1:
            return max_density(self.targets[0]).value
        ranked = sorted(self.targets, key=mr, reverse=True)
        return asym_density(ranked[0], ranked[1]).value

    def describe(self) -> str:
        return "ArrowsTuple(" + ", ".join(str(f) for f in self.targets) + ")"


@dataclass(frozen=True)
class ContainmentHolds:
    """R(H; s) ⊆ R(Q_1, ..., Q_t), decided by the partition condition with
    F_1 = ... = F_s = H.  Every Q_j must lie in X_r or Y_r."""

    s: int
    qs: tuple[Hypergraph, ...]

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be positive")
        bad = class_violations(self.qs)
        if bad:
            raise HypothesisError(f"Q_j outside X_r and Y_r at indices {bad}")

    @property
    def r(self) -> int:
        return self.qs[0].r

    def __call__(self, h: Hypergraph, budget: int = DEFAULT_BUDGET) -> bool:
        try:
            res = partition_condition([h] * self.s, self.qs, budget, record_failures=False, order="any")
        except UndecidedError as exc:
            raise BudgetExhausted(str(exc)) from None
        return res.holds

    def predicted_exponent(self) -> Fraction:
        if self.s >= len(self.qs):
            return max(max_density(q).value for q in self.qs)
        ranked = sorted(self.qs, key=mr, reverse=True)
        return delta_parameter(ranked, self.s).delta

    def describe(self) -> str:
        return f"ContainmentHolds({self.s}; " + ", ".join(str(q) for q in self.qs) + ")"


# ---------------------------------------------------------------------------
# estimates


@dataclass(frozen=True)
class SweepRecord:
    n: int
    p: float
    trials: int
    successes: int

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError("successes must lie in 0..trials")

    @property
    def phat(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def _run_trials(event, r, n, p, seeds, budget) -> list[bool]:
    return [event(sample(SampleConfig(r, n, p, sd)), budget) for sd in seeds]


def _chunks(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items)))
    return [items[k::parts] for k in range(parts)]


def trial_outcomes(cfg: SampleConfig, event, trials: int, budget: int = DEFAULT_BUDGET, n_jobs: int = 1) -> list[bool]:
    """Success indicator of every trial, in trial order.  ``cfg.seed`` is the
    master seed."""
    seeds = [trial_seed(cfg.seed, cfg.r, cfg.n, t) for t in range(trials)]
    if n_jobs == 1:
        return _run_trials(event, cfg.r, cfg.n, cfg.p, seeds, budget)
    idx = list(range(trials))
    groups = _chunks(idx, n_jobs)
    parts = Parallel(n_jobs=n_jobs)(
        delayed(_run_trials)(event, cfg.r, cfg.n, cfg.p, [seeds[i] for i in g], budget) for g in groups
    )
    out = [False] * trials
    for g, res in zip(groups, parts):
        for i, v in zip(g, res):
            out[i] = v
    return out


def estimate_event(cfg: SampleConfig, event, trials: int, budget: int = DEFAULT_BUDGET, n_jobs: int = 1) -> SweepRecord:
    """Fraction of seeded trials in which ``event`` occurs."""
    if event.r != cfg.r:
        raise ValueError(f"event uniformity {event.r} differs from sample uniformity {cfg.r}")
    hits = trial_outcomes(cfg, event, trials, budget, n_jobs)
    return SweepRecord(cfg.n, float(cfg.p), trials, sum(hits))


def sweep(cfg_base: SampleConfig, event, p_grid: Iterable[float], trials: int, budget: int = DEFAULT_BUDGET, n_jobs: int = 1) -> list[SweepRecord]:
    """One record per grid point; trials at every p share their variates."""
    out = []
    for p in p_grid:
        cfg = SampleConfig(cfg_base.r, cfg_base.n, p, cfg_base.seed)
        out.append(estimate_event(cfg, event, trials, budget, n_jobs))
    return out


def records_to_csv(records: Sequence[SweepRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow([rec.n, repr(float(rec.p)), rec.trials, rec.successes, repr(rec.phat)])
    return buf.getvalue()


def records_from_csv(text: str) -> list[SweepRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"CSV header must be {','.join(CSV_HEADER)}")
    out = []
    for row in rows[1:]:
        if not row:
            continue
        n, p, trials, successes, phat = row
        rec = SweepRecord(int(n), float(p), int(trials), int(successes))
        if not math.isclose(rec.phat, float(phat), rel_tol=0, abs_tol=1e-12):
            raise ValueError(f"phat {phat} inconsistent with {successes}/{trials}")
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# thresholds


def _critical_one(event, r: int, n: int, seed: int, budget: int) -> float:
    """Least p at which this trial's event occurs (the event holds for every
    p above the returned variate); ``inf`` if it never occurs."""
    u = subset_variates(r, n, seed)
    subsets = list(combinations(range(n), r))
    order = np.argsort(u, kind="stable")

    def holds(k):
        return event(Hypergraph(r, n, tuple(subsets[i] for i in order[:k])), budget)

    lo, hi = 0, len(subsets)
    if holds(lo):
        return 0.0
    if not holds(hi):
        return math.inf
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return float(u[order[hi - 1]])


def _critical_batch(event, r, n, seeds, budget):
    return [_critical_one(event, r, n, sd, budget) for sd in seeds]


def critical_probabilities(event, n: int, trials: int, seed: int, budget: int = DEFAULT_BUDGET, n_jobs: int = 1) -> np.ndarray:
    """Per-trial critical probabilities; trial t succeeds at p iff value[t] < p.

    Valid for events that are monotone under adding edges, which all three
    event kinds are.
    """
    r = event.r
    seeds = [trial_seed(seed, r, n, t) for t in range(trials)]
    if n_jobs == 1:
        return np.array(_critical_batch(event, r, n, seeds, budget))
    groups = _chunks(list(range(trials)), n_jobs)
    parts = Parallel(n_jobs=n_jobs)(
        delayed(_critical_batch)(event, r, n, [seeds[i] for i in g], budget) for g in groups
    )
    out = np.empty(trials)
    for g, res in zip(groups, parts):
        out[g] = res
    return out


class BisectionError(ValueError):
    pass


def bisect_half(crit: np.ndarray, iterations: int = 12) -> float:
    """Bisection on [0, 1] for the p where the success fraction reaches 1/2."""
    def phat(p):
        return float(np.mean(crit < p))

    lo, hi = 0.0, 1.0
    if phat(lo) >= 0.5:
        raise BisectionError("event succeeds in at least half the trials at p = 0")
    if phat(hi) < 0.5:
        raise BisectionError("event fails in more than half the trials at p = 1")
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if phat(mid) >= 0.5:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


@dataclass
class ThresholdFit:
    p_half_by_n: dict[int, float]
    slope: float
    intercept: float
    predicted_exponent: Fraction
    residuals: list[float] = field(default_factory=list)

    @property
    def predicted_slope(self) -> float:
        return -1 / float(self.predicted_exponent)

    def as_dict(self) -> dict:
        d = self.predicted_exponent
        return {
            "pHalfByN": {str(n): p for n, p in self.p_half_by_n.items()},
            "slope": self.slope,
            "predictedSlope": self.predicted_slope,
            "predictedSlopeExact": f"-{d.denominator}/{d.numerator}",
            "residuals": self.residuals,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


class ThresholdEstimator(BaseEstimator):
    """Fit the exponent of a random-hypergraph threshold.

    ``fit(n_values)`` locates, for each n, the p where the event's success
    fraction crosses 1/2 (bisection over ``iterations`` halvings), then
    fits log p½ against log n by least squares.
    """

    def __init__(self, event=None, trials=200, iterations=12, seed=0, budget=DEFAULT_BUDGET, n_jobs=1):
        self.event = event
        self.trials = trials
        self.iterations = iterations
        self.seed = seed
        self.budget = budget
        self.n_jobs = n_jobs

    def fit(self, n_values, y=None):
        ns = check_n_values(n_values, minimum=3)
        if self.event is None:
            raise ValueError("ThresholdEstimator needs an event")
        p_half = {}
        self.critical_ = {}
        for n in ns:
            crit = critical_probabilities(self.event, n, self.trials, self.seed, self.budget, self.n_jobs)
            self.critical_[n] = crit
            try:
                p_half[n] = bisect_half(crit, self.iterations)
            except BisectionError as exc:
                raise BisectionError(f"n={n}: {exc}") from None
        x = np.log(np.array(ns, dtype=float))
        yv = np.log(np.array([p_half[n] for n in ns]))
        slope, intercept = np.polyfit(x, yv, 1)
        self.p_half_ = p_half
        self.slope_ = float(slope)
        self.intercept_ = float(intercept)
        self.residuals_ = [float(v) for v in yv - (slope * x + intercept)]
        self.predicted_exponent_ = self.event.predicted_exponent()
        return self

    def predict(self, n_values):
        """Fitted p½ at each n."""
        check_is_fitted(self, "slope_")
        ns = np.asarray(n_values, dtype=float)
        return np.exp(self.intercept_ + self.slope_ * np.log(ns))

    def to_fit(self) -> ThresholdFit:
        check_is_fitted(self, "slope_")
        return ThresholdFit(dict(self.p_half_), self.slope_, self.intercept_, self.predicted_exponent_, list(self.residuals_))


def fit_threshold(event, n_list: Sequence[int], trials: int = 200, tol: float = 2.0**-12, seed: int = 0,
                  budget: int = DEFAULT_BUDGET, n_jobs: int = 1) -> ThresholdFit:
    """Bisect each p½ to within ``tol`` and fit the log-log slope."""
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1)")
    iterations = max(1, math.ceil(-math.log2(tol)))
    est = ThresholdEstimator(event, trials=trials, iterations=iterations, seed=seed, budget=budget, n_jobs=n_jobs)
    return est.fit(n_list).to_fit()


def estimate_from_critical(crit: np.ndarray, p: float) -> int:
    """Successes at probability p implied by per-trial critical values."""
    return int(np.sum(crit < p))

