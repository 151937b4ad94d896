"""Instance generators and the benchmark harness.

Rows are scored with the exact oracle, or in closed form on lower-bound
instances, and compared against OPT. Aggregate rows apply the success
thresholds of the algorithms: 1 - 1/e - eps for ``maximize`` and
min(1/4, beta) for ``sublinear``.
"""
import csv
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
from scipy import stats

from .algorithms import (MaximizeParams, SublinearParams, maximize,
                         maximize_sublinear)
from .cascade import estimate_influence_mc
from .exceptions import CapacityError, DomainError
from .graph import WeightedDigraph
from .oracle import chernoff_trials, exact_influence, exact_opt
from .rng import RngStream
from .selection import SeedSet
from .sketch import StepBudget, build_hypergraph
from .utils import (BRANCH_GREEDY, OVERLAY_WEIGHT, STREAM_ESTIMATE,
                    STREAM_GENERATOR, STREAM_SKETCH)

logger = logging.getLogger(__name__)

CSV_HEADER = ('instance', 'algo', 'k', 'param', 'seed', 'achieved', 'opt',
              'ratio', 'steps', 'ms')
AGG_PREFIX = '#agg'
SKIP_PREFIX = '#skip'
REQUIRED_RATE = 0.6
SIGNIFICANCE = 0.05

ALGO_MAXIMIZE = 'maximize'
ALGO_SUBLINEAR = 'sublinear'
ALGO_MC_GREEDY = 'mc-greedy'
ALGORITHMS = (ALGO_MAXIMIZE, ALGO_SUBLINEAR, ALGO_MC_GREEDY)


@dataclass(frozen=True)
class PDist:
    """Edge probability distribution: fixed, uniform(lo, hi) or choice."""

    kind: str
    values: Tuple[float, ...]

    def __post_init__(self):
        if self.kind not in ('fixed', 'uniform', 'choice'):
            raise DomainError(f'unknown probability distribution {self.kind}')
        if not self.values or any(not 0.0 <= p <= 1.0 for p in self.values):
            raise DomainError(
                f'probabilities must lie in [0, 1], got {self.values}')
        if self.kind == 'fixed' and len(self.values) != 1:
            raise DomainError('fixed takes exactly one probability')
        if self.kind == 'uniform' and (
                len(self.values) != 2 or self.values[0] > self.values[1]):
            raise DomainError('uniform takes lo,hi with lo <= hi')

    @classmethod
    def fixed(cls, p):
        return cls('fixed', (float(p),))

    @classmethod
    def uniform(cls, lo, hi):
        return cls('uniform', (float(lo), float(hi)))

    @classmethod
    def choice(cls, *ps):
        return cls('choice', tuple(float(p) for p in ps))

    @classmethod
    def parse(cls, text):
        """``fixed:0.1``, ``uniform:0.1,0.9`` or ``choice:0.3,0.5,1``."""
        kind, _, rest = text.partition(':')
        try:
            values = tuple(float(token) for token in rest.split(',') if token)
        except ValueError:
            raise DomainError(
                f'cannot parse probability distribution {text!r}')
        return cls(kind, values)

    def draw(self, generator, size):
        if self.kind == 'fixed':
            return np.full(size, self.values[0])
        if self.kind == 'uniform':
            return generator.uniform(self.values[0], self.values[1], size)
        return generator.choice(np.array(self.values), size)


def gen_random(n, m, p_dist, seed, allow_parallel=False):
    """m directed non-loop edges chosen uniformly; deterministic per seed."""
    pairs = n * (n - 1)
    if n < 0 or m < 0:
        raise DomainError('n and m must be nonnegative')
    if m > 0 and pairs == 0:
        raise DomainError(f'no ordered pairs available on {n} nodes')
    if not allow_parallel and m > pairs:
        raise DomainError(
            f'm = {m} exceeds the {pairs} ordered pairs of {n} nodes')
    generator = RngStream(seed, STREAM_GENERATOR).generator()
    if m:
        picks = np.sort(generator.choice(pairs, size=m,
                                         replace=allow_parallel))
    else:
        picks = np.zeros(0, dtype=np.int64)
    probabilities = p_dist.draw(generator, m)
    edges = []
    for pick, p in zip(picks.tolist(), probabilities.tolist()):
        u, rest = divmod(pick, n - 1)
        v = rest if rest < u else rest + 1
        edges.append((u, v, p))
    return WeightedDigraph(n, edges)


def gen_lower_bound(n, T, k, overlay_degree=None,
                    overlay_weight=OVERLAY_WEIGHT, seed=0):
    """k directed p=1 cycles on 2T nodes each, then singletons.

    Cycle j occupies ids [2Tj, 2T(j + 1)). The optional overlay adds a
    random d-regular graph, both directions, with weight ``overlay_weight``.
    """
    if n < 1 or T < 1 or k < 1:
        raise DomainError('n, T and k must be positive')
    if 2 * k * T > n:
        raise DomainError(
            f'2kT = {2 * k * T} exceeds n = {n}: the family needs 2kT <= n')
    size = 2 * T
    edges = []
    for j in range(k):
        base = size * j
        edges.extend((base + i, base + (i + 1) % size, 1.0)
                     for i in range(size))
    if overlay_degree:
        try:
            overlay = nx.random_regular_graph(overlay_degree, n, seed=seed)
        except nx.NetworkXError as error:
            raise DomainError(f'no {overlay_degree}-regular overlay on '
                              f'{n} nodes: {error}')
        for u, v in sorted(overlay.edges()):
            edges.append((u, v, overlay_weight))
            edges.append((v, u, overlay_weight))
    return WeightedDigraph(n, edges)


@dataclass(frozen=True)
class LowerBoundInstance:
    n: int
    T: int
    k: int
    overlay_degree: Optional[int] = None
    overlay_weight: float = OVERLAY_WEIGHT
    seed: int = 0

    @property
    def graph(self):
        return gen_lower_bound(self.n, self.T, self.k, self.overlay_degree,
                               self.overlay_weight, self.seed)

    @property
    def opt(self):
        return 2 * self.k * self.T

    def component(self, v):
        j = v // (2 * self.T)
        return j if j < self.k else None

    def influence(self, seeds):
        """Exact influence without the overlay: 2T per cycle hit, 1 per
        singleton."""
        seeds = set(seeds)
        cycles = {self.component(v) for v in seeds} - {None}
        singletons = sum(1 for v in seeds if self.component(v) is None)
        return float(2 * self.T * len(cycles) + singletons)


def mc_greedy(g, k, trials, rng):
    """Greedy over Monte-Carlo influence estimates."""
    k = min(k, g.n)
    seeds = []
    steps = 0
    value = 0.0
    for _ in range(k):
        best, best_value = None, -1.0
        for v in range(g.n):
            if v in seeds:
                continue
            estimate = estimate_influence_mc(g, seeds + [v], trials, rng)
            steps += estimate.steps_total
            if estimate.mean > best_value:
                best, best_value = v, estimate.mean
        seeds.append(best)
        value = best_value
    return SeedSet(seeds=seeds, covered_edges=0, estimate=value,
                   requested_k=k, steps=steps, branch=BRANCH_GREEDY)


@dataclass(frozen=True)
class BenchAlgorithm:
    """``param`` is epsilon, beta, or the additive error of mc-greedy."""

    name: str
    param: float
    budget: Optional[int] = None
    repetitions: int = 1
    confidence: float = 0.9

    def __post_init__(self):
        if self.name not in ALGORITHMS:
            raise DomainError(f'unknown algorithm {self.name}; choose from '
                              f'{", ".join(ALGORITHMS)}')

    @property
    def threshold(self):
        if self.name == ALGO_SUBLINEAR:
            return min(0.25, self.param)
        return 1.0 - 1.0 / math.e - self.param

    def run(self, g, k, seed):
        if self.name == ALGO_MAXIMIZE:
            return maximize(g, MaximizeParams(
                epsilon=self.param, k=k, seed=seed,
                repetitions=self.repetitions, budget=self.budget))
        if self.name == ALGO_SUBLINEAR:
            return maximize_sublinear(g, SublinearParams(
                beta=self.param, k=k, seed=seed, budget=self.budget))
        plan = chernoff_trials(self.param, self.confidence)
        return mc_greedy(g, k, plan.trials, RngStream(seed, STREAM_ESTIMATE))


@dataclass
class BenchInstance:
    name: str
    graph: WeightedDigraph
    k: int
    lower_bound: Optional[LowerBoundInstance] = None

    @classmethod
    def from_lower_bound(cls, family, name=None):
        return cls(name or f'lower-bound-n{family.n}-T{family.T}-k{family.k}',
                   family.graph, family.k, family)

    def opt(self):
        if self.lower_bound is not None:
            return float(self.lower_bound.opt)
        return exact_opt(self.graph, self.k).value

    def score(self, seeds):
        if self.lower_bound is not None:
            return self.lower_bound.influence(seeds)
        return exact_influence(self.graph, seeds).value


@dataclass
class BenchRow:
    instance: str
    algo: str
    k: int
    param: float
    seed: int
    achieved: float
    opt: float
    ratio: float
    steps: int
    ms: float
    success: bool = False


@dataclass
class BenchAggregate:
    instance: str
    algo: str
    k: int
    param: float
    trials: int
    successes: int
    rate: float
    mean_ratio: float
    passed: bool


@dataclass
class BenchSkip:
    instance: str
    algo: str
    seed: Optional[int]
    reason: str


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)
    aggregates: List[BenchAggregate] = field(default_factory=list)
    skipped: List[BenchSkip] = field(default_factory=list)


def acceptance_pvalue(successes, trials, p=REQUIRED_RATE):
    """Exact one-sided p-value of H0: success rate <= p."""
    return stats.binomtest(successes, trials, p, alternative='greater').pvalue


def passes(successes, trials):
    """PASS once H0: success rate <= 0.6 is rejected at the 95% level."""
    return trials > 0 and acceptance_pvalue(successes, trials) < SIGNIFICANCE


def _run_trial(instance, algorithm, seed, opt, deterministic):
    started = time.perf_counter()
    result = algorithm.run(instance.graph, instance.k, seed)
    elapsed = 0.0 if deterministic else round(
        (time.perf_counter() - started) * 1000.0, 3)
    try:
        achieved = instance.score(result.seeds)
    except CapacityError as error:
        return BenchSkip(instance.name, algorithm.name, seed, str(error))
    ratio = min(1.0, achieved / opt) if opt > 0 else 1.0
    success = achieved >= algorithm.threshold * opt - 1e-9
    return BenchRow(instance.name, algorithm.name, instance.k,
                    algorithm.param, seed, achieved, opt, ratio,
                    result.steps, elapsed, success)


def _aggregate(rows):
    grouped = {}
    for row in rows:
        key = (row.instance, row.algo, row.k, row.param)
        grouped.setdefault(key, []).append(row)
    aggregates = []
    for (name, algo, k, param), group in grouped.items():
        successes = sum(row.success for row in group)
        aggregates.append(BenchAggregate(
            name, algo, k, param, len(group), successes,
            successes / len(group),
            sum(row.ratio for row in group) / len(group),
            passes(successes, len(group))))
    return aggregates


def run_bench(corpus, algorithms, trials, out=None, seed=0, workers=1,
              deterministic=True):
    """Run every algorithm ``trials`` times on every instance.

    Trial t uses seed ``seed + t``. Instances whose OPT exceeds the oracle
    capacity are skipped with the reason recorded.
    """
    report = BenchReport()
    tasks = []
    for instance in corpus:
        try:
            opt = instance.opt()
        except CapacityError as error:
            logger.warning('skipping %s: %s', instance.name, error)
            for algorithm in algorithms:
                report.skipped.append(
                    BenchSkip(instance.name, algorithm.name, None,
                              str(error)))
            continue
        for algorithm in algorithms:
            tasks.extend((instance, algorithm, seed + trial, opt,
                          deterministic) for trial in range(trials))
    if workers > 1 and tasks:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_trial, *zip(*tasks)))
    else:
        outcomes = [_run_trial(*task) for task in tasks]
    for outcome in outcomes:
        if isinstance(outcome, BenchSkip):
            logger.warning('skipped %s/%s seed %s: %s', outcome.instance,
                           outcome.algo, outcome.seed, outcome.reason)
            report.skipped.append(outcome)
        else:
            report.rows.append(outcome)
    report.aggregates = _aggregate(report.rows)
    if out is not None:
        write_csv(report, out)
    return report


def write_csv(report, sink):
    writer = csv.writer(sink, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow((row.instance, row.algo, row.k, repr(row.param),
                         row.seed, repr(row.achieved), repr(row.opt),
                         repr(row.ratio), row.steps, repr(row.ms)))
    for agg in report.aggregates:
        writer.writerow((AGG_PREFIX, agg.instance, agg.algo, agg.k,
                         repr(agg.param), agg.trials, agg.successes,
                         repr(agg.rate), repr(agg.mean_ratio),
                         'PASS' if agg.passed else 'FAIL'))
    for skip in report.skipped:
        writer.writerow((SKIP_PREFIX, skip.instance, skip.algo,
                         '' if skip.seed is None else skip.seed,
                         skip.reason))


def star_graph(leaves=5):
    """Node 0 points at every leaf with p = 1; its influence is leaves+1."""
    return WeightedDigraph(leaves + 1,
                           ((0, i, 1.0) for i in range(1, leaves + 1)))


def desk_corpus(count, seed, ks=(1, 2, 3), max_n=10, max_m=16,
                p_dist=PDist.choice(0.3, 0.5, 1.0)):
    """Small random instances the oracle can solve exactly."""
    generator = RngStream(seed, STREAM_GENERATOR).substream(count).generator()
    corpus = []
    for index in range(count):
        n = int(generator.integers(4, max_n + 1))
        m = int(generator.integers(n, min(max_m, n * (n - 1)) + 1))
        graph = gen_random(n, m, p_dist, seed + index)
        for k in ks:
            if k < n:
                corpus.append(BenchInstance(f'random-{index}-n{n}-m{m}',
                                            graph, k))
    return corpus


@dataclass
class ScalingFit:
    sizes: List[float]
    steps: List[int]
    ms: List[float]
    slope: float
    intercept: float
    r_squared: float
    ms_slope: float
    ms_intercept: float
    ms_r_squared: float


def _linear_fit(x, y):
    fit = stats.linregress(x, y)
    return float(fit.slope), float(fit.intercept), float(fit.rvalue) ** 2


def step_scaling(node_counts=(1000, 10000, 100000), edges_per_node=2,
                 scale=1.0, p=0.1, seed=0):
    """Sketch steps and wall-clock ms against (m + n) ln n.

    R is scale (m + n) ln n, so the step fit is nearly exact by
    construction; the ms fit is the one that checks linear running time.
    """
    sizes, steps, ms = [], [], []
    for n in node_counts:
        m = edges_per_node * n
        graph = gen_random(n, m, PDist.fixed(p), seed)
        size = (m + n) * math.log(n)
        started = time.perf_counter()
        sketch = build_hypergraph(
            graph, StepBudget(max(1, math.ceil(scale * size))),
            RngStream(seed, STREAM_SKETCH))
        ms.append((time.perf_counter() - started) * 1000.0)
        sizes.append(size)
        steps.append(sketch.steps_used)
        logger.info('scaling n=%d m=%d steps=%d', n, m, sketch.steps_used)
    x = np.array(sizes)
    return ScalingFit(sizes, steps, ms,
                      *_linear_fit(x, np.array(steps, dtype=np.float64)),
                      *_linear_fit(x, np.array(ms)))
