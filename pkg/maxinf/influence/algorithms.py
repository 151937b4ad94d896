"""Influence maximization on top of the RR-set sketch.

All logarithms are natural. Budgets:

* ``maximize``: R = ceil(l * 144 (m + n) eps^-3 ln n), where l is the
  error boost; the best of ``repetitions`` independent sketches (the one
  with most hyperedges) is kept.
* ``maximize_sublinear``: R = ceil(beta * 144 C (n + m) ln n), C = 48 * 6^3.
* ``maximize_anytime``: the sublinear budget with beta = 1, snapshotted at
  every power-of-two step count.
"""
import logging
import math
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .exceptions import DomainError
from .rng import RngStream
from .selection import SeedSet, build_seed_set
from .sketch import (StepBudget, build_hypergraph, coverage, max_degree,
                     sample_degree_proportional)
from .utils import (BRANCH_DEGREE_SAMPLE, BRANCH_GREEDY, BRANCH_TRIVIAL,
                    BRANCH_UNION, SKETCH_CONSTANT, STREAM_PICK,
                    STREAM_REPETITION, STREAM_SKETCH, SUBLINEAR_C)

logger = logging.getLogger(__name__)


def _check_budget(budget):
    if budget is not None and (int(budget) != budget or budget < 1):
        raise DomainError(
            f'budget override must be a positive integer, got {budget}')


@dataclass(frozen=True)
class MaximizeParams:
    epsilon: float
    k: int
    seed: int
    repetitions: int = 1
    ell_boost: int = 1
    budget: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise DomainError(
                f'epsilon must lie in (0, 1), got {self.epsilon}')
        if self.k < 1:
            raise DomainError(f'k must be positive, got {self.k}')
        if self.repetitions < 1 or self.ell_boost < 1:
            raise DomainError('repetitions and ell_boost must be positive')
        _check_budget(self.budget)


@dataclass(frozen=True)
class SublinearParams:
    beta: float
    k: int
    seed: int
    C: int = SUBLINEAR_C
    budget: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.beta <= 1.0:
            raise DomainError(f'beta must lie in (0, 1], got {self.beta}')
        if self.k < 1:
            raise DomainError(f'k must be positive, got {self.k}')
        if self.C != SUBLINEAR_C:
            raise DomainError(f'C is fixed at {SUBLINEAR_C}')
        _check_budget(self.budget)


@dataclass(frozen=True)
class AnytimeSolution:
    seeds: SeedSet
    steps_at_snapshot: int
    snapshot_index: int

    @property
    def m_H(self):
        return self.seeds.m_H


def maximize_budget(g, epsilon, ell_boost=1):
    return math.ceil(ell_boost * SKETCH_CONSTANT * (g.m + g.n)
                     * epsilon ** -3 * math.log(g.n))


def sublinear_budget(g, beta):
    return math.ceil(beta * SKETCH_CONSTANT * SUBLINEAR_C * (g.n + g.m)
                     * math.log(g.n))


def degree_threshold(n):
    """Max sketch degree above which the greedy answer is trusted (k = 1)."""
    return 2 * SUBLINEAR_C * math.log(n)


def _is_trivial(g, k):
    if k < 1:
        raise DomainError(f'k must be positive, got {k}')
    return g.n < 2 or k >= g.n


def _all_nodes(g, k):
    return SeedSet(seeds=list(range(g.n)), covered_edges=0,
                   estimate=float(g.n), requested_k=k,
                   branch=BRANCH_TRIVIAL)


def maximize(g, params, workers=1):
    """Greedy seeds from the largest of ``repetitions`` sketches."""
    if _is_trivial(g, params.k):
        return _all_nodes(g, params.k)
    R = params.budget or maximize_budget(g, params.epsilon, params.ell_boost)
    budget = StepBudget(R)
    streams = [RngStream(params.seed, STREAM_REPETITION).substream(rep)
               for rep in range(params.repetitions)]
    if workers > 1 and params.repetitions > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            sketches = list(pool.map(build_hypergraph,
                                     [g] * len(streams),
                                     [budget] * len(streams), streams))
    else:
        sketches = [build_hypergraph(g, budget, rng) for rng in streams]
    best = max(sketches, key=lambda sketch: sketch.m)
    logger.info('maximize: R=%d, hyperedges per repetition %s, kept %d',
                R, [sketch.m for sketch in sketches], best.m)
    result = build_seed_set(best, params.k)
    result.steps = sum(sketch.steps_used for sketch in sketches)
    return result


def _sublinear_solution(sketch, k, pick_rng):
    n = sketch.n
    v = sample_degree_proportional(sketch, pick_rng)
    if k > 1:
        result = build_seed_set(sketch, k - 1)
        if v in result:
            result = build_seed_set(sketch, k)
        else:
            seeds = result.seeds + [v]
            result.seeds = seeds
            result.covered_edges = coverage(sketch, seeds)
            result.estimate = n * result.covered_edges / sketch.m
        result.requested_k = k
        result.branch = BRANCH_UNION
        return result
    result = build_seed_set(sketch, 1)
    _, top = max_degree(sketch)
    if top > degree_threshold(n):
        logger.debug('max degree %d above threshold; greedy answer', top)
        return result
    covered = sketch.degrees[v]
    return SeedSet(seeds=[v], covered_edges=covered,
                   estimate=n * covered / sketch.m, requested_k=k,
                   m_H=sketch.m, steps=sketch.steps_used,
                   branch=BRANCH_DEGREE_SAMPLE)


def maximize_sublinear(g, params):
    if _is_trivial(g, params.k):
        return _all_nodes(g, params.k)
    R = params.budget or sublinear_budget(g, params.beta)
    sketch = build_hypergraph(g, StepBudget(R),
                              RngStream(params.seed, STREAM_SKETCH))
    result = _sublinear_solution(sketch, params.k,
                                 RngStream(params.seed, STREAM_PICK))
    logger.info('maximize_sublinear: R=%d m_H=%d branch=%s', R, sketch.m,
                result.branch)
    return result


def _stop_predicate(stop):
    if stop is None:
        return None
    if isinstance(stop, threading.Event):
        return lambda steps: stop.is_set()
    return stop


def snapshot_index(steps):
    """Smallest i with steps <= 2**i."""
    return max(steps - 1, 0).bit_length()


def maximize_anytime(g, k, seed, stop=None, budget=None, on_snapshot=None):
    """Sublinear algorithm with beta = 1 that can be stopped at any time.

    At each power-of-two checkpoint the solution for the current sketch is
    stored; a stop returns the latest one. Without a stop the final
    solution comes from the full sketch and matches ``maximize_sublinear``
    with beta = 1 and the same seed and budget.
    """
    if _is_trivial(g, k):
        return AnytimeSolution(_all_nodes(g, k), 0, 0)
    _check_budget(budget)
    R = budget or sublinear_budget(g, 1.0)
    latest = None

    def checkpoint(index, sketch):
        nonlocal latest
        if latest is not None and latest.m_H == sketch.m:
            seeds = latest.seeds
        else:
            seeds = _sublinear_solution(sketch, k, RngStream(seed,
                                                             STREAM_PICK))
        latest = AnytimeSolution(seeds, sketch.steps_used, index)
        logger.debug('snapshot %d: steps=%d m_H=%d', index,
                     sketch.steps_used, sketch.m)
        if on_snapshot is not None:
            on_snapshot(latest)

    sketch = build_hypergraph(g, StepBudget(R), RngStream(seed,
                                                          STREAM_SKETCH),
                              checkpoint=checkpoint,
                              stop=_stop_predicate(stop))
    if sketch.steps_used < R and latest is not None:
        logger.info('anytime stopped at %d steps; returning snapshot %d',
                    sketch.steps_used, latest.snapshot_index)
        return latest
    final = AnytimeSolution(
        _sublinear_solution(sketch, k, RngStream(seed, STREAM_PICK)),
        sketch.steps_used, snapshot_index(sketch.steps_used))
    if on_snapshot is not None:
        on_snapshot(final)
    return final


BRANCHES = (BRANCH_GREEDY, BRANCH_DEGREE_SAMPLE, BRANCH_UNION,
            BRANCH_TRIVIAL)
