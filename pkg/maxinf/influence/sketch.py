"""Hypergraph sketch of reverse-reachable sets built under a step budget.

A step is one coin flip of a transpose cascade; choosing a root costs one
more step. The budget is only checked between completed RR-sets, so the
last set may overshoot R by at most its own cost.
"""
import bisect
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cascade import spread
from .exceptions import BoundsError, DomainError, SketchStateError

logger = logging.getLogger(__name__)

SKETCH_HEADER = 'rrsketch'


@dataclass(frozen=True)
class StepBudget:
    R: int

    def __post_init__(self):
        if int(self.R) != self.R or self.R < 1:
            raise DomainError(f'step budget must be a positive integer, '
                              f'got {self.R}')


class RRSketch:
    """Bag of RR-sets with per-vertex incidence lists."""

    def __init__(self, n, budget_R=0):
        self.n = n
        self.budget_R = budget_R
        self.rr_sets = []
        self.roots = []
        self.costs = []
        self.incidence = [[] for _ in range(n)]
        self.degrees = [0] * n
        self.steps_used = 0
        # ends[i] is the total size of rr_sets[0..i].
        self.ends = []

    def __repr__(self):
        return (f'RRSketch(n={self.n}, m_H={self.m}, '
                f'steps_used={self.steps_used}, budget_R={self.budget_R})')

    @property
    def m(self):
        return len(self.rr_sets)

    @property
    def total_incidence(self):
        return self.ends[-1] if self.ends else 0

    def add(self, members, root, cost):
        index = len(self.rr_sets)
        rr_set = tuple(sorted(set(members)))
        self.rr_sets.append(rr_set)
        self.roots.append(root)
        self.costs.append(cost)
        for v in rr_set:
            self.incidence[v].append(index)
            self.degrees[v] += 1
        self.ends.append(self.total_incidence + len(rr_set))
        self.steps_used += cost

    def last_cost(self):
        return self.costs[-1] if self.costs else 0

    def require_edges(self):
        if not self.rr_sets:
            raise SketchStateError('sketch holds no RR-sets')

    def check_nodes(self, nodes):
        for v in nodes:
            if not 0 <= v < self.n:
                raise BoundsError(f'node {v} outside [0, {self.n})')


def _reverse_reachable(g, random):
    """One RR-set from a uniform root; cost counts the root choice."""
    root = min(int(random() * g.n), g.n - 1)
    members, flips = spread(g.in_edges, (root,), random)
    return members, root, flips + 1


def build_hypergraph(g, budget, rng, checkpoint=None, stop=None, workers=1):
    """Add RR-sets until at least ``budget.R`` steps have been spent.

    ``checkpoint(i, sketch)`` fires once for every threshold 2**i the next
    RR-set would cross, before that set is added, so the sketch it sees has
    spent at most 2**i steps. Thresholds crossed while the sketch is still
    empty are skipped. ``stop(steps_used)`` is polled between RR-sets once
    the sketch is nonempty.
    """
    if g.n < 1:
        raise DomainError('cannot sketch a graph without nodes')
    if not isinstance(budget, StepBudget):
        budget = StepBudget(budget)
    if workers > 1:
        if checkpoint is not None or stop is not None:
            raise DomainError(
                'checkpoints and stop signals need single-worker mode')
        return _build_parallel(g, budget, rng, workers)

    sketch = RRSketch(g.n, budget.R)
    random = rng.random
    index = 0
    threshold = 1
    while True:
        if stop is not None and sketch.m and stop(sketch.steps_used):
            logger.debug('sketch stopped at %d steps', sketch.steps_used)
            break
        members, root, cost = _reverse_reachable(g, random)
        total = sketch.steps_used + cost
        while threshold < total:
            if checkpoint is not None and sketch.m:
                checkpoint(index, sketch)
            index += 1
            threshold <<= 1
        sketch.add(members, root, cost)
        if sketch.steps_used >= budget.R:
            break
    logger.debug('sketch built: m_H=%d steps=%d R=%d', sketch.m,
                 sketch.steps_used, budget.R)
    return sketch


_shared_steps = None


def _init_worker(counter):
    global _shared_steps
    _shared_steps = counter


def _build_shard(g, R, rng):
    random = rng.random
    shard = []
    while True:
        members, root, cost = _reverse_reachable(g, random)
        shard.append((tuple(members), root, cost))
        with _shared_steps.get_lock():
            _shared_steps.value += cost
            spent = _shared_steps.value
        if spent >= R:
            return shard


def _build_parallel(g, budget, rng, workers):
    counter = multiprocessing.Value('q', 0)
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                             initargs=(counter,)) as pool:
        futures = [pool.submit(_build_shard, g, budget.R, rng.substream(i))
                   for i in range(workers)]
        shards = [future.result() for future in futures]
    sketch = RRSketch(g.n, budget.R)
    for shard in shards:
        for members, root, cost in shard:
            sketch.add(members, root, cost)
    logger.debug('parallel sketch built with %d workers: m_H=%d steps=%d',
                 workers, sketch.m, sketch.steps_used)
    return sketch


def coverage(sketch, S):
    """deg_H(S): number of RR-sets meeting S."""
    sketch.check_nodes(S)
    touched = set()
    for v in S:
        touched.update(sketch.incidence[v])
    return len(touched)


def estimate_set_influence(sketch, S):
    sketch.require_edges()
    return sketch.n * coverage(sketch, S) / sketch.m


def sample_degree_proportional(sketch, rng):
    """Vertex drawn with probability degree / total incidence.

    A uniform incidence is a hyperedge picked with weight |e| followed by a
    uniform member of it.
    """
    sketch.require_edges()
    draw = rng.below(sketch.total_incidence)
    index = bisect.bisect_right(sketch.ends, draw)
    start = sketch.ends[index - 1] if index else 0
    return sketch.rr_sets[index][draw - start]


def max_degree(sketch):
    best, best_degree = 0, -1
    for v, degree in enumerate(sketch.degrees):
        if degree > best_degree:
            best, best_degree = v, degree
    return best, max(best_degree, 0)


def format_sketch(sketch):
    lines = [f'{SKETCH_HEADER} n={sketch.n} m={sketch.m} '
             f'steps={sketch.steps_used}']
    lines.extend(' '.join(map(str, rr_set)) for rr_set in sketch.rr_sets)
    return '\n'.join(lines) + '\n'


def dump_sketch(sketch, sink):
    sink.write(format_sketch(sketch))


def sketch_from_sets(n, rr_sets, steps=None):
    """Sketch over given vertex sets; each set costs 1 unless ``steps``."""
    sketch = RRSketch(n)
    for position, members in enumerate(rr_sets):
        members = tuple(members)
        if not members:
            raise DomainError('RR-sets must be nonempty')
        sketch.check_nodes(members)
        cost = 1 if steps is None else steps[position]
        sketch.add(members, min(members), cost)
    sketch.budget_R = sketch.steps_used
    return sketch