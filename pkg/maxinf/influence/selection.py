"""Greedy maximum coverage over an RR-set sketch.

Vertices sit in id-ordered groups of equal residual degree, and the groups
form a doubly-linked list in descending degree order. Killing a hyperedge
moves each of its members one group down: the group of degree d - 1 is
either the next group or a new one spliced in right after the current
group. The smallest id of the top group is the argmax, so ties go to the
smallest node id without scanning.
"""
import logging
from dataclasses import dataclass, field
from typing import List

from sortedcontainers import SortedList

from .exceptions import DomainError
from .utils import BRANCH_GREEDY

logger = logging.getLogger(__name__)

NIL = -1


@dataclass
class SeedSet:
    seeds: List[int]
    covered_edges: int
    estimate: float
    requested_k: int = 0
    m_H: int = 0
    steps: int = 0
    branch: str = BRANCH_GREEDY

    def __len__(self):
        return len(self.seeds)

    def __contains__(self, v):
        return v in self.seeds


@dataclass
class SelectionStats:
    placed: int = 0
    decrements: int = 0
    group_moves: int = 0
    scanned: int = 0
    filled: int = 0

    @property
    def work(self):
        return (self.placed + self.decrements + self.group_moves
                + self.scanned + self.filled)


class _Group:
    __slots__ = ('degree', 'prev', 'next', 'members')

    def __init__(self, degree, members=()):
        self.degree = degree
        self.prev = None
        self.next = None
        self.members = SortedList(members)


@dataclass
class DegreeBuckets:
    """Residual-degree groups over one sketch; the sketch is left intact."""

    sketch: object
    stats: SelectionStats = field(default_factory=SelectionStats)

    def __post_init__(self):
        sketch = self.sketch
        self.alive = bytearray(b'\x01') * sketch.m
        self.residual = list(sketch.degrees)
        self.chosen = bytearray(sketch.n)
        self.v_group = [None] * sketch.n
        self.top = None
        # Counting sort: one bucket per degree value, filled in id order.
        by_degree = [[] for _ in range(max(self.residual, default=0) + 1)]
        for v, degree in enumerate(self.residual):
            by_degree[degree].append(v)
        tail = None
        for degree in range(len(by_degree) - 1, -1, -1):
            members = by_degree[degree]
            if not members:
                continue
            group = _Group(degree, members)
            self._link_group_after(group, tail)
            tail = group
            for v in members:
                self.v_group[v] = group
            self.stats.placed += len(members)

    def _link_group_after(self, group, anchor):
        if anchor is None:
            group.next = self.top
            if self.top is not None:
                self.top.prev = group
            self.top = group
            return
        group.prev = anchor
        group.next = anchor.next
        if anchor.next is not None:
            anchor.next.prev = group
        anchor.next = group

    def _unlink_group(self, group):
        if group.prev is None:
            self.top = group.next
        else:
            group.prev.next = group.next
        if group.next is not None:
            group.next.prev = group.prev

    def _remove(self, v):
        group = self.v_group[v]
        group.members.remove(v)
        self.v_group[v] = None
        if not group.members:
            self._unlink_group(group)

    def _decrement(self, v):
        group = self.v_group[v]
        degree = group.degree - 1
        target = group.next
        if target is None or target.degree != degree:
            target = _Group(degree)
            self._link_group_after(target, group)
        self._remove(v)
        target.members.add(v)
        self.v_group[v] = target
        self.residual[v] = degree
        self.stats.group_moves += 1

    def top_degree(self):
        return self.top.degree if self.top is not None else 0

    def argmax(self):
        """Smallest id in the highest group."""
        self.stats.scanned += 1
        return self.top.members[0]

    def take(self, v):
        """Choose v; kill its alive hyperedges. Returns edges covered."""
        self._remove(v)
        self.chosen[v] = 1
        sketch = self.sketch
        covered = 0
        for e in sketch.incidence[v]:
            if not self.alive[e]:
                continue
            self.alive[e] = 0
            covered += 1
            for u in sketch.rr_sets[e]:
                self.stats.decrements += 1
                if u != v:
                    self._decrement(u)
        return covered


def _clamp(sketch, k):
    if k < 1:
        raise DomainError(f'k must be positive, got {k}')
    sketch.require_edges()
    if k > sketch.n:
        logger.warning('k=%d exceeds node count %d; clamped', k, sketch.n)
        return sketch.n
    return k


def _fill(chosen, seeds, k, n, stats=None):
    v = 0
    while len(seeds) < k and v < n:
        if stats is not None:
            stats.filled += 1
        if not chosen[v]:
            chosen[v] = 1
            seeds.append(v)
        v += 1


def _seed_set(sketch, seeds, covered, requested_k):
    return SeedSet(
        seeds=seeds,
        covered_edges=covered,
        estimate=sketch.n * covered / sketch.m,
        requested_k=requested_k,
        m_H=sketch.m,
        steps=sketch.steps_used,
    )


def build_seed_set(sketch, k, stats=None):
    """Greedy max coverage in time linear in the sketch size."""
    target = _clamp(sketch, k)
    buckets = DegreeBuckets(sketch, stats or SelectionStats())
    seeds = []
    covered = 0
    while len(seeds) < target and buckets.top_degree() > 0:
        v = buckets.argmax()
        covered += buckets.take(v)
        seeds.append(v)
    _fill(buckets.chosen, seeds, target, sketch.n, buckets.stats)
    return _seed_set(sketch, seeds, covered, k)


def naive_greedy(sketch, k):
    """Reference greedy: recount residual degrees every round."""
    target = _clamp(sketch, k)
    alive = [True] * sketch.m
    chosen = bytearray(sketch.n)
    seeds = []
    covered = 0
    while len(seeds) < target:
        best, best_degree = NIL, 0
        for v in range(sketch.n):
            if chosen[v]:
                continue
            degree = sum(1 for e in sketch.incidence[v] if alive[e])
            if degree > best_degree:
                best, best_degree = v, degree
        if best == NIL:
            break
        for e in sketch.incidence[best]:
            alive[e] = False
        chosen[best] = 1
        covered += best_degree
        seeds.append(best)
    _fill(chosen, seeds, target, sketch.n)
    return _seed_set(sketch, seeds, covered, k)
