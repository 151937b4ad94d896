"""Independent cascade simulation with step accounting.

One step is one edge coin. Every out-edge (in-edge for the transpose
direction) of every newly influenced vertex is flipped exactly once, so the
step count of a traversal is the degree sum over the influenced set.
"""
import enum
from dataclasses import dataclass
from typing import FrozenSet, NamedTuple

from .exceptions import DomainError


class Direction(str, enum.Enum):
    FORWARD = 'forward'
    TRANSPOSE = 'transpose'


@dataclass(frozen=True)
class CascadeOutcome:
    influenced: FrozenSet[int]
    steps: int

    def __len__(self):
        return len(self.influenced)


class InfluenceEstimate(NamedTuple):
    mean: float
    steps_total: int


def _adjacency(g, direction):
    if Direction(direction) is Direction.FORWARD:
        return g.edges, g.out_ids
    return g.in_edges, g.in_ids


def spread(adjacency, seeds, random):
    """DFS with an explicit stack; returns (influenced, steps)."""
    influenced = set(seeds)
    stack = list(seeds)
    steps = 0
    while stack:
        v = stack.pop()
        targets = adjacency[v]
        steps += len(targets)
        for u, p in targets:
            if p >= 1.0:
                live = True
            elif p <= 0.0:
                live = False
            else:
                live = random() < p
            if live and u not in influenced:
                influenced.add(u)
                stack.append(u)
    return influenced, steps


def _spread_cached(adjacency, ids, seeds, random, coin_cache):
    influenced = set(seeds)
    stack = list(seeds)
    steps = 0
    while stack:
        v = stack.pop()
        targets = adjacency[v]
        steps += len(targets)
        for (u, p), edge_id in zip(targets, ids[v]):
            live = coin_cache.get(edge_id)
            if live is None:
                live = p >= 1.0 or (p > 0.0 and random() < p)
                coin_cache[edge_id] = live
            if live and u not in influenced:
                influenced.add(u)
                stack.append(u)
    return influenced, steps


def _checked_seeds(g, seeds):
    ordered = sorted(set(seeds))
    if not ordered:
        raise DomainError('seed set must be nonempty')
    for v in ordered:
        g.check_node(v)
    return ordered


def simulate(g, seeds, direction, rng, coin_cache=None):
    """Realize C_g(seeds) for one sampled g (or g^T).

    With ``coin_cache`` (edge id -> realized bool) coins already decided by
    an earlier traversal are reused, so several calls see one realization.
    """
    ordered = _checked_seeds(g, seeds)
    adjacency, ids = _adjacency(g, direction)
    if coin_cache is None:
        influenced, steps = spread(adjacency, ordered, rng.random)
    else:
        influenced, steps = _spread_cached(
            adjacency, ids, ordered, rng.random, coin_cache)
    return CascadeOutcome(frozenset(influenced), steps)


def estimate_influence_mc(g, seeds, num_trials, rng):
    """Mean influenced-set size over ``num_trials`` forward cascades."""
    if num_trials < 1:
        raise DomainError(f'num_trials must be positive, got {num_trials}')
    ordered = _checked_seeds(g, seeds)
    random = rng.random
    total = 0
    steps_total = 0
    for _ in range(num_trials):
        influenced, steps = spread(g.edges, ordered, random)
        total += len(influenced)
        steps_total += steps
    return InfluenceEstimate(total / num_trials, steps_total)
