"""Exact expected influence by enumerating edge realizations.

Edges with p = 1 are always present and edges with p = 0 never are, so only
the 0 < p < 1 edges enter the enumeration. Realization r keeps stochastic
edge j iff bit j of r is set; realizations are evaluated in blocks of
consecutive indices and summed in index order, so results do not depend on
the block size.
"""
import logging
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exceptions import CapacityError, DomainError
from .utils import (OPT_MAX_SUBSETS, ORACLE_BLOCK_CELLS,
                    ORACLE_MAX_STOCHASTIC_EDGES)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactInfluence:
    value: float
    realizations: int


@dataclass(frozen=True)
class ExactOptimum:
    value: float
    argmax: frozenset

    def __iter__(self):
        return iter((self.value, self.argmax))


@dataclass(frozen=True)
class ChernoffPlan:
    additive_err: float
    confidence: float
    trials: int

    @property
    def failure_bound(self):
        return chernoff_bound(self.trials, self.additive_err)


def block_size(cells):
    return max(1, ORACLE_BLOCK_CELLS // max(1, cells))


class _Realizations:
    def __init__(self, g):
        self.n = g.n
        self.certain = [(u, v) for u, v, p in g.edge_list if p >= 1.0]
        self.stochastic = [(u, v) for u, v, p in g.edge_list
                           if 0.0 < p < 1.0]
        if len(self.stochastic) > ORACLE_MAX_STOCHASTIC_EDGES:
            raise CapacityError(
                f'{len(self.stochastic)} edges with 0 < p < 1 are too many '
                f'to enumerate', ORACLE_MAX_STOCHASTIC_EDGES)
        self.p = np.array([p for _, _, p in g.edge_list if 0.0 < p < 1.0],
                          dtype=np.float64)
        self.count = 1 << len(self.stochastic)

    def blocks(self, cells):
        """Realization blocks sized so ``block * cells`` stays bounded."""
        size = block_size(cells)
        bits = np.arange(len(self.stochastic), dtype=np.int64)
        for start in range(0, self.count, size):
            index = np.arange(start, min(self.count, start + size),
                              dtype=np.int64)
            present = ((index[:, None] >> bits) & 1).astype(bool)
            weights = np.where(present, self.p, 1.0 - self.p).prod(axis=1)
            yield present, weights

    def propagate(self, reach, present):
        """Close ``reach[..., v]`` under the realized edges, in place."""
        while True:
            before = int(np.count_nonzero(reach))
            for u, v in self.certain:
                reach[..., v] |= reach[..., u]
            for j, (u, v) in enumerate(self.stochastic):
                mask = present[:, j].reshape((-1,) + (1,) * (reach.ndim - 2))
                reach[..., v] |= reach[..., u] & mask
            if int(np.count_nonzero(reach)) == before:
                return reach


def exact_influence(g, S):
    """E_G[|reach(S)|] summed over every realization of the graph."""
    seeds = sorted(set(S))
    for v in seeds:
        g.check_node(v)
    realizations = _Realizations(g)
    total = 0.0
    for present, weights in realizations.blocks(g.n):
        reach = np.zeros((len(weights), g.n), dtype=bool)
        reach[:, seeds] = True
        realizations.propagate(reach, present)
        total += float(weights @ reach.sum(axis=1))
    logger.debug('exact influence of %s over %d realizations: %r', seeds,
                 realizations.count, total)
    return ExactInfluence(total, realizations.count)


def exact_opt(g, k):
    """Maximum expected influence over k-subsets; ties go to the
    lexicographically smallest subset."""
    if not 1 <= k <= g.n:
        raise DomainError(f'k must lie in [1, {g.n}], got {k}')
    subsets = math.comb(g.n, k)
    if subsets > OPT_MAX_SUBSETS:
        raise CapacityError(f'C({g.n}, {k}) = {subsets} subsets',
                            OPT_MAX_SUBSETS)
    realizations = _Realizations(g)
    candidates = list(combinations(range(g.n), k))
    values = np.zeros(len(candidates), dtype=np.float64)
    for present, weights in realizations.blocks(g.n * g.n):
        reach = np.zeros((len(weights), g.n, g.n), dtype=bool)
        reach[:, np.arange(g.n), np.arange(g.n)] = True
        realizations.propagate(reach, present)
        for position, subset in enumerate(candidates):
            covered = reach[:, list(subset), :].any(axis=1).sum(axis=1)
            values[position] += float(weights @ covered)
    best = float(values.max())
    position = int(np.argmax(values >= best - 1e-9 * max(1.0, best)))
    return ExactOptimum(float(values[position]),
                        frozenset(candidates[position]))


def chernoff_bound(trials, additive_err):
    """Two-sided failure bound 2 exp(-N λ² / 4)."""
    return 2.0 * math.exp(-trials * additive_err ** 2 / 4.0)


def chernoff_trials(additive_err, confidence):
    """Smallest N with 2 exp(-N λ² / 4) <= 1 - confidence."""
    if not 0.0 < additive_err < 1.0:
        raise DomainError(
            f'additive error must lie in (0, 1), got {additive_err}')
    if not 0.0 < confidence < 1.0:
        raise DomainError(
            f'confidence must lie in (0, 1), got {confidence}')
    allowed = 1.0 - confidence
    trials = max(1, math.ceil(
        4.0 * math.log(2.0 / allowed) / additive_err ** 2))
    while trials > 1 and chernoff_bound(trials - 1, additive_err) <= allowed:
        trials -= 1
    while chernoff_bound(trials, additive_err) > allowed:
        trials += 1
    return ChernoffPlan(additive_err, confidence, trials)
