from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from influence.bench import LowerBoundInstance, PDist, gen_random
from influence.exceptions import CapacityError, DomainError
from influence.graph import WeightedDigraph
from influence.oracle import (block_size, chernoff_bound, chernoff_trials,
                              exact_influence, exact_opt)
from influence.utils import ORACLE_BLOCK_CELLS

from tests.utils import graphs


class Test06Oracle:

    def test_01_single_edge(self):
        graph = WeightedDigraph(2, [(0, 1, 0.5)])
        exact = exact_influence(graph, [0])
        assert (exact.value, exact.realizations) == (1.5, 2), (
            'A single p = 1/2 edge gives E[I({0})] = 1.5 over 2 realizations.'
        )

    def test_02_half_path(self, half_path):
        exact = exact_influence(half_path, [0])
        assert exact.value == pytest.approx(1.75)
        assert exact.realizations == 4
        assert exact_influence(half_path, [0, 2]).value == pytest.approx(2.5)

    def test_03_certain_edges_are_not_enumerated(self):
        graph = WeightedDigraph(3, [(0, 1, 1.0), (1, 2, 0.0), (2, 0, 0.5)])
        exact = exact_influence(graph, [0])
        assert (exact.value, exact.realizations) == (2.0, 2), (
            'Only edges with 0 < p < 1 are enumerated.'
        )

    def test_04_capacity(self, edgeless):
        graph = WeightedDigraph(24, [(i, i + 1, 0.5) for i in range(23)])
        with pytest.raises(CapacityError) as info:
            exact_influence(graph, [0])
        assert info.value.limit == 22, (
            'The oracle refuses more than 22 stochastic edges.'
        )
        with pytest.raises(CapacityError):
            exact_opt(WeightedDigraph(40), 5)
        with pytest.raises(DomainError):
            exact_opt(edgeless, 0)
        with pytest.raises(DomainError):
            exact_opt(edgeless, 6)

    def test_05_exact_opt(self, star, edgeless):
        value, argmax = exact_opt(star, 1)
        assert (value, argmax) == (6.0, frozenset({0}))
        assert exact_opt(edgeless, 2).argmax == frozenset({0, 1}), (
            'Ties between subsets go to the lexicographically smallest one.'
        )
        family = LowerBoundInstance(8, 1, 2)
        assert exact_opt(family.graph, 2).value == family.opt

    def test_06_exact_opt_is_the_best_subset(self):
        graph = gen_random(6, 8, PDist.choice(0.3, 0.5, 1.0), seed=4)
        optimum = exact_opt(graph, 2)
        values = {subset: exact_influence(graph, subset).value
                  for subset in combinations(range(6), 2)}
        assert optimum.value == pytest.approx(max(values.values()))
        assert values[tuple(sorted(optimum.argmax))] == pytest.approx(
            optimum.value)

    @given(graphs(max_nodes=6, max_edges=8), st.data())
    @settings(max_examples=60, deadline=None)
    def test_07_monotone_and_submodular(self, graph, data):
        node = st.integers(min_value=0, max_value=graph.n - 1)
        small = data.draw(st.sets(node))
        large = small | data.draw(st.sets(node))
        v = data.draw(node)

        def influence(seeds):
            return exact_influence(graph, seeds).value if seeds else 0.0

        assert influence(small) <= influence(large) + 1e-9, (
            'Expected influence must be monotone.'
        )
        gain_small = influence(small | {v}) - influence(small)
        gain_large = influence(large | {v}) - influence(large)
        assert gain_small >= gain_large - 1e-9, (
            'Expected influence must be submodular.'
        )

    def test_08_chernoff(self):
        assert chernoff_trials(0.1, 0.99).trials == 2120
        assert chernoff_trials(0.5, 0.9).trials == 48
        plan = chernoff_trials(0.2, 0.95)
        assert plan.failure_bound <= 1 - 0.95, (
            'The planned trial count must meet the requested confidence.'
        )
        assert chernoff_bound(plan.trials - 1, 0.2) > 1 - 0.95, (
            'The planned trial count must be the smallest sufficient one.'
        )
        assert chernoff_bound(0, 0.1) == 2.0
        for err, confidence in ((0.0, 0.9), (1.0, 0.9), (0.1, 1.0)):
            with pytest.raises(DomainError):
                chernoff_trials(err, confidence)

    @given(graphs(max_nodes=7, probabilities=st.just(1.0)), st.data())
    @settings(max_examples=60, deadline=None)
    def test_09_certain_graphs_match_reachability(self, graph, data):
        seeds = data.draw(st.sets(
            st.integers(min_value=0, max_value=graph.n - 1), min_size=1))
        reachable = set(seeds)
        exported = graph.to_networkx()
        for v in seeds:
            reachable |= nx.descendants(exported, v)
        exact = exact_influence(graph, seeds)
        assert (exact.value, exact.realizations) == (len(reachable), 1), (
            'With p = 1 everywhere the exact influence is plain reachability.'
        )

    def test_10_large_graphs_use_small_blocks(self):
        n = 400
        assert block_size(n * n) * n * n <= ORACLE_BLOCK_CELLS, (
            'An n x n reachability block must fit the cell budget.'
        )
        assert block_size(n * n) < 1 << 8
        assert block_size(ORACLE_BLOCK_CELLS * 2) == 1
        edges = [(0, v, 0.5) for v in range(1, 9)]
        edges += [(9, v, 1.0) for v in range(10, 21)]
        graph = WeightedDigraph(n, edges)
        value, argmax = exact_opt(graph, 1)
        assert (value, argmax) == (pytest.approx(12.0), frozenset({9})), (
            'Blocks smaller than the realization count must still sum to '
            'the exact optimum.'
        )
        assert exact_influence(graph, [0]).value == pytest.approx(5.0)
