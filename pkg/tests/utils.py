from itertools import combinations

from hypothesis import strategies as st

from influence.graph import WeightedDigraph, dump_edge_list
from influence.sketch import coverage, sketch_from_sets

PROBABILITIES = (0.0, 0.3, 0.5, 1.0)


@st.composite
def graphs(draw, max_nodes=8, max_edges=16, probabilities=None):
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    p = probabilities or st.sampled_from(PROBABILITIES)
    node = st.integers(min_value=0, max_value=n - 1)
    edges = draw(st.lists(st.tuples(node, node, p), max_size=max_edges))
    return WeightedDigraph(n, edges)


@st.composite
def sketches(draw, max_nodes=8, max_sets=12):
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    rr_sets = draw(st.lists(
        st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1),
        min_size=1, max_size=max_sets))
    return sketch_from_sets(n, rr_sets)


def best_coverage(sketch, k):
    """Exhaustive maximum coverage over all k-subsets."""
    k = min(k, sketch.n)
    return max(coverage(sketch, subset)
               for subset in combinations(range(sketch.n), k))


def write_graph(directory, graph, name):
    path = directory / name
    with open(path, 'w', encoding='utf-8') as sink:
        dump_edge_list(graph, sink)
    return str(path)


def write_text(directory, text, name='graph.tsv'):
    path = directory / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def check_seed_set(result, n, k, context):
    assert len(result.seeds) == min(k, n), (
        f'{context}: expected {min(k, n)} seeds, got {result.seeds}.'
    )
    assert len(set(result.seeds)) == len(result.seeds), (
        f'{context}: seeds must be distinct, got {result.seeds}.'
    )
    assert all(0 <= v < n for v in result.seeds), (
        f'{context}: every seed must be a node id in [0, {n}).'
    )
