import io

import networkx as nx
import pytest
from hypothesis import given, settings

from influence.exceptions import BoundsError, DomainError, GraphParseError
from influence.graph import (WeightedDigraph, format_edge_list,
                             load_edge_list, load_edge_list_file,
                             transpose_neighbors)

from tests.utils import graphs, write_text


def parse(text):
    return load_edge_list(io.StringIO(text))


class Test01Graph:

    def test_01_parse_edge_list(self):
        graph = parse('nodes\t3\n0\t1\t0.5\n1\t2\t1\n')
        assert (graph.n, graph.m) == (3, 2), (
            'Make sure that the header fixes n and every record is an edge.'
        )
        assert graph.neighbors(0) == [(1, 0.5)]
        assert transpose_neighbors(graph, 2) == [(1, 1.0)], (
            'Make sure that the transpose view lists in-edges with their '
            'probabilities.'
        )
        assert graph.neighbors(2) == []

    def test_02_comments_blank_lines_and_inferred_n(self):
        graph = parse('# generated\n\n0\t4\t0.1\r\n# trailing\n')
        assert graph.n == 5, (
            'Without a header n must be one more than the largest node id.'
        )
        assert graph.edge_list == ((0, 4, 0.1),)
        assert parse('').n == 0
        assert parse('nodes\t7\n').n == 7, (
            'A header with no edges describes isolated nodes.'
        )

    @pytest.mark.parametrize('text, line_number', (
        ('0\t1\tabc\n', 1),
        ('nodes\t3\n0\t1\n', 2),
        ('0\t1\t0.5\t9\n', 1),
        ('0\t1\t0.5\nnodes\t3\n', 2),
        ('-1\t1\t0.5\n', 1),
        ('0\tx\t0.5\n', 1),
    ))
    def test_03_malformed_lines(self, text, line_number):
        with pytest.raises(GraphParseError) as info:
            parse(text)
        assert info.value.line_number == line_number, (
            f'Make sure that the parse error for {text!r} reports line '
            f'{line_number}.'
        )

    @pytest.mark.parametrize('text', (
        '0\t1\t1.5\n',
        '0\t1\t-0.1\n',
        '0\t1\tnan\n',
        'nodes\t2\n0\t2\t0.5\n',
    ))
    def test_04_out_of_domain_values(self, text):
        with pytest.raises(DomainError):
            parse(text)

    def test_05_bytes_input(self):
        graph = load_edge_list(io.BytesIO(b'nodes\t2\n1\t0\t0.25\n'))
        assert graph.edge_list == ((1, 0, 0.25),)
        with pytest.raises(GraphParseError):
            load_edge_list(io.BytesIO(b'\xff\xfe\t1\t0.5\n'))

    def test_06_format_round_trip(self, tmp_path):
        graph = WeightedDigraph(
            4, [(0, 1, 0.1), (2, 3, 1.0), (3, 0, 1 / 3), (3, 0, 0.0)])
        text = format_edge_list(graph)
        assert text.splitlines()[0] == 'nodes\t4', (
            'Make sure that the written edge list starts with its header.'
        )
        assert parse(text) == graph, (
            'Make sure that probabilities are written with enough digits to '
            'read back the same graph.'
        )
        assert load_edge_list_file(write_text(tmp_path, text)) == graph

    def test_07_bounds(self, star):
        with pytest.raises(BoundsError):
            star.neighbors(6)
        with pytest.raises(BoundsError):
            transpose_neighbors(star, -1)
        with pytest.raises(BoundsError):
            WeightedDigraph(2, [(0, 2, 0.5)])
        with pytest.raises(DomainError):
            WeightedDigraph(-1)
        assert isinstance(BoundsError('x'), IndexError)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_08_transpose_matches_edge_list(self, graph):
        for v in range(graph.n):
            expected = sorted((u, p) for u, w, p in graph.edge_list if w == v)
            assert sorted(transpose_neighbors(graph, v)) == expected, (
                'Make sure that the in-edges of every node are exactly the '
                'edges pointing at it.'
            )
            assert graph.in_degree(v) == len(expected)
        assert graph.transpose().transpose() == graph
        assert sum(graph.out_degree(v) for v in range(graph.n)) == graph.m

    def test_09_networkx_export(self):
        graph = WeightedDigraph(3, [(0, 1, 0.5), (0, 1, 0.25), (2, 2, 1.0)])
        exported = graph.to_networkx()
        assert exported.number_of_nodes() == 3
        assert exported.number_of_edges() == 3, (
            'Make sure that parallel edges survive the export.'
        )
        assert sorted(p for _, _, p in exported.edges(data='p')) == [
            0.25, 0.5, 1.0]
        assert isinstance(exported, nx.MultiDiGraph)

    def test_10_from_edges(self):
        graph = WeightedDigraph.from_edges(iter([(0, 3, 0.5), (2, 1, 1.0)]))
        assert graph.n == 4, (
            'Make sure that `from_edges` infers n as the largest id plus one.'
        )
        assert graph.edge_list == ((0, 3, 0.5), (2, 1, 1.0))
        assert WeightedDigraph.from_edges([]).n == 0
        assert WeightedDigraph.from_edges([(0, 1, 0.5)], n=6).n == 6
