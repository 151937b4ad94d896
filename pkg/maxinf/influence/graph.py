"""Weighted directed graph with forward and transpose adjacency."""
import logging
import math

import networkx as nx

from .exceptions import BoundsError, DomainError, GraphParseError

logger = logging.getLogger(__name__)

HEADER = 'nodes'
COMMENT = '#'
SEPARATOR = '\t'


class WeightedDigraph:
    """Immutable adjacency-list graph; edge ids follow insertion order.

    ``edges[u]`` holds ``(target, p)`` pairs and ``in_edges[v]`` the
    transpose view ``(source, p)``. ``out_ids``/``in_ids`` run parallel to
    them with the id of each edge record, so one realization can be shared
    between a forward and a transpose traversal.
    """

    __slots__ = ('n', 'm', 'edge_list', 'edges', 'in_edges', 'out_ids',
                 'in_ids')

    def __init__(self, n, edge_list=()):
        if n < 0:
            raise DomainError(f'node count must be nonnegative, got {n}')
        self.n = n
        self.edges = [[] for _ in range(n)]
        self.in_edges = [[] for _ in range(n)]
        self.out_ids = [[] for _ in range(n)]
        self.in_ids = [[] for _ in range(n)]
        records = []
        for u, v, p in edge_list:
            u, v, p = int(u), int(v), float(p)
            if not 0 <= u < n or not 0 <= v < n:
                raise BoundsError(f'edge ({u}, {v}) outside [0, {n})')
            if not 0.0 <= p <= 1.0:
                raise DomainError(
                    f'edge ({u}, {v}) probability {p} outside [0, 1]')
            edge_id = len(records)
            records.append((u, v, p))
            self.edges[u].append((v, p))
            self.out_ids[u].append(edge_id)
            self.in_edges[v].append((u, p))
            self.in_ids[v].append(edge_id)
        self.edge_list = tuple(records)
        self.m = len(records)

    def __repr__(self):
        return f'WeightedDigraph(n={self.n}, m={self.m})'

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.n == other.n and self.edge_list == other.edge_list

    def __hash__(self):
        return hash((self.n, self.edge_list))

    def __reduce__(self):
        return (WeightedDigraph, (self.n, self.edge_list))

    @classmethod
    def from_edges(cls, edges, n=None):
        """Build from ``(u, v, p)`` triples; ``n`` defaults to max id + 1."""
        edges = list(edges)
        if n is None:
            n = max((max(u, v) for u, v, _ in edges), default=-1) + 1
        return cls(n, edges)

    def check_node(self, v):
        if not 0 <= v < self.n:
            raise BoundsError(f'node {v} outside [0, {self.n})')
        return v

    def neighbors(self, v):
        return self.edges[self.check_node(v)]

    def out_degree(self, v):
        return len(self.edges[self.check_node(v)])

    def in_degree(self, v):
        return len(self.in_edges[self.check_node(v)])

    def transpose(self):
        return WeightedDigraph(
            self.n, ((v, u, p) for u, v, p in self.edge_list))

    def stochastic_edge_count(self):
        return sum(1 for _, _, p in self.edge_list if 0.0 < p < 1.0)

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n))
        for edge_id, (u, v, p) in enumerate(self.edge_list):
            graph.add_edge(u, v, key=edge_id, p=p)
        return graph


def transpose_neighbors(g, v):
    return g.in_edges[g.check_node(v)]


def _decode(line, line_number):
    if isinstance(line, bytes):
        try:
            return line.decode('utf-8')
        except UnicodeDecodeError as error:
            raise GraphParseError(line_number, f'not UTF-8: {error}')
    return line


def _parse_id(token, line_number):
    if not token.isdigit() or not token.isascii():
        raise GraphParseError(
            line_number, f'node id {token!r} is not a nonnegative integer')
    return int(token)


def _parse_probability(token, line_number):
    try:
        p = float(token)
    except ValueError:
        raise GraphParseError(
            line_number, f'probability {token!r} is not a decimal')
    if math.isnan(p) or not 0.0 <= p <= 1.0:
        raise DomainError(
            f'line {line_number}: probability {token} outside [0, 1]')
    return p


def load_edge_list(source):
    """Read ``u<TAB>v<TAB>p`` records from a byte or text stream."""
    declared = None
    records = []
    for line_number, raw in enumerate(source, 1):
        line = _decode(raw, line_number).rstrip('\r\n')
        if not line or line.startswith(COMMENT):
            continue
        fields = line.split(SEPARATOR)
        if fields[0] == HEADER:
            if records or declared is not None or len(fields) != 2:
                raise GraphParseError(
                    line_number, 'header must be the first record and read '
                    '`nodes<TAB>N`')
            declared = _parse_id(fields[1], line_number)
            continue
        if len(fields) != 3:
            raise GraphParseError(
                line_number, f'expected 3 tab-separated fields, '
                f'got {len(fields)}')
        u = _parse_id(fields[0], line_number)
        v = _parse_id(fields[1], line_number)
        p = _parse_probability(fields[2], line_number)
        if declared is not None and max(u, v) >= declared:
            raise DomainError(
                f'line {line_number}: node id {max(u, v)} not below '
                f'declared node count {declared}')
        records.append((u, v, p))
    graph = WeightedDigraph.from_edges(records, declared)
    logger.debug('loaded graph n=%d m=%d', graph.n, graph.m)
    return graph


def load_edge_list_file(path):
    with open(path, 'rb') as source:
        return load_edge_list(source)


def format_edge_list(g):
    lines = [f'{HEADER}{SEPARATOR}{g.n}']
    lines.extend(f'{u}{SEPARATOR}{v}{SEPARATOR}{p!r}'
                 for u, v, p in g.edge_list)
    return '\n'.join(lines) + '\n'


def dump_edge_list(g, sink):
    sink.write(format_edge_list(g))
