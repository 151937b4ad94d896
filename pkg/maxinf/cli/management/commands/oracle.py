from influence.oracle import exact_influence, exact_opt
from cli.mixins import InfluenceCommand
from cli.serializers import (OptimumResultSerializer,
                             OracleOptionsSerializer, OracleResultSerializer)


class Command(InfluenceCommand):
    help = ('Exact expected influence of --seeds by enumerating every '
            'realization of the edges with 0 < p < 1 (at most 22), and/or '
            'the exact optimum over all --k subsets.')
    options_serializer = OracleOptionsSerializer

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--seeds',
                            help='Comma-separated node ids, e.g. 0,4,7.')
        parser.add_argument('--k', type=int,
                            help='Also search the best k-subset.')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(options)
        graph = self.load_graph(data['graph'])
        lines = []
        with self.domain_errors():
            if data.get('seeds') is not None:
                exact = exact_influence(graph, data['seeds'])
                lines.append(self.render(OracleResultSerializer, {
                    'exact': exact.value,
                    'realizations': exact.realizations,
                }))
            if data.get('k') is not None:
                optimum = exact_opt(graph, data['k'])
                lines.append(self.render(OptimumResultSerializer, {
                    'opt': optimum.value,
                    'argmax': sorted(optimum.argmax),
                    'k': data['k'],
                }))
        self.emit(lines, data.get('out'))
