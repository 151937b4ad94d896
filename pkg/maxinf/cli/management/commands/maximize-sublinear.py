from influence.algorithms import SublinearParams, maximize_sublinear
from cli.mixins import InfluenceCommand
from cli.serializers import (SublinearOptionsSerializer,
                             SublinearResultSerializer)


class Command(InfluenceCommand):
    help = ('Budget-limited maximization: expected influence >= '
            'min(1/4, beta) OPT with probability >= 3/5, from '
            'R = ceil(beta * 144 C (n + m) ln n) steps, C = 10368. '
            'Guarantees above 1/4 need the `maximize` command.')
    options_serializer = SublinearOptionsSerializer

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--beta', type=float, required=True)
        parser.add_argument('--budget', type=int,
                            help='Override the step budget R.')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(options)
        graph = self.load_graph(data['graph'])
        with self.domain_errors():
            params = SublinearParams(beta=data['beta'], k=data['k'],
                                     seed=data['seed'],
                                     budget=data.get('budget'))
            result = maximize_sublinear(graph, params)
        line = self.render(SublinearResultSerializer, {
            'seeds': result.seeds,
            'estimate': result.estimate,
            'm_H': result.m_H,
            'steps': result.steps,
            'branch': result.branch,
            'beta': params.beta,
            'seed': params.seed,
        })
        self.emit([line], data.get('out'))
