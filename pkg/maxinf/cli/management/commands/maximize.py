from influence.algorithms import MaximizeParams, maximize
from cli.mixins import InfluenceCommand
from cli.serializers import (MaximizeOptionsSerializer,
                             MaximizeResultSerializer)


class Command(InfluenceCommand):
    help = ('Seed set with expected influence >= (1 - 1/e - eps) OPT with '
            'probability >= 3/5, from a sketch of '
            'R = ceil(l * 144 (m + n) eps^-3 ln n) steps.')
    options_serializer = MaximizeOptionsSerializer

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--epsilon', type=float, required=True)
        parser.add_argument(
            '--repetitions', type=int,
            help='Independent sketches; the one with most hyperedges wins.')
        parser.add_argument('--ell-boost', type=int,
                            help='Multiply R for failure probability 1/n^l.')
        parser.add_argument('--budget', type=int,
                            help='Override the step budget R.')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(options)
        graph = self.load_graph(data['graph'])
        with self.domain_errors():
            params = MaximizeParams(
                epsilon=data['epsilon'], k=data['k'], seed=data['seed'],
                repetitions=data['repetitions'],
                ell_boost=data['ell_boost'], budget=data.get('budget'))
            result = maximize(graph, params, workers=data['workers'])
        line = self.render(MaximizeResultSerializer, {
            'seeds': result.seeds,
            'estimate': result.estimate,
            'm_H': result.m_H,
            'steps': result.steps,
            'branch': result.branch,
            'epsilon': params.epsilon,
            'seed': params.seed,
        })
        self.emit([line], data.get('out'))
