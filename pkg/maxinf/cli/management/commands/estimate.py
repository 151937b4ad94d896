from influence.cascade import estimate_influence_mc
from influence.oracle import chernoff_trials
from influence.rng import RngStream
from influence.utils import STREAM_ESTIMATE
from cli.mixins import InfluenceCommand
from cli.serializers import (EstimateOptionsSerializer,
                             EstimateResultSerializer)


class Command(InfluenceCommand):
    help = ('Monte-Carlo estimate of E[I(S)] over independent forward '
            'cascades. Give --trials, or --error and --confidence to size '
            'the run by the Chernoff bound 2 exp(-N err^2 / 4).')
    options_serializer = EstimateOptionsSerializer

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--seeds', required=True,
                            help='Comma-separated node ids, e.g. 0,4,7.')
        parser.add_argument('--trials', type=int)
        parser.add_argument('--error', type=float,
                            help='Additive error as a fraction of n.')
        parser.add_argument('--confidence', type=float)
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(options)
        graph = self.load_graph(data['graph'])
        with self.domain_errors():
            trials = data.get('trials')
            if trials is None:
                trials = chernoff_trials(data['error'],
                                         data['confidence']).trials
            estimate = estimate_influence_mc(
                graph, data['seeds'], trials,
                RngStream(data['seed'], STREAM_ESTIMATE))
        line = self.render(EstimateResultSerializer, {
            'mean': estimate.mean,
            'trials': trials,
            'steps': estimate.steps_total,
            'seed': data['seed'],
        })
        self.emit([line], data.get('out'))
