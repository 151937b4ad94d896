import io

from influence.bench import gen_lower_bound, gen_random
from influence.graph import dump_edge_list
from influence.utils import OVERLAY_WEIGHT
from cli.mixins import InfluenceCommand
from cli.serializers import GenOptionsSerializer
from cli.utils import GEN_LOWER_BOUND, GEN_RANDOM


class Command(InfluenceCommand):
    help = ('Write a generated instance as an edge list. `lower-bound`: k '
            'directed p=1 cycles of 2T nodes plus n - 2kT singletons '
            '(needs 2kT <= n), optionally overlaid with a d-regular graph of '
            f'weight {OVERLAY_WEIGHT:g}. `random`: m distinct ordered pairs '
            'with probabilities from --p-dist.')
    options_serializer = GenOptionsSerializer

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=(GEN_LOWER_BOUND, GEN_RANDOM))
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--T', type=int, dest='T')
        parser.add_argument('--k', type=int)
        parser.add_argument('--overlay-degree', type=int)
        parser.add_argument('--overlay-weight', type=float)
        parser.add_argument('--m', type=int)
        parser.add_argument(
            '--p-dist',
            help='fixed:P, uniform:LO,HI or choice:P1,P2,... '
                 '(default fixed:0.1).')
        parser.add_argument('--allow-parallel', action='store_true')
        self.add_run_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(options)
        with self.domain_errors():
            if data['kind'] == GEN_LOWER_BOUND:
                graph = gen_lower_bound(
                    data['n'], data['T'], data['k'],
                    overlay_degree=data.get('overlay_degree'),
                    overlay_weight=data.get('overlay_weight',
                                            OVERLAY_WEIGHT),
                    seed=data['seed'])
            else:
                graph = gen_random(data['n'], data['m'], data['p_dist'],
                                   data['seed'],
                                   allow_parallel=data['allow_parallel'])
        sink = io.StringIO()
        dump_edge_list(graph, sink)
        self.emit(sink.getvalue().splitlines(), data.get('out'))
        if data.get('out'):
            self.stdout.write(self.style.SUCCESS(
                f'{data["kind"]} instance with n={graph.n}, m={graph.m} '
                f'written to {data["out"]}'))
