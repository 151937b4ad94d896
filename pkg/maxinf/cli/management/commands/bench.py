import io

from influence.bench import (BenchAlgorithm, BenchInstance,
                             LowerBoundInstance, desk_corpus, run_bench,
                             write_csv)
from cli.mixins import InfluenceCommand
from cli.serializers import (BenchAggregateSerializer,
                             BenchOptionsSerializer, BenchRowSerializer)
from cli.utils import FORMAT_CSV


class Command(InfluenceCommand):
    help = ('Run algorithms against exact OPT. Corpus: --graph files, '
            '--random N oracle-sized random graphs, --lower-bound N T K '
            'instances. Algorithms: --algo maximize:EPS, sublinear:BETA, '
            'mc-greedy:ERR (repeatable). CSV columns: instance,algo,k,param,'
            'seed,achieved,opt,ratio,steps,ms; aggregate rows start with '
            '#agg and skipped rows with #skip.')
    options_serializer = BenchOptionsSerializer

    def add_arguments(self, parser):
        parser.add_argument('--graph', action='append',
                            help='Edge-list file (repeatable).')
        parser.add_argument('--random', type=int,
                            help='Number of random desk-scale graphs.')
        parser.add_argument('--lower-bound', nargs=3, type=int,
                            action='append', metavar=('N', 'T', 'K'))
        parser.add_argument('--k', type=int, action='append',
                            help='Budgets for graph/random instances '
                                 '(repeatable, default 1 2 3).')
        parser.add_argument('--algo', action='append', required=True)
        parser.add_argument('--trials', type=int)
        parser.add_argument('--budget', type=int,
                            help='Override every step budget R.')
        parser.add_argument('--repetitions', type=int)
        parser.add_argument('--format', choices=('csv', 'json'))
        self.add_run_arguments(parser)

    def corpus(self, data):
        ks = data['k'] or [1, 2, 3]
        corpus = []
        for path in data['graph']:
            graph = self.load_graph(path)
            corpus.extend(BenchInstance(f'{path}-k{k}', graph, k)
                          for k in ks if k <= graph.n)
        if data['random']:
            corpus.extend(desk_corpus(data['random'], data['seed'],
                                      ks=tuple(ks)))
        for n, T, k in data['lower_bound']:
            corpus.append(BenchInstance.from_lower_bound(
                LowerBoundInstance(n, T, k, seed=data['seed'])))
        return corpus

    def handle(self, *args, **options):
        data = self.validated(options)
        with self.domain_errors():
            corpus = self.corpus(data)
            algorithms = [BenchAlgorithm(name, param,
                                         budget=data.get('budget'),
                                         repetitions=data['repetitions'])
                          for name, param in data['algo']]
            report = run_bench(corpus, algorithms, data['trials'],
                               seed=data['seed'], workers=data['workers'],
                               deterministic=data['deterministic'])
        if data['format'] == FORMAT_CSV:
            sink = io.StringIO()
            write_csv(report, sink)
            lines = sink.getvalue().splitlines()
        else:
            lines = [self.render(BenchRowSerializer, row)
                     for row in report.rows]
            lines.extend(self.render(BenchAggregateSerializer, agg)
                         for agg in report.aggregates)
        self.emit(lines, data.get('out'))
