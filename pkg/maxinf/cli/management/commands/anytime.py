import logging
import signal
import threading
import time

from influence.algorithms import maximize_anytime
from cli.mixins import InfluenceCommand
from cli.serializers import AnytimeOptionsSerializer, AnytimeResultSerializer

logger = logging.getLogger(__name__)

STOP_SIGNALS = (signal.SIGTERM, signal.SIGINT)


class Command(InfluenceCommand):
    help = ('Anytime maximization (beta = 1): a solution is stored at every '
            'power-of-two step count and the latest one is printed when '
            'SIGTERM/SIGINT, --max-steps or --time-limit stops the run.')
    options_serializer = AnytimeOptionsSerializer

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--budget', type=int,
                            help='Override the step budget R.')
        parser.add_argument('--max-steps', type=int,
                            help='Stop once this many steps are spent.')
        parser.add_argument('--time-limit', type=float,
                            help='Stop after this many seconds.')
        self.add_run_arguments(parser)

    def _install_handlers(self, event):
        previous = {}
        for signum in STOP_SIGNALS:
            try:
                previous[signum] = signal.signal(
                    signum, lambda *_: event.set())
            except ValueError:
                logger.debug('not in the main thread; signals not wired')
                break
        return previous

    def handle(self, *args, **options):
        data = self.validated(options)
        graph = self.load_graph(data['graph'])
        event = threading.Event()
        max_steps = data.get('max_steps')
        time_limit = data.get('time_limit')
        deadline = (None if time_limit is None
                    else time.monotonic() + time_limit)

        def stop(steps):
            return (event.is_set()
                    or (max_steps is not None and steps >= max_steps)
                    or (deadline is not None
                        and time.monotonic() >= deadline))

        previous = self._install_handlers(event)
        try:
            with self.domain_errors():
                solution = maximize_anytime(graph, data['k'], data['seed'],
                                            stop=stop,
                                            budget=data.get('budget'))
        finally:
            for signum, handler in previous.items():
                signal.signal(signum, handler)
        result = solution.seeds
        line = self.render(AnytimeResultSerializer, {
            'seeds': result.seeds,
            'estimate': result.estimate,
            'm_H': result.m_H,
            'steps': result.steps,
            'branch': result.branch,
            'beta': 1.0,
            'seed': data['seed'],
            'snapshot_index': solution.snapshot_index,
            'steps_at_snapshot': solution.steps_at_snapshot,
        })
        self.emit([line], data.get('out'))
