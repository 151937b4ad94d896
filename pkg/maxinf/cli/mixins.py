import contextlib
import logging
import os

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from influence.exceptions import (BoundsError, CapacityError, DomainError,
                                  GraphParseError, InfluenceError)
from influence.graph import load_edge_list_file
from .utils import CONVENTIONS, EXIT_CAPACITY, EXIT_DATA, EXIT_USAGE

logger = logging.getLogger(__name__)


class InfluenceCommand(BaseCommand):
    """Shared options, error mapping and output for every subcommand."""

    options_serializer = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.epilog = CONVENTIONS
        return parser

    def add_run_arguments(self, parser):
        parser.add_argument(
            '--seed', type=int,
            help='Master RNG seed (default: MAXINF_SEED or '
                 f'{settings.MAXINF["DEFAULT_SEED"]}).')
        parser.add_argument('--out', help='Write results here, not stdout.')
        parser.add_argument('--workers', type=int,
                            default=settings.MAXINF['WORKERS'],
                            help='Worker processes (default 1).')
        parser.add_argument('--deterministic', action='store_true',
                            help='Single worker, no wall-clock columns.')

    def add_graph_argument(self, parser):
        parser.add_argument('--graph', required=True,
                            help='Edge-list file: u<TAB>v<TAB>p per line.')

    def validated(self, options):
        data = {key: value for key, value in options.items()
                if value is not None}
        data.setdefault('seed', settings.MAXINF['DEFAULT_SEED'])
        serializer = self.options_serializer(data=data)
        if not serializer.is_valid():
            raise CommandError(_format_errors(serializer.errors),
                               returncode=EXIT_USAGE)
        return serializer.validated_data

    @contextlib.contextmanager
    def domain_errors(self):
        try:
            yield
        except CapacityError as error:
            raise CommandError(f'capacity exceeded: {error}',
                               returncode=EXIT_CAPACITY)
        except GraphParseError as error:
            raise CommandError(f'parse error: {error}', returncode=EXIT_DATA)
        except (DomainError, BoundsError) as error:
            raise CommandError(f'domain error: {error}',
                               returncode=EXIT_DATA)
        except InfluenceError as error:
            raise CommandError(str(error), returncode=EXIT_DATA)
        except FileNotFoundError as error:
            raise CommandError(f'file not found: {error.filename}',
                               returncode=EXIT_DATA)

    def load_graph(self, path):
        with self.domain_errors():
            graph = load_edge_list_file(path)
        logger.info('loaded %s: n=%d m=%d', path, graph.n, graph.m)
        return graph

    def render(self, serializer_class, instance):
        return JSONRenderer().render(serializer_class(instance).data).decode()

    def emit(self, lines, out=None):
        text = '\n'.join(lines) + '\n' if lines else ''
        if out:
            directory = os.path.dirname(out)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(out, 'w', encoding='utf-8') as sink:
                sink.write(text)
        else:
            self.stdout.write(text, ending='')


def _format_errors(errors):
    if isinstance(errors, dict):
        return '; '.join(
            f'{field}: {" ".join(str(message) for message in messages)}'
            if isinstance(messages, list) else f'{field}: {messages}'
            for field, messages in errors.items())
    return str(errors)
