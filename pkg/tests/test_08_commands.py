import io
import json

import pytest
from django.conf import settings
from django.core.management import call_command, load_command_class
from django.core.management.base import CommandError

from cli.main import main
from cli.serializers import MaximizeOptionsSerializer
from cli.utils import EXIT_CAPACITY, EXIT_DATA, EXIT_USAGE
from influence.bench import gen_lower_bound
from influence.graph import load_edge_list_file

from tests.utils import write_text


def run(*args, **options):
    out = io.StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


def run_json(*args, **options):
    return [json.loads(line) for line in run(*args, **options).splitlines()]


def returncode(*args, **options):
    with pytest.raises(CommandError) as info:
        run(*args, **options)
    return info.value.returncode


class Test08Commands:

    def test_01_maximize(self, star_file):
        [result] = run_json('maximize', graph=star_file, k=1, epsilon=0.5,
                            budget=500, seed=3)
        assert list(result) == ['seeds', 'estimate', 'm_H', 'steps',
                                'branch', 'epsilon', 'seed'], (
            'Make sure that `maximize` prints the documented keys in order.'
        )
        assert result['seeds'] == [0]
        assert result['estimate'] == 6.0
        assert (result['epsilon'], result['seed']) == (0.5, 3)

    def test_02_default_seed(self, star_file):
        [result] = run_json('maximize', graph=star_file, k=1, epsilon=0.5,
                            budget=100)
        assert result['seed'] == settings.MAXINF['DEFAULT_SEED'], (
            'Without --seed the documented default seed is used.'
        )

    def test_03_maximize_sublinear(self, star_file):
        [result] = run_json('maximize-sublinear', graph=star_file, k=2,
                            beta=0.5, budget=300, seed=1)
        assert list(result)[-2:] == ['beta', 'seed']
        assert result['branch'] == 'union'
        assert len(result['seeds']) == 2

    def test_04_anytime(self, star_file):
        [result] = run_json('anytime', graph=star_file, k=1, budget=400,
                            seed=1)
        assert list(result)[-3:] == ['seed', 'snapshot_index',
                                     'steps_at_snapshot']
        assert result['beta'] == 1.0
        assert result['steps_at_snapshot'] <= 2 ** result['snapshot_index']
        [stopped] = run_json('anytime', graph=star_file, k=1, seed=1,
                             budget=10 ** 6, max_steps=100)
        assert stopped['steps_at_snapshot'] <= 128, (
            'Make sure that --max-steps stops the run and prints the latest '
            'snapshot.'
        )

    def test_05_estimate(self, star_file):
        [result] = run_json('estimate', graph=star_file, seeds='0',
                            trials=10, seed=2)
        assert result == {'mean': 6.0, 'trials': 10, 'steps': 50, 'seed': 2}
        [planned] = run_json('estimate', graph=star_file, seeds='1,2',
                             error=0.5, confidence=0.9, seed=2)
        assert planned['trials'] == 48, (
            'Make sure that --error/--confidence size the run with the '
            'Chernoff bound.'
        )
        assert planned['mean'] == 2.0

    def test_06_oracle(self, half_path_file):
        [exact] = run_json('oracle', graph=half_path_file, seeds='0')
        assert exact == {'exact': 1.75, 'realizations': 4}
        lines = run_json('oracle', graph=half_path_file, seeds='0', k=1)
        assert lines[1] == {'opt': 1.75, 'argmax': [0], 'k': 1}

    def test_07_gen(self, tmp_path):
        out = str(tmp_path / 'family.tsv')
        message = run('gen', 'lower-bound', n=10, T=2, k=2, out=out)
        assert 'written to' in message
        assert load_edge_list_file(out) == gen_lower_bound(10, 2, 2), (
            'Make sure that `gen` writes a loadable edge list.'
        )
        text = run('gen', 'random', n=6, m=5, p_dist='fixed:0.25', seed=1)
        assert text.splitlines()[0] == 'nodes\t6'
        assert len(text.splitlines()) == 6

    def test_08_bench(self, star_file):
        args = ('bench', '--graph', star_file, '--k', '1',
                '--lower-bound', '12', '1', '2',
                '--algo', 'sublinear:0.25', '--algo', 'maximize:0.5',
                '--budget', '300', '--trials', '3', '--deterministic')
        text = run(*args)
        lines = text.splitlines()
        assert lines[0] == ('instance,algo,k,param,seed,achieved,opt,ratio,'
                            'steps,ms')
        assert len([line for line in lines if line.startswith('#agg')]) == 4
        assert run(*args) == text, (
            'Make sure that --deterministic reruns are byte-identical.'
        )
        rows = run_json(*args[:-1], '--format', 'json')
        assert len(rows) == 12 + 4

    def test_09_usage_errors(self, star_file):
        assert returncode('maximize', graph=star_file, k=1,
                          epsilon=1.5) == EXIT_USAGE
        assert returncode('maximize-sublinear', graph=star_file, k=1,
                          beta=0.0) == EXIT_USAGE
        assert returncode('estimate', graph=star_file,
                          seeds='0') == EXIT_USAGE
        assert returncode('oracle', graph=star_file) == EXIT_USAGE
        assert returncode('gen', 'random', n=5) == EXIT_USAGE
        assert returncode('bench', '--algo', 'annealing:0.5') == EXIT_USAGE
        serializer = MaximizeOptionsSerializer(data={
            'graph': 'g.tsv', 'k': 0, 'epsilon': 0.5, 'seed': 1})
        assert not serializer.is_valid()
        assert 'k' in serializer.errors

    def test_10_data_and_capacity_errors(self, tmp_path, star_file,
                                         dense_file):
        missing = str(tmp_path / 'missing.tsv')
        assert returncode('maximize', graph=missing, k=1,
                          epsilon=0.5) == EXIT_DATA
        broken = write_text(tmp_path, '0\t1\tmaybe\n')
        assert returncode('maximize', graph=broken, k=1,
                          epsilon=0.5) == EXIT_DATA
        assert returncode('estimate', graph=star_file, seeds='9',
                          trials=3) == EXIT_DATA
        assert returncode('gen', 'lower-bound', n=10, T=3, k=2) == EXIT_DATA
        assert returncode('oracle', graph=dense_file,
                          seeds='0') == EXIT_CAPACITY

    def test_11_help_documents_conventions(self):
        for name in ('maximize', 'estimate', 'bench'):
            parser = load_command_class('cli', name).create_parser(
                'manage.py', name)
            text = parser.format_help()
            assert 'natural' in text and 'coin' in text, (
                'Every subcommand help must state the natural-log and step '
                'conventions.'
            )

    def test_12_main_exit_codes(self, capsys, tmp_path, star_file):
        assert main(['manage.py', 'no-such-command']) == EXIT_USAGE, (
            'An unknown subcommand must exit with the usage code.'
        )
        assert 'Unknown command' in capsys.readouterr().err
        assert main(['manage.py', 'maximize', '--graph', star_file]) == (
            EXIT_USAGE), 'A missing required option is a usage error.'
        capsys.readouterr()
        assert main(['manage.py', 'maximize-sublinear', '--graph', star_file,
                     '--k', '1', '--beta', '0.25', '--budget', '200',
                     '--seed', '1']) == 0
        [line] = capsys.readouterr().out.splitlines()
        assert json.loads(line)['beta'] == 0.25
        missing = str(tmp_path / 'missing.tsv')
        assert main(['manage.py', 'maximize', '--graph', missing, '--k', '1',
                     '--epsilon', '0.5']) == EXIT_DATA
