import io
import json

import pytest

from mapoly.ansatz import simplex_solution
from mapoly.cli import main, EXIT_OK, EXIT_INPUT, EXIT_INVARIANT
from mapoly.formats import PolytopeFile, PolynomialFile


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def hexagon_file(tmp_path, hexagon):
    return str(PolytopeFile.save(hexagon, tmp_path / 'hexagon.txt'))


def test_check(hexagon_file):
    code, out = run('check', hexagon_file)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['gates']['reflexive'] is True
    assert data['k'] == [1, 1]
    assert data['h_max'] == [[0, 2], [2, 0]]
    assert data['profiles'] == [{'k': [1, 1], 'H': [[0, 2], [2, 0]]}]
    assert data['failed_relation'] is None


def test_check_without_base_vertex(tmp_path):
    path = tmp_path / 'shifted.txt'
    path.write_text('dim 2\nvrep\n0 0\n1 0\n0 1\n', encoding='utf-8')
    code, out = run('check', str(path))
    assert code == EXIT_OK
    assert json.loads(out)['k'] is None


def test_obstruct(hexagon_file):
    code, out = run('obstruct', hexagon_file, '--max-degree', '3')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['max_degree'] == 3
    assert data['verdict']['verdict'] == 'CoefficientObstruction'
    assert data['verdict']['monomial']['text'] == 'y1*y2'
    assert data['template']['free'] == [[2, 2]]


def test_verify(tmp_path):
    path = tmp_path / 'simplex.txt'
    path.write_text(PolynomialFile.dumps(simplex_solution(2)), encoding='utf-8')
    code, out = run('verify', str(path))
    assert code == EXIT_OK
    assert json.loads(out) == {'solution': True, 'mode': 'symbolic', 'certificate': None, 'trials': 0,
                               'degree_bound': 9}
    code, out = run('verify', str(path), '--mode', 'sampled', '--trials', '3', '--seed', '5')
    assert json.loads(out)['trials'] == 3


def test_verify_non_solution(tmp_path):
    path = tmp_path / 'linear.txt'
    path.write_text('1 0 0\n1 1 0\n1 0 1\n', encoding='utf-8')
    code, out = run('verify', str(path), '--mode', 'sampled')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['solution'] is False
    assert len(data['certificate']) == 2


def test_classify(tmp_path):
    report = tmp_path / 'report.txt'
    csv = tmp_path / 'report.csv'
    code, out = run('classify', '--dim', '2', '--format', 'text', '--out', str(report), '--csv', str(csv))
    assert code == EXIT_OK
    assert out == ''
    assert 'dim 2: 3 candidates' in report.read_text(encoding='utf-8')
    assert csv.read_text(encoding='utf-8').startswith('# Exported by mapoly')
    code, out = run('classify', '--dim', '1')
    assert json.loads(out)['solutions'] == ['simplex-1']


def test_catalog():
    code, out = run('catalog', '--dim', '3')
    assert code == EXIT_OK
    entries = json.loads(out)
    assert [e['id'] for e in entries] == ['simplex-3', 'table3-1']
    assert all(e['integrity'] == [] for e in entries)


def test_config_overrides(tmp_path, hexagon_file):
    ini = tmp_path / 'mapoly.ini'
    ini.write_text('[obstruct]\nmax_degree = 2\n', encoding='utf-8')
    code, out = run('--config', str(ini), 'obstruct', hexagon_file)
    assert json.loads(out)['max_degree'] == 2
    code, out = run('--config', str(ini), 'obstruct', hexagon_file, '--max-degree', '3')
    assert json.loads(out)['max_degree'] == 3


@pytest.mark.parametrize('argv', [
    [],
    ['frobnicate'],
    ['classify'],
    ['classify', '--dim', '9'],
    ['verify', 'missing.txt'],
    ['check', 'missing.txt'],
])
def test_input_errors(argv):
    assert run(*argv)[0] == EXIT_INPUT


def test_parse_error(tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text('dim 2\nhrep\n1 x\n', encoding='utf-8')
    assert run('check', str(path))[0] == EXIT_INPUT


def test_invariant_violation(monkeypatch):
    from mapoly import cli
    from mapoly.errors import InvariantViolation

    def broken(box):
        raise InvariantViolation('box too small')

    monkeypatch.setattr(cli, 'enumerate_smooth_reflexive_2d', broken)
    assert run('enumerate2d', '--box', '2')[0] == EXIT_INVARIANT
