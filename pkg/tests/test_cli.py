"""
:summary: Test drinfeld.cli and drinfeld.client

:license: Apache License, Version 2.0

:requires: pytest
"""
__docformat__ = "restructuredtext en"

import json

import pytest

from drinfeld.cli import main, render
from drinfeld.client import DrinfeldClient, RunConfig
from drinfeld.defaults import EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN, Verdict
from drinfeld.exceptions import DrinfeldError, InvalidModuleDescriptor
from drinfeld.transforms import transform

from tests import certify_descriptor, newton_descriptor, split_descriptor, test_threads, transforms


def _run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_transform_registry():
    for name in ('module_info', 'torsion', 'frob_sample', 'frob_samples', 'certificate',
                 'newton', 'exponential', 'density_rows', 'euler_rows'):
        assert name in transforms, '{0} is not a registered transform'.format(name)

    class Broken(object):
        @transform('no_such_transform')
        def method(self):
            return 1

    with pytest.raises(DrinfeldError):
        Broken().method()


def test_run_config():
    config = RunConfig(threads=3, levels=[1, 2])
    assert config.threads == 3 and config.levels == (1, 2), config
    with pytest.raises(TypeError):
        RunConfig(colour='blue')
    with pytest.raises(ValueError):
        RunConfig(output='yaml')
    assert RunConfig().output is None, 'commands pick their own format by default'
    assert RunConfig(output='csv').output == 'csv', 'explicit format'


def test_client_inspect():
    data = DrinfeldClient().inspect(newton_descriptor)
    assert data['phi_T'] == '(T+1)*t^2+t+T', data
    assert data['delta'] == '2*T+2', data
    assert data['det_module'] == {'q': 3, 'r': 1, 'g': ['2*T+2']}, data
    with pytest.raises(InvalidModuleDescriptor):
        DrinfeldClient().inspect({'q': 3, 'r': 2, 'g': ['1', '0']})


def test_client_newton():
    data = DrinfeldClient().newton(newton_descriptor, 'T+1')
    assert data['vertices'] == [[1, 0], [9, 0], [27, 1], [81, 10]], data['vertices']
    assert data['vz']['computed'] == '-1/18' and data['vz']['ok'], data['vz']
    assert data['balance']['ok'], data['balance']
    plain = DrinfeldClient().newton(newton_descriptor, 'T+2')
    assert 'vz' not in plain, 'T+2 is not a witness'


def test_client_exp():
    data = DrinfeldClient(precision=40).exp(3, 'T+1', 1, 1)
    assert data['lattice_size'] == 9 and len(data['coefficients']) == 3, data
    assert [c['exponent'] for c in data['coefficients']] == [1, 3, 9], 'q-power exponents'
    assert data['functional_equation']['ok'], data['functional_equation']
    assert all(r['symmetric_agrees'] for r in data['readings']), data['readings']


def test_render_formats():
    rows = [{'a': 1, 'b': 'x'}, {'a': 2, 'b': 'y'}]
    assert render(rows, 'csv', ('a', 'b')) == 'a,b\n1,x\n2,y', 'csv'
    assert render(rows, 'json').splitlines()[1] == '{"a": 2, "b": "y"}', 'json lines'
    assert render({'a': 1}, 'text') == 'a: 1', 'text'


def test_inspect(capsys):
    status, out, _ = _run(capsys, 'inspect', '--module', json.dumps(newton_descriptor),
                          '--emit', 'json')
    assert status == EXIT_OK, status
    data = json.loads(out)
    assert data['r'] == 2 and data['phi_T'] == '(T+1)*t^2+t+T', data


def test_inspect_from_file(capsys, tmp_path):
    path = tmp_path / 'module.json'
    path.write_text(json.dumps(split_descriptor))
    status, out, _ = _run(capsys, 'inspect', '--module', str(path))
    assert status == EXIT_OK and 'phi_T: t^2+(T+1)*t+T' in out, out


@pytest.mark.parametrize('descriptor', [
    '{"q": 3, "r": 2, "g": ["1", "0"]}',
    '{"q": 3, "r": 0, "g": []}',
    '{"q": 4, "r": 1, "g": ["1"]}',
    ])
def test_inspect_rejects(capsys, descriptor):
    status, _, err = _run(capsys, 'inspect', '--module', descriptor)
    assert status == EXIT_ERROR, status
    assert err.startswith('drinfeldrun inspect:'), err


def test_usage_errors(capsys):
    assert _run(capsys)[0] == EXIT_ERROR, 'no command'
    assert _run(capsys, 'density', '--q', '3')[0] == EXIT_ERROR, 'missing --X'
    assert _run(capsys, 'nonsense')[0] == EXIT_ERROR, 'unknown command'
    assert _run(capsys, 'torsion', '--module', json.dumps(newton_descriptor),
                '--prime', 'T')[0] == EXIT_ERROR, 'bad reduction is an error'
    assert _run(capsys, 'inspect', '--module', '/no/such/file.json')[0] == EXIT_ERROR, 'IO error'


def test_eulerprod(capsys):
    status, out, _ = _run(capsys, 'eulerprod', '--q', '3', '--p', '3', '--max-degree', '5')
    lines = out.splitlines()
    assert status == EXIT_OK, status
    assert lines[0] == 'B,c_B,partial_float,log_sum,linear_bound', lines[0]
    assert len(lines) == 6 and lines[1].startswith('1,3,'), lines
    status, out, _ = _run(capsys, 'eulerprod', '--q', '3', '--p', '3', '--max-degree', '1',
                          '--exact')
    assert out.splitlines() == ['B,c_B,partial', '1,3,6859/19683'], out


def test_density(capsys):
    status, out, _ = _run(capsys, 'density', '--q', '3', '--r', '2', '--X', '1', '2')
    lines = out.splitlines()
    assert status == EXIT_OK, status
    assert lines[0] == 'X,total,pi_r_count,pi_r_ratio,euler_bound_B,euler_partial', lines[0]
    assert lines[1].startswith('1,6,0,0,1,') and lines[2].startswith('2,72,24,1/3,2,'), lines
    _, threaded, _ = _run(capsys, 'density', '--q', '3', '--r', '2', '--X', '1', '2',
                          '--threads', str(test_threads))
    assert threaded == out, 'worker count changes the output'


def test_frobsample(capsys):
    status, out, _ = _run(capsys, 'frobsample', '--module', json.dumps(split_descriptor),
                          '--prime', 'T+1', '--level2')
    assert status == EXIT_OK, status
    data = json.loads(out)
    assert data['P'] == 'T+1' and data['charpoly_modT'] == 'x^2+2', data
    assert data['det'] == '2' and 'matrix_modT2' in data, data


def test_certify_unknown(capsys):
    status, out, _ = _run(capsys, 'certify', '--module', json.dumps(certify_descriptor),
                          '--max-prime-degree', '1')
    assert status == EXIT_UNKNOWN, status
    data = json.loads(out)
    assert data['verdict'] == Verdict.UNKNOWN, data
    assert data['modT2_nonscalar']['state'] == 'certified', data


def test_certify_refused(capsys):
    status, _, err = _run(capsys, 'certify', '--module', json.dumps(newton_descriptor))
    assert status == EXIT_ERROR and 'q >= 5' in err, err


def test_exp(capsys):
    status, out, _ = _run(capsys, 'exp', '--q', '3', '--prime', 'T+1', '--cutoff', '1',
                          '--emit', 'json')
    assert status == EXIT_OK, status
    data = json.loads(out)
    assert data['functional_equation']['ok'] and data['cutoff'] == 1, data


def test_certify_surjective(capsys):
    status, out, _ = _run(capsys, 'certify', '--module', json.dumps(certify_descriptor),
                          '--max-prime-degree', '3', '--seed', '11')
    assert status == EXIT_OK, status
    data = json.loads(out)
    assert data['verdict'] == Verdict.SURJECTIVE, data
    assert data['modT_surjective']['state'] == 'certified', data


def test_emit_overrides_command_format(capsys):
    status, out, _ = _run(capsys, 'density', '--q', '3', '--r', '2', '--X', '1', '2',
                          '--emit', 'json')
    assert status == EXIT_OK, status
    rows = [json.loads(line) for line in out.splitlines()]
    assert [row['X'] for row in rows] == [1, 2], rows
    assert rows[1]['pi_r_count'] == 24, rows
