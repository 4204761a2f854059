import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from stewart.automata.stewart import STEWART_AUTOMATON
from stewart.automata.walnut import write_walnut
from stewart.models import StoredAutomaton


def stewart(*args):
    out = StringIO()
    call_command('stewart', *args, stdout=out)
    return out.getvalue()


def test_help():
    assert 'Exit status: 0 success' in stewart('help')


def test_unknown_subcommand():
    with pytest.raises(CommandError) as excinfo:
        stewart('prove')
    assert excinfo.value.returncode == 3


def test_generate():
    assert stewart('generate', 'afe').strip() == '01?011010010011010011011010'
    assert stewart('generate', 'afe', '--len', '5').strip() == '01?01'
    assert stewart('generate', '').strip() == '?'
    assert stewart('generate', '(c)', '--len', '9').strip() == '001001011'
    assert stewart('generate', '(e)', '--len', '9', '--fill', '0').strip() == '001001101'


@pytest.mark.parametrize('args', [
    ('generate', '(c)'),
    ('generate', '(e)', '--len', '9'),
    ('generate', 'afx'),
    ('generate', 'af', 'e'),
])
def test_generate_usage_errors(args):
    with pytest.raises(CommandError) as excinfo:
        stewart(*args)
    assert excinfo.value.returncode == 3


def test_eval_formula():
    assert stewart('eval', 'Ax Ey y=x+1').strip() == 'eval query: TRUE'
    assert stewart('eval', 'Ex', 'x+1=0').strip() == 'eval query: FALSE'
    assert stewart('eval', 'x<y').startswith('eval query(x,y): 2 tracks [3, 3]')


def test_eval_expectation():
    assert stewart('eval', 'Ex x=1', '--expect', 'true').strip() == 'eval query: TRUE'
    with pytest.raises(CommandError) as excinfo:
        stewart('eval', 'Ex x=1', '--expect', 'false')
    assert excinfo.value.returncode == 1


def test_eval_json():
    data = json.loads(stewart('eval', 'Ex x=1', '--format', 'json'))
    assert data == [{
        'kind': 'eval',
        'name': 'query',
        'body': 'Ex x=1',
        'value': True,
        'variables': [],
        'summary': '',
    }]


@pytest.mark.parametrize('args', [
    ('eval',),
    ('eval', 'x==1'),
    ('eval', '$nope(x)'),
    ('eval', 'x=1', '--script', 'hascube'),
    ('eval', '--script', 'no-such-script'),
])
def test_eval_usage_errors(args):
    with pytest.raises(CommandError) as excinfo:
        stewart(*args)
    assert excinfo.value.returncode == 3


def test_eval_strict():
    assert stewart('eval', 'Et $link7(9,t)').strip() == 'eval query: TRUE'
    with pytest.raises(CommandError) as excinfo:
        stewart('eval', 'Et $link7(9,t)', '--strict')
    assert excinfo.value.returncode == 3


def test_state_cap():
    with pytest.raises(CommandError) as excinfo:
        stewart('eval', 'x<y & y<z', '--state-cap', '1')
    assert excinfo.value.returncode == 2


def test_eval_shipped_script():
    lines = stewart('eval', '--script', 'reg').splitlines()
    assert [line.split('(')[0] for line in lines] == ['reg pref', 'reg link', 'reg bnd', 'reg power3']


@pytest.mark.django_db
def test_eval_script_file_and_save(tmp_path):
    script = tmp_path / 'succ.txt'
    script.write_text('def succ "y=x+1":\neval two "$succ(1,2)";\n')
    output = stewart('eval', '--script', str(script), '--save')
    assert output.splitlines()[1] == 'eval two: TRUE'
    stored = StoredAutomaton.objects.load('succ')
    assert stored.variable_names == ('x', 'y')
    assert stewart('export', 'succ').startswith('lsd_3 lsd_3')


def test_check():
    output = stewart('check', 'cubes', '--len', '3')
    assert output.strip() == 'PASS cubes: Finite Stewart words contain no cubes (259 cases; len=3; seed 7)'


def test_check_json():
    data = json.loads(stewart('check', 'cubes', 'ap', '--len', '2', '--seed', '11', '--format', 'json'))
    assert [report['identifier'] for report in data] == ['cubes', 'ap']
    assert data[0]['passed'] is True
    assert data[0]['seed'] == 11


def test_check_unknown_identifier():
    with pytest.raises(CommandError) as excinfo:
        stewart('check', 'faceq')
    assert excinfo.value.returncode == 3


def test_export():
    assert stewart('export', 'TP') == write_walnut(STEWART_AUTOMATON)
    assert stewart('export', 'TP', '--format', 'dot').startswith('digraph TP {')
    assert stewart('export', 'power3').startswith('lsd_3\n')
    with pytest.raises(CommandError):
        stewart('export', 'TP', '--format', 'svg')


def test_export_script_predicate(tmp_path):
    script = tmp_path / 'succ.txt'
    script.write_text('def succ "y=x+1":')
    assert stewart('export', 'succ', '--script', str(script), '--format', 'dot').startswith('digraph succ {')


@pytest.mark.django_db
def test_export_unknown():
    with pytest.raises(CommandError) as excinfo:
        stewart('export', 'nothing')
    assert excinfo.value.returncode == 3


def test_output_file(tmp_path):
    target = tmp_path / 'word.txt'
    assert stewart('generate', 'af', '--output', str(target), '--timestamp') == ''
    lines = target.read_text().splitlines()
    assert lines[0].startswith('# ')
    assert lines[1] == '01?011010'
