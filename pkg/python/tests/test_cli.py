#  Copyright 2020 Regents of the University of Minnesota.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
import csv
import io
import json

import pytest

from revcyclic.cli import main
from revcyclic.codes.z4 import ExtractionError
from revcyclic.oracle import oracle_closures
from revcyclic.reporting import write_rows


@pytest.fixture(name='code_file')
def fixture_code_file(tmp_path):
    def func(gens):
        path = tmp_path / 'code.json'
        path.write_text(json.dumps(gens.to_json()))
        return str(path)
    return func


def test_check_all_pairs(code_file, worked_examples, capsys):
    path = code_file(worked_examples[1].canonical_generators())
    assert main(['check', path, '--all-pairs']) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['size'] == 256
    assert result['reversibility']['verdict']
    assert result['reversibility']['exponents'] == {'alpha': 2, 'beta': 3, 'gamma': 3,
                                                    'delta': 2}
    assert result['rev_comp']
    assert all(rc['verdict'] for rc in result['rev_comp'])


def test_check_failing_pair(code_file, worked_examples, capsys):
    path = code_file(worked_examples[4].canonical_generators())
    assert main(['check', path, '--pair', '1,3+v', '--oracle']) == 1
    result = json.loads(capsys.readouterr().out)
    assert result['reversibility']['verdict']
    assert [rc['verdict'] for rc in result['rev_comp']] == [False]
    assert result['oracle'] == {'reversible': True, 'exhaustive': True, 'rev_comp': [False]}


def test_check_csv(code_file, worked_examples, capsys):
    path = code_file(worked_examples[2].canonical_generators())
    assert main(['check', path, '--pair', '1,2+v', '--format', 'csv']) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 2
    assert rows[0]['reversible'] == 'Yes'
    assert rows[1]['pair_t'] == '2+v'
    assert rows[1]['rev_comp'] == 'Yes'


def test_check_standard_input(worked_examples, monkeypatch, capsys):
    text = json.dumps(worked_examples[6].canonical_generators().to_json())
    monkeypatch.setattr('sys.stdin', io.StringIO(text))
    assert main(['check', '-']) == 0
    assert json.loads(capsys.readouterr().out)['reversibility']['exponents']['delta'] == 4


def test_check_inconsistent_presentation(code_file, worked_examples, capsys, caplog):
    path = code_file(worked_examples[2].displayed_generators())
    assert main(['check', path]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['code'] == worked_examples[2].canonical_generators().to_json()
    assert 'is not canonical' in caplog.text


@pytest.mark.parametrize('text', [
    '{"n": 4, "theta": "2", "g": {}}',
    '{"n": 4, "theta": "0", "g": {"11": "z^2+z+1"}}',
    '{"n": 4}',
    'not json',
])
def test_check_bad_input(tmp_path, capsys, text):
    path = tmp_path / 'bad.json'
    path.write_text(text)
    assert main(['check', str(path)]) == 2
    assert 'revcyclic: error:' in capsys.readouterr().err


def test_check_missing_file(tmp_path, capsys):
    assert main(['check', str(tmp_path / 'missing.json')]) == 2
    assert 'revcyclic: error:' in capsys.readouterr().err


def test_check_extraction_failure(code_file, worked_examples, monkeypatch, capsys):
    def fail(code):
        raise ExtractionError('torsion', 'no divisor of z^n-1')
    monkeypatch.setattr('revcyclic.check.canonical_form', fail)
    path = code_file(worked_examples[2].displayed_generators())
    assert main(['check', path]) == 2
    err = capsys.readouterr().err
    assert 'revcyclic: error:' in err
    assert 'torsion' in err


def test_check_batch_size_from_config(code_file, worked_examples, tmp_path, monkeypatch, capsys):
    config = tmp_path / 'config.yml'
    config.write_text('oracle:\n  batchSize: 7\n')
    seen = []

    def recording(*args):
        seen.append(args[-1])
        return oracle_closures(*args)
    monkeypatch.setattr('revcyclic.check.oracle_closures', recording)
    path = code_file(worked_examples[4].canonical_generators())
    assert main(['--config-file', str(config), 'check', path, '--pair', '1,3+v',
                 '--oracle']) == 1
    assert seen == [7]
    result = json.loads(capsys.readouterr().out)
    assert result['oracle'] == {'reversible': True, 'exhaustive': True, 'rev_comp': [False]}


def test_check_bad_pair(code_file, worked_examples, capsys):
    path = code_file(worked_examples[1].canonical_generators())
    assert main(['check', path, '--pair', '2,0']) == 2
    assert main(['check', path, '--pair', '1']) == 2


def test_examples(capsys):
    assert main(['examples']) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert {row['row'] for row in rows} == {str(i) for i in range(1, 11)}
    assert all(row['oracle_agrees'] == 'Yes' for row in rows)


def test_sweep(capsys):
    assert main(['sweep', '--n', '2', '--theta', '2*v', '--format', 'json']) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows
    assert {row['theta'] for row in rows} == {'2*v'}
    assert all(row['agree'] for row in rows)


def test_sweep_with_config(tmp_path, capsys):
    path = tmp_path / 'config.yml'
    path.write_text('sweep:\n  maxOffsetDegree: 0\n')
    assert main(['--config-file', str(path), 'sweep', '--n', '2', '--theta', 'v',
                 '--sample', '3', '--seed', '5']) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 3


def test_help(capsys):
    assert main([]) == 0
    assert 'usage' in capsys.readouterr().out


def test_write_rows():
    out = io.StringIO()
    write_rows([{'a': True, 'b': None, 'c': 3}], ('a', 'b', 'c'), 'csv', out)
    assert out.getvalue() == 'a,b,c\nYes,,3\n'
    out = io.StringIO()
    write_rows([{'a': True, 'b': None, 'c': 3}], ('a', 'c'), 'json', out)
    assert json.loads(out.getvalue()) == [{'a': True, 'c': 3}]
    with pytest.raises(ValueError):
        write_rows([], ('a',), 'xml', io.StringIO())
