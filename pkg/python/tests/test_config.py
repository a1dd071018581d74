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
from revcyclic import config


def test_load_default_config(tmp_path, monkeypatch):
    monkeypatch.delenv('REVCYCLIC_CONFIG', raising=False)
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv('HOME', str(tmp_path))
    c = config.load_config()
    assert isinstance(c, dict)
    assert c['oracle.cap'] == 16777216
    assert c['oracle.samples'] == 256
    assert c['sweep.maxOffsetDegree'] == -1


def test_explicit_config_file(tmp_path):
    path = tmp_path / 'custom.yml'
    path.write_text('oracle:\n  cap: 1024\n')
    c = config.load_config(path)
    assert c['oracle.cap'] == 1024
    assert c['oracle.batchSize'] == 65536


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / 'env.yml'
    path.write_text('sweep:\n  seed: 42\n')
    monkeypatch.setenv('REVCYCLIC_CONFIG', str(path))
    assert config.load_config()['sweep.seed'] == 42


def test_config_in_working_directory(tmp_path, monkeypatch):
    monkeypatch.delenv('REVCYCLIC_CONFIG', raising=False)
    monkeypatch.chdir(tmp_path)
    (tmp_path / 'revcyclicConfig.yml').write_text('sweep:\n  workers: 4\n')
    assert config.load_config()['sweep.workers'] == 4
