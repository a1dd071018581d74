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
import pytest

from revcyclic.core.ring import RTheta
from revcyclic.examples.corpus import example, load_examples, load_table
from revcyclic.examples.table import table_rows
from revcyclic.oracle import brute_rev_comp, brute_reversible


def test_load_examples():
    examples = load_examples()
    assert [e.example_id for e in examples] == [1, 2, 3, 4, 5, 6]
    assert example(6).ring.theta == RTheta(0, 0)
    assert example(6).displayed_generators() is None
    assert not example(6).claimed_reversible
    assert example(1).claimed_exponents == {'alpha': 2, 'beta': 3, 'gamma': 3, 'delta': 2}
    with pytest.raises(KeyError):
        example(7)


def test_load_table():
    rows = load_table()
    assert [row.row for row in rows] == list(range(1, 11))
    assert rows[0].pair is None
    assert rows[1].pair == ('1', '2+v')
    assert [row.row for row in rows if not row.claimed_rev_comp] == [3, 5, 7, 9, 10]


def test_table_rows():
    rows = list(table_rows())
    assert all(row['oracle_agrees'] for row in rows)
    assert all(row['reversible'] for row in rows)
    last = [row for row in rows if row['row'] == 10]
    assert len(last) == 32
    assert sum(row['rev_comp'] for row in last) == 24
    differing = {row['row'] for row in rows if row['rev_comp'] != row['claimed_rev_comp']}
    assert differing == {3, 5, 9, 10}
    assert {row['row'] for row in rows if not row['claimed_reversible']} == {10}


def test_table_rows_batch_size(monkeypatch):
    seen = set()

    def recording(oracle):
        def func(*args):
            seen.add(args[-1])
            return oracle(*args)
        return func
    monkeypatch.setattr('revcyclic.examples.table.brute_reversible',
                        recording(brute_reversible))
    monkeypatch.setattr('revcyclic.examples.table.brute_rev_comp', recording(brute_rev_comp))
    rows = list(table_rows(batch_size=4096))
    assert seen == {4096}
    assert all(row['oracle_agrees'] for row in rows)
