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
import itertools
import os

import numpy as np
import pytest

from revcyclic.codes.cyclic_code import build, canonical_form, canonicalize, module_rows
from revcyclic.complement import check_rev_comp
from revcyclic.core.howell import CapExceededError, howellize
from revcyclic.core.polynomials import Poly
from revcyclic.core.ring import enumerate_complement_pairs
from revcyclic.oracle import (SearchLimits, brute_rev_comp, brute_reversible,
                              generate_all_codes, oracle_closures, oracle_rev_comp,
                              oracle_reversible, sample_codes, sampled_reversible)
from revcyclic.reversibility import check_reversibility
from revcyclic.sweep import sweep
from strategies import THETAS


def ideals_generated_by_two_elements(n, theta):
    elements = theta.elements()
    words = [Poly(theta, coeffs) for coeffs in itertools.product(elements, repeat=n)]
    return {howellize(module_rows([s, t], theta, n), width=2 * n)
            for s, t in itertools.combinations_with_replacement(words, 2)}


@pytest.mark.parametrize('theta', THETAS, ids=str)
def test_every_ideal_of_the_ring_is_generated(theta):
    generated = [build(gens) for gens in generate_all_codes(1, theta)]
    modules = {code.module for code in generated}
    assert len(modules) == len(generated)
    assert modules == ideals_generated_by_two_elements(1, theta)


@pytest.mark.parametrize('theta', THETAS, ids=str)
def test_principal_ideals_are_generated(theta):
    modules = {build(gens).module for gens in generate_all_codes(2, theta)}
    for coeffs in itertools.product(theta.elements(), repeat=2):
        principal = howellize(module_rows([Poly(theta, coeffs)], theta, 2), width=4)
        assert principal in modules


@pytest.mark.parametrize('n', [1, 2, 3])
@pytest.mark.parametrize('theta', THETAS, ids=str)
def test_generated_codes_are_canonical(theta, n):
    for gens in generate_all_codes(n, theta):
        code = build(gens)
        assert code.is_consistent, str(gens)
        assert canonical_form(code) == gens
        assert canonicalize(code.generators(), n, theta) == gens


@pytest.mark.parametrize('n', [1, 2, 3])
def test_reversibility_matches_oracle(n):
    for theta in THETAS:
        for gens in generate_all_codes(n, theta):
            code = build(gens, validate=False)
            assert check_reversibility(code).verdict == brute_reversible(code), str(gens)


@pytest.mark.parametrize('n', [1, 2])
def test_rev_comp_matches_oracle(n):
    for theta in THETAS:
        pairs = enumerate_complement_pairs(theta)
        for gens in generate_all_codes(n, theta):
            code = build(gens, validate=False)
            report = check_reversibility(code)
            for cp in pairs:
                assert check_rev_comp(code, cp, report).verdict == brute_rev_comp(code, cp), \
                    '{} {}'.format(gens, cp)


def test_cap(example_codes):
    code = example_codes[5]
    with pytest.raises(CapExceededError):
        brute_reversible(code, cap=1000)
    result = oracle_reversible(code, cap=1000, samples=32, rng=np.random.default_rng(0))
    assert result.verdict
    assert not result.exhaustive
    assert result.checked == 32
    exhaustive = oracle_reversible(code)
    assert exhaustive.exhaustive
    assert exhaustive.checked == code.size


def test_sampled_rev_comp(example_codes):
    code = example_codes[4]
    rng = np.random.default_rng(1)
    for cp in enumerate_complement_pairs(code.theta):
        sampled = oracle_rev_comp(code, cp, cap=16, samples=64, rng=rng)
        assert not sampled.exhaustive
        assert sampled.verdict == check_rev_comp(code, cp).verdict


def test_small_batches_agree(example_codes):
    code = example_codes[1]
    assert brute_reversible(code, batch_size=7)
    assert sampled_reversible(code, 10, np.random.default_rng(2))


@pytest.mark.parametrize('example_id', [1, 2, 3, 4, 6])
def test_closures_in_one_pass(example_codes, example_id):
    code = example_codes[example_id]
    pairs = enumerate_complement_pairs(code.theta)
    reversible, rev_comps = oracle_closures(code, pairs, batch_size=100)
    assert reversible.exhaustive
    assert reversible.checked == code.size
    assert reversible.verdict == brute_reversible(code)
    assert [rc.verdict for rc in rev_comps] == [brute_rev_comp(code, cp) for cp in pairs]


def test_sampled_closures(example_codes):
    code = example_codes[4]
    pairs = enumerate_complement_pairs(code.theta)
    reversible, rev_comps = oracle_closures(code, pairs, cap=16, samples=64,
                                            rng=np.random.default_rng(3))
    assert reversible.verdict
    assert not reversible.exhaustive
    assert reversible.checked == 64
    for cp, rc in zip(pairs, rev_comps):
        assert not rc.exhaustive
        assert rc.verdict == check_rev_comp(code, cp).verdict


def test_search_limits():
    assert SearchLimits().below(4) == 4
    assert SearchLimits(1).below(4) == 2
    limited = list(generate_all_codes(3, THETAS[1], SearchLimits(0)))
    assert 0 < len(limited) <= len(list(generate_all_codes(3, THETAS[1])))
    for gens in limited:
        for key in ('12', '13', '14', '23', '24', '34'):
            assert gens[key].is_zero or gens[key].degree == 0


def test_sample_codes():
    rng = np.random.default_rng(11)
    for theta in THETAS[:3]:
        for gens in sample_codes(4, theta, 3, rng):
            code = build(gens)
            assert canonical_form(code) == gens


def test_sweep_rows():
    rows = sweep(2, THETAS[:2])
    assert rows
    assert all(row['agree'] for row in rows)
    assert all(row['exhaustive'] for row in rows)
    assert rows[0]['theta'] == str(THETAS[0])


@pytest.mark.performance
@pytest.mark.parametrize('n', [3, 4])
def test_sweep_exhaustive(n):
    limits = SearchLimits(None if n < 4 else 1)
    assert all(row['agree'] for row in sweep(n, THETAS, limits=limits))


@pytest.mark.performance
@pytest.mark.parametrize('n', [5, 6])
def test_sweep_sampled(n):
    rows = sweep(n, THETAS, sample=500, seed=n, workers=os.cpu_count() or 1)
    assert all(row['agree'] for row in rows)


@pytest.mark.performance
def test_sweep_workers():
    serial = sweep(3, THETAS[:2])
    parallel = sweep(3, THETAS[:2], workers=2)
    assert serial == parallel
