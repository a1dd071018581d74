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

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from revcyclic.core.howell import (CapExceededError, WidthMismatchError, enumerate_span,
                                   howellize)


@st.composite
def matrices(draw, max_rows=3, max_width=4):
    width = draw(st.integers(min_value=1, max_value=max_width))
    rows = draw(st.lists(st.lists(st.integers(min_value=0, max_value=3), min_size=width,
                                  max_size=width), max_size=max_rows))
    return width, rows


def brute_span(rows, width):
    span = set()
    for coefficients in itertools.product(range(4), repeat=len(rows)):
        word = np.zeros(width, dtype=np.int64)
        for c, row in zip(coefficients, rows):
            word = (word + c * np.asarray(row)) % 4
        span.add(tuple(int(x) for x in word))
    return span


def test_single_row():
    form = howellize([[1, 1]])
    assert form.size == 4
    assert [2, 2] in form
    assert [1, 0] not in form


def test_annihilator_row():
    form = howellize([[2, 1]])
    assert form.pivots == ((0, 2), (1, 2))
    assert form.size == 4
    assert [0, 2] in form
    assert form.rows_from(1).tolist() == [[0, 2]]


def test_empty_module():
    form = howellize([], width=3)
    assert form.size == 1
    assert [0, 0, 0] in form
    assert [0, 1, 0] not in form
    with pytest.raises(WidthMismatchError):
        howellize([])


def test_width_mismatch():
    with pytest.raises(WidthMismatchError):
        howellize([[1, 2], [1, 2, 3]])
    form = howellize([[1, 2]])
    with pytest.raises(WidthMismatchError):
        form.reduce([1, 2, 3])


@settings(deadline=None)
@given(matrices())
def test_span_matches_brute_force(matrix):
    width, rows = matrix
    form = howellize(rows, width=width)
    span = brute_span(rows, width)
    enumerated = list(enumerate_span(form))
    assert len(enumerated) == form.size == len(span)
    assert set(enumerated) == span
    for word in itertools.product(range(4), repeat=width):
        assert (word in form) == (word in span)


@settings(deadline=None)
@given(matrices())
def test_form_is_canonical(matrix):
    width, rows = matrix
    form = howellize(rows, width=width)
    total = [int(x) for x in np.sum(np.asarray(rows, dtype=np.int64).reshape(-1, width),
                                    axis=0) % 4]
    assert howellize(list(reversed(rows)) + [total], width=width) == form
    assert howellize(form.rows.tolist(), width=width) == form


@settings(deadline=None)
@given(matrices())
def test_certificate(matrix):
    width, rows = matrix
    form = howellize(rows, width=width)
    for word in enumerate_span(form):
        coefficients = form.certificate(word)
        assert coefficients is not None
        assert form.combine(coefficients[None, :]).tolist() == [list(word)]


def test_certificate_of_non_member():
    form = howellize([[2, 0]])
    assert form.certificate([1, 0]) is None


def test_cap():
    form = howellize([[1, 0, 0], [0, 1, 0]])
    with pytest.raises(CapExceededError) as exc_info:
        list(form.iter_batches(cap=10))
    assert exc_info.value.size == 16


def test_batches_cover_span_once():
    form = howellize([[1, 0, 2], [0, 2, 0]])
    words = [tuple(w) for batch in form.iter_batches(batch_size=3) for w in batch.tolist()]
    assert len(words) == len(set(words)) == form.size == 8


def test_contains_batch_and_sample():
    form = howellize([[1, 1, 0], [0, 2, 2]])
    samples = form.sample(20, np.random.default_rng(3))
    assert form.contains_batch(samples).all()
    assert form.contains_batch(np.array([[1, 0, 0], [1, 1, 0]])).tolist() == [False, True]
