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
"""Howell normal forms of submodules of Z4^m.

A Howell form is a row echelon form whose pivots are 1 or 2, whose entries above pivots are
reduced, and which has the Howell property: every vector of the span that vanishes on the first
j columns is a combination of the rows with pivot column at least j. Together these make the
form unique for a given span and make reduction an exact membership test.
"""
import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    'WidthMismatchError',
    'CapExceededError',
    'HowellForm',
    'howellize',
    'membership',
    'size',
    'enumerate_span',
]

logger = logging.getLogger(__name__)

MODULUS = 4


class WidthMismatchError(ValueError):
    pass


class CapExceededError(ValueError):
    def __init__(self, size: int, cap: int):
        super().__init__('Module has {} elements, more than the cap of {}'.format(size, cap))
        self.size = size
        self.cap = cap


class HowellForm:
    """The Howell form of a submodule of Z4^width.

    Attributes
    ----------
    width : int
        the length of the vectors.
    rows : numpy.ndarray
        (r, width) int8 array of the echelonized rows.
    pivots : tuple of (int, int)
        the pivot column and pivot value (1 or 2) of each row.

    """
    __slots__ = ('width', 'rows', 'pivots')

    def __init__(self, width: int, rows: np.ndarray, pivots: Sequence[Tuple[int, int]]):
        self.width = width
        self.rows = rows
        self.pivots = tuple(pivots)

    def __eq__(self, other):
        if not isinstance(other, HowellForm):
            return NotImplemented
        return (self.width == other.width and self.pivots == other.pivots
                and np.array_equal(self.rows, other.rows))

    def __hash__(self):
        return hash((self.width, self.pivots, self.rows.tobytes()))

    def __repr__(self):
        return 'HowellForm(width={}, pivots={})'.format(self.width, self.pivots)

    def __len__(self):
        return len(self.pivots)

    def __contains__(self, v) -> bool:
        return membership(self, v)

    @property
    def size(self) -> int:
        return size(self)

    def _vector(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % MODULUS
        if v.shape[-1] != self.width:
            raise WidthMismatchError('Vector of width {} against a form of width {}'
                                     .format(v.shape[-1], self.width))
        return v

    def reduce(self, v) -> Tuple[np.ndarray, np.ndarray]:
        """Reduces v against the rows.

        Returns
        -------
        tuple of numpy.ndarray
            the reduced representative of v modulo the span, and the coefficients that were
            subtracted, one per row, so that ``v = remainder + coefficients @ rows (mod 4)``.
        """
        v = self._vector(v).copy()
        coefficients = np.zeros(len(self.pivots), dtype=np.int64)
        for i, (column, pivot) in enumerate(self.pivots):
            q = v[column] // pivot
            if q:
                v = (v - q * self.rows[i]) % MODULUS
                coefficients[i] = q
        return v, coefficients

    def certificate(self, v) -> Optional[np.ndarray]:
        """Coefficients over the rows that combine to v, or None when v is not in the span."""
        remainder, coefficients = self.reduce(v)
        if remainder.any():
            return None
        return coefficients

    def contains_batch(self, vectors: np.ndarray) -> np.ndarray:
        """Vectorised membership for an (N, width) array; returns a boolean array of length N."""
        vectors = self._vector(vectors)
        if vectors.ndim == 1:
            vectors = vectors[None, :]
        vectors = vectors.copy()
        rows = self.rows.astype(np.int64)
        for i, (column, pivot) in enumerate(self.pivots):
            q = vectors[:, column] // pivot
            vectors = (vectors - q[:, None] * rows[i]) % MODULUS
        return ~vectors.any(axis=1)

    def rows_from(self, column: int) -> np.ndarray:
        """The rows whose pivot column is at least ``column``.

        By the Howell property they span every element of the module vanishing on the first
        ``column`` coordinates.
        """
        keep = [i for i, (c, _) in enumerate(self.pivots) if c >= column]
        return self.rows[keep]

    def radices(self) -> List[int]:
        return [4 if pivot == 1 else 2 for _, pivot in self.pivots]

    def combine(self, coefficients: np.ndarray) -> np.ndarray:
        """Words for an (N, r) array of coefficients."""
        return (np.asarray(coefficients, dtype=np.int64) @ self.rows.astype(np.int64)) % MODULUS

    def iter_batches(self, batch_size: int = 65536, cap: Optional[int] = None
                     ) -> Iterator[np.ndarray]:
        """Streams the whole span in (N, width) batches, each element exactly once."""
        total = size(self)
        if cap is not None and total > cap:
            raise CapExceededError(total, cap)
        radices = np.array(self.radices(), dtype=np.int64)
        for start in range(0, total, batch_size):
            index = np.arange(start, min(start + batch_size, total), dtype=np.int64)
            coefficients = np.zeros((len(index), len(radices)), dtype=np.int64)
            for i in range(len(radices) - 1, -1, -1):
                index, coefficients[:, i] = np.divmod(index, radices[i])
            yield self.combine(coefficients)

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Uniformly random elements of the span."""
        coefficients = np.stack([rng.integers(0, radix, size=count) for radix in self.radices()],
                                axis=1) if self.pivots else np.zeros((count, 0), dtype=np.int64)
        return self.combine(coefficients)

    def to_json(self) -> dict:
        return {
            'width': self.width,
            'rows': self.rows.tolist(),
            'pivots': [list(p) for p in self.pivots]
        }


def howellize(matrix: Iterable[Sequence[int]], width: Optional[int] = None) -> HowellForm:
    """Computes the Howell form of the span of the rows of ``matrix`` over Z4.

    Parameters
    ----------
    matrix : iterable of sequences of int
        the generating rows.
    width : int, optional
        the row width, needed when there are no rows.

    Returns
    -------
    HowellForm
        the canonical form of the span.
    """
    rows = [np.asarray(r, dtype=np.int64) % MODULUS for r in matrix]
    if width is None:
        if not rows:
            raise WidthMismatchError('Width is required for an empty matrix')
        width = len(rows[0])
    if any(r.shape != (width,) for r in rows):
        raise WidthMismatchError('All rows must have width {}'.format(width))
    rows = [r for r in rows if r.any()]
    r = 0
    pivots = []
    for column in range(width):
        candidates = [j for j in range(r, len(rows)) if rows[j][column]]
        if not candidates:
            continue
        units = [j for j in candidates if rows[j][column] % 2]
        j = units[0] if units else candidates[0]
        rows[r], rows[j] = rows[j], rows[r]
        if rows[r][column] == 3:
            rows[r] = 3 * rows[r] % MODULUS
        pivot = int(rows[r][column])
        for j in range(r + 1, len(rows)):
            q = rows[j][column] // pivot
            if q:
                rows[j] = (rows[j] - q * rows[r]) % MODULUS
        for j in range(r):
            q = rows[j][column] // pivot
            if q:
                rows[j] = (rows[j] - q * rows[r]) % MODULUS
        if pivot == 2:
            # annihilator of the pivot
            rows.append(2 * rows[r] % MODULUS)
        pivots.append((column, pivot))
        r += 1
    if r:
        result = np.array(rows[:r], dtype=np.int8)
    else:
        result = np.zeros((0, width), dtype=np.int8)
    logger.debug('Howell form of width %d with %d rows', width, r)
    return HowellForm(width, result, pivots)


def membership(form: HowellForm, v) -> bool:
    remainder, _ = form.reduce(v)
    return not remainder.any()


def size(form: HowellForm) -> int:
    total = 1
    for radix in form.radices():
        total *= radix
    return total


def enumerate_span(form: HowellForm, cap: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Yields every element of the span once, as tuples."""
    for batch in form.iter_batches(cap=cap):
        for word in batch:
            yield tuple(int(x) for x in word)
