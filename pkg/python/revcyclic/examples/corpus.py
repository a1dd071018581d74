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
"""The bundled worked examples and their reverse-complement classification table."""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple

from revcyclic.codes.cyclic_code import CyclicCode, build, canonicalize
from revcyclic.codes.generators import CanonicalGenerators
from revcyclic.core.polynomials import Poly
from revcyclic.core.ring import ComplementPair, ThetaParam, enumerate_complement_pairs
from revcyclic.core.syntax import parse_element, parse_poly, parse_theta

__all__ = [
    'WorkedExample',
    'TableRow',
    'load_examples',
    'load_table',
    'example',
    'examples_by_id',
]


@dataclass(frozen=True)
class WorkedExample:
    """A code given by a list of generators over R_theta.

    Attributes
    ----------
    example_id : int
        the example number.
    n : int
        code length.
    theta : str
        the value of v^2 as text.
    generators : tuple of str
        the generator polynomials as written.
    displayed : dict of str to str, optional
        the binary g_ij the example is presented with, None when its presentation is not binary.
    canonical : dict of str to str
        the canonical g_ij of the code.
    claimed_reversible : bool
        the stated reversibility verdict.
    claimed_exponents : dict of str to int
        the stated degree gaps, possibly empty.

    """
    example_id: int
    n: int
    theta: str
    generators: Tuple[str, ...]
    displayed: Optional[Mapping[str, str]]
    canonical: Mapping[str, str]
    claimed_reversible: bool
    claimed_exponents: Mapping[str, int]

    @property
    def ring(self) -> ThetaParam:
        return parse_theta(self.theta)

    def raw_generators(self) -> List[Poly]:
        ring = self.ring
        return [parse_poly(text, ring) for text in self.generators]

    def canonical_generators(self) -> CanonicalGenerators:
        return _generators(self.n, self.ring, self.canonical)

    def displayed_generators(self) -> Optional[CanonicalGenerators]:
        if self.displayed is None:
            return None
        return _generators(self.n, self.ring, self.displayed)

    def code(self) -> CyclicCode:
        """The code spanned by the generators, built from its canonical form."""
        return build(canonicalize(self.raw_generators(), self.n, self.ring))


def _generators(n: int, theta: ThetaParam, polys: Mapping[str, str]) -> CanonicalGenerators:
    return CanonicalGenerators.of(n, theta, **{'g' + key: text for key, text in polys.items()})


@dataclass(frozen=True)
class TableRow:
    """One row of the classification table; ``pair`` is None for rows covering every pair."""
    row: int
    example_id: int
    pair: Optional[Tuple[str, str]]
    claimed_reversible: bool
    claimed_rev_comp: bool

    def pairs(self, theta: ThetaParam) -> List[ComplementPair]:
        if self.pair is None:
            return enumerate_complement_pairs(theta)
        u, t = self.pair
        return [ComplementPair(theta, parse_element(u, theta), parse_element(t, theta))]


def _load_yaml() -> dict:
    from yaml import load
    try:
        from yaml import CLoader as Loader
    except ImportError:
        from yaml import Loader
    with (Path(__file__).parent / 'workedExamples.yml').open('rb') as f:
        return load(f, Loader=Loader)


_CORPUS = None


def _corpus() -> dict:
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = _load_yaml()
    return _CORPUS


def load_examples() -> List[WorkedExample]:
    examples = []
    for entry in _corpus()['examples']:
        claimed = entry['claimed']
        examples.append(WorkedExample(
            example_id=entry['id'],
            n=entry['n'],
            theta=str(entry['theta']),
            generators=tuple(entry['generators']),
            displayed=entry.get('displayed'),
            canonical=entry['canonical'],
            claimed_reversible=claimed['reversible'],
            claimed_exponents=claimed.get('exponents', {})
        ))
    return examples


def example(example_id: int) -> WorkedExample:
    for e in load_examples():
        if e.example_id == example_id:
            return e
    raise KeyError('No worked example {}'.format(example_id))


def load_table() -> List[TableRow]:
    rows = []
    for entry in _corpus()['table']:
        pair = entry.get('pair')
        rows.append(TableRow(entry['row'], entry['example'], tuple(pair) if pair else None,
                             entry['reversible'], entry['rev_comp']))
    return rows


def examples_by_id() -> Dict[int, WorkedExample]:
    return {e.example_id: e for e in load_examples()}
