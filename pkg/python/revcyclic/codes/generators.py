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
"""The ten binary polynomials g_ij presenting a cyclic code over R_theta.

The code is generated by

    g_1 = g11 + 2 g12 + k (g13 + 2 g14)
    g_2 = 2 g22 + k (g23 + 2 g24)
    g_3 = k (g33 + 2 g34)
    g_4 = 2 k g44

with k = k_theta and binary polynomials lifted to {0, 1} coefficients.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple, Union

from revcyclic.codes.z4 import PresentationError, Z4CyclicCode, bound_degree
from revcyclic.core.polynomials import Poly, from_digits
from revcyclic.core.ring import ChainRingError, RTheta, ThetaParam, Z2, Z4
from revcyclic.core.syntax import ParseError, parse_binary, parse_theta

__all__ = [
    'GENERATOR_KEYS',
    'GeneratorConstraintError',
    'CodeFormatError',
    'CanonicalGenerators',
    'join_k',
]

GENERATOR_KEYS = ('11', '12', '13', '14', '22', '23', '24', '33', '34', '44')

_COORDINATES = ThetaParam(RTheta(0, 0))

# j-th generator rows, anchored on g_jj
_ROWS = {
    '11': ('12', '13', '14'),
    '22': ('23', '24'),
    '33': ('34',),
}


class GeneratorConstraintError(PresentationError):
    pass


class CodeFormatError(ValueError):
    pass


def join_k(x0: Poly, x1: Poly, theta: ThetaParam) -> Poly:
    """The R_theta polynomial x0 + k_theta x1 for Z4 polynomials x0 and x1."""
    length = max(len(x0.coeffs), len(x1.coeffs))
    return Poly(theta, [theta.from_k(x0.coefficient(i), x1.coefficient(i))
                        for i in range(length)])


@dataclass(frozen=True)
class CanonicalGenerators:
    """The polynomials g_ij with n and theta, stored in ``GENERATOR_KEYS`` order."""
    n: int
    theta: ThetaParam
    polys: Tuple[Poly, ...]

    @classmethod
    def of(cls, n: int, theta: Union[ThetaParam, RTheta],
           **polys: Union[Poly, str]) -> 'CanonicalGenerators':
        """Builds generators from keyword arguments ``g11=...``; missing ones are zero.

        Text values are parsed as binary polynomials.
        """
        if not isinstance(theta, ThetaParam):
            theta = ThetaParam(theta)
        unknown = set(polys) - {'g' + key for key in GENERATOR_KEYS}
        if unknown:
            raise KeyError('Unknown generator names: {}'.format(sorted(unknown)))
        values = []
        for key in GENERATOR_KEYS:
            value = polys.get('g' + key, Poly(Z2))
            if isinstance(value, str):
                value = parse_binary(value)
            values.append(value)
        return cls(n, theta, tuple(values))

    def __getitem__(self, key: str) -> Poly:
        return self.polys[GENERATOR_KEYS.index(key.lstrip('g'))]

    def as_dict(self) -> Dict[str, Poly]:
        return dict(zip(GENERATOR_KEYS, self.polys))

    def __str__(self):
        nonzero = ', '.join('g{}={}'.format(k, p) for k, p in self.as_dict().items()
                            if not p.is_zero)
        return 'n={} θ={} [{}]'.format(self.n, self.theta, nonzero)

    @property
    def residue_pair(self) -> Z4CyclicCode:
        return Z4CyclicCode(self.n, self['11'], self['12'], self['22'])

    @property
    def torsion_pair(self) -> Z4CyclicCode:
        return Z4CyclicCode(self.n, self['33'], self['34'], self['44'])

    @property
    def offset1(self) -> Poly:
        """g13 + 2 g14 over Z4."""
        return from_digits(self['13'], self['14'])

    @property
    def offset2(self) -> Poly:
        """g23 + 2 g24 over Z4."""
        return from_digits(self['23'], self['24'])

    def validate(self):
        n = self.n
        for key, poly in self.as_dict().items():
            if poly.ring != Z2:
                raise GeneratorConstraintError('binary coefficients', 'g' + key)
            if poly.degree is not None and poly.degree >= n:
                raise GeneratorConstraintError('degree below n', 'g' + key)
        for anchor, row in _ROWS.items():
            if self[anchor].is_zero:
                for key in row:
                    if not self[key].is_zero:
                        raise GeneratorConstraintError('g{} = 0 when g{} = 0'.format(key, anchor),
                                                       'g' + key)
        for key in GENERATOR_KEYS:
            i, j = key
            if i == j or self[key].is_zero:
                continue
            if self[key].degree >= bound_degree(self[j + j], n):
                raise GeneratorConstraintError('deg g{} < deg g{}'.format(key, j + j), 'g' + key)
        try:
            self.residue_pair.validate(names=('g11', 'g12', 'g22'))
            self.torsion_pair.validate(names=('g33', 'g34', 'g44'))
        except PresentationError as e:
            raise GeneratorConstraintError(e.constraint, e.polynomial) from e

    def generator_polys(self) -> List[Poly]:
        """The four generators g_1 .. g_4 over R_theta."""
        theta = self.theta
        residue = self.residue_pair
        torsion = self.torsion_pair
        zero = Poly(Z4)
        return [
            join_k(residue.odd_generator, self.offset1, theta),
            join_k(residue.even_generator, self.offset2, theta),
            join_k(zero, torsion.odd_generator, theta),
            join_k(zero, torsion.even_generator, theta),
        ]

    def to_json(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'theta': self.theta.to_json(self.theta.theta),
            'g': {key: poly.to_json() for key, poly in self.as_dict().items()
                  if not poly.is_zero}
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> 'CanonicalGenerators':
        """Reads the code description format.

        ``{"n": 4, "theta": [0, 2], "g": {"11": [1, 1, 1, 1], "22": "z^2+1", ...}}``; theta may
        also be text such as ``"2*v"`` and polynomials may be text.
        """
        if not isinstance(obj, Mapping):
            raise CodeFormatError('Code description must be a JSON object')
        try:
            n = obj['n']
            theta = obj['theta']
            polys = obj.get('g', {})
        except KeyError as e:
            raise CodeFormatError('Code description is missing {}'.format(e))
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise CodeFormatError('"n" must be a positive integer, got {!r}'.format(n))
        if isinstance(theta, str):
            try:
                theta = parse_theta(theta)
            except ParseError as e:
                raise CodeFormatError('Malformed theta: {}'.format(e))
        else:
            try:
                theta = ThetaParam(_COORDINATES.from_json(theta))
            except ChainRingError:
                raise
            except ValueError as e:
                raise CodeFormatError('Malformed theta: {}'.format(e))
        if not isinstance(polys, Mapping):
            raise CodeFormatError('"g" must be an object')
        values = {}
        for key, value in polys.items():
            if key.lstrip('g') not in GENERATOR_KEYS:
                raise CodeFormatError('Unknown generator {!r}'.format(key))
            try:
                if isinstance(value, str):
                    poly = parse_binary(value)
                else:
                    poly = Poly.from_json(Z2, value)
            except ValueError as e:
                raise CodeFormatError('Malformed polynomial g{}: {}'.format(key.lstrip('g'), e))
            values['g' + key.lstrip('g')] = poly
        return cls.of(n, theta, **values)
