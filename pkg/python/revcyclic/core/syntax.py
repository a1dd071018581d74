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
"""Text syntax for ring elements and polynomials.

Expressions are sums and products of integers, ``v`` (or ``ν``), ``z``, powers ``z^k`` and
parenthesized expressions, e.g. ``2+3*v``, ``3*z^3 + 1*z + 2`` or ``(2+v)*(z^2+z+1)``.
"""
from typing import List, NamedTuple

import regex

from revcyclic.core.polynomials import Poly
from revcyclic.core.ring import FiniteRing, RTheta, ThetaParam, Z4

__all__ = [
    'ParseError',
    'parse_poly',
    'parse_element',
    'parse_theta',
    'parse_binary',
]


class ParseError(ValueError):
    def __init__(self, text: str, position: int, message: str):
        super().__init__('{} at position {} in {!r}'.format(message, position, text))
        self.text = text
        self.position = position


_Token = NamedTuple('_Token', [('kind', str), ('value', str), ('position', int)])

_token_pattern = regex.compile(
    r'(?P<num>\d+)|(?P<v>[vν])|(?P<z>z)|(?P<op>[-+*^()])|(?P<space>\s+)|(?P<bad>.)'
)

# theta is parsed with v^2 = 0; only its (1, v) coordinates matter.
_LINEAR = ThetaParam(RTheta(0, 0))


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    for match in _token_pattern.finditer(text):
        kind = match.lastgroup
        if kind == 'space':
            continue
        if kind == 'bad':
            raise ParseError(text, match.start(), 'Unexpected character {!r}'.format(match.group()))
        tokens.append(_Token(kind, match.group(), match.start()))
    tokens.append(_Token('end', '', len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: FiniteRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.i]

    def _error(self, message: str):
        raise ParseError(self.text, self.current.position, message)

    def _accept(self, value: str) -> bool:
        if self.current.kind == 'op' and self.current.value == value:
            self.i += 1
            return True
        return False

    def parse(self) -> Poly:
        if self.current.kind == 'end':
            self._error('Empty expression')
        result = self.expression()
        if self.current.kind != 'end':
            self._error('Unexpected {!r}'.format(self.current.value))
        return result

    def expression(self) -> Poly:
        result = self.term()
        while True:
            if self._accept('+'):
                result = result + self.term()
            elif self._accept('-'):
                result = result - self.term()
            else:
                return result

    def term(self) -> Poly:
        result = self.factor()
        while self._accept('*'):
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        token = self.current
        ring = self.ring
        if self._accept('-'):
            return -self.factor()
        if self._accept('('):
            inner = self.expression()
            if not self._accept(')'):
                self._error('Expected ")"')
            return inner
        if token.kind == 'num':
            self.i += 1
            return Poly(ring, [ring.from_int(int(token.value))])
        if token.kind == 'v':
            if not isinstance(ring, ThetaParam):
                self._error('v is not an element of {!r}'.format(ring))
            self.i += 1
            return Poly(ring, [ring.v])
        if token.kind == 'z':
            self.i += 1
            power = 1
            if self._accept('^'):
                if self.current.kind != 'num':
                    self._error('Expected an exponent')
                power = int(self.current.value)
                self.i += 1
            return Poly.monomial(ring, power)
        self._error('Unexpected {!r}'.format(token.value or 'end of input'))


def parse_poly(text: str, ring: FiniteRing) -> Poly:
    """Parses a polynomial over ``ring``."""
    return _Parser(text, ring).parse()


def parse_element(text: str, ring: FiniteRing):
    p = parse_poly(text, ring)
    if p.degree is not None and p.degree > 0:
        raise ParseError(text, 0, 'Expected a ring element, not a polynomial')
    return p.coefficient(0)


def parse_theta(text: str) -> ThetaParam:
    """Parses the value of v^2, raising ``ChainRingError`` for chain-ring values."""
    return ThetaParam(parse_element(text, _LINEAR))


def parse_binary(text: str) -> Poly:
    """Parses a binary polynomial; coefficients must already be 0 or 1."""
    p = parse_poly(text, Z4)
    if any(c > 1 for c in p.coeffs):
        raise ParseError(text, 0, 'Binary polynomial has a coefficient outside {0, 1}')
    return p.mod2()

