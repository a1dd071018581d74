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
"""Dense polynomials over Z2, Z4 and R_theta, and their quotient rings modulo z^n - 1.

"""
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from revcyclic.core.ring import FiniteRing, IntegersMod, Z2, Z4

__all__ = [
    'RingMismatchError',
    'DegreeError',
    'ZeroDivisorError',
    'Poly',
    'QuotientContext',
    'add',
    'sub',
    'mul_poly',
    'reciprocal',
    'reverse_in_ring',
    'divmod_binary',
    'divides',
    'gcd_binary',
    'is_self_reciprocal',
    'digits',
    'from_digits',
    'binary_divisors',
    'binary_polys_below',
]


class RingMismatchError(ValueError):
    pass


class DegreeError(ValueError):
    pass


class ZeroDivisorError(ZeroDivisionError):
    pass


def _coefficient_text(ring: FiniteRing, c, power: int) -> str:
    text = ring.format(c)
    if power == 0:
        return text
    if c == ring.one:
        return ''
    if '+' in text:
        return '(' + text + ')*'
    return text + '*'


class Poly:
    """A polynomial stored as its coefficient tuple, constant term first, with trailing zeros
    trimmed. The zero polynomial has no coefficients and no degree.
    """
    __slots__ = ('ring', 'coeffs')

    def __init__(self, ring: FiniteRing, coeffs: Iterable = ()):
        coeffs = list(coeffs)
        zero = ring.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ring: FiniteRing) -> 'Poly':
        return cls(ring)

    @classmethod
    def one(cls, ring: FiniteRing) -> 'Poly':
        return cls(ring, [ring.one])

    @classmethod
    def monomial(cls, ring: FiniteRing, k: int, c=None) -> 'Poly':
        c = ring.one if c is None else c
        return cls(ring, [ring.zero] * k + [c])

    @classmethod
    def from_ints(cls, ring: FiniteRing, ints: Iterable[int]) -> 'Poly':
        return cls(ring, [ring.from_int(i) for i in ints])

    @property
    def degree(self) -> Optional[int]:
        """The degree, or ``None`` for the zero polynomial."""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return 'Poly({!r}, {!r})'.format(self.ring, str(self))

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == self.ring.zero:
                continue
            if power == 0:
                monomial = ''
            elif power == 1:
                monomial = 'z'
            else:
                monomial = 'z^{}'.format(power)
            terms.append(_coefficient_text(self.ring, c, power) + monomial)
        return '+'.join(terms)

    def _check(self, other: 'Poly'):
        if self.ring != other.ring:
            raise RingMismatchError('Cannot combine polynomials over {!r} and {!r}'
                                    .format(self.ring, other.ring))

    def __add__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        ring = self.ring
        longest = itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=ring.zero)
        return Poly(ring, [ring.add(x, y) for x, y in longest])

    def __neg__(self) -> 'Poly':
        return Poly(self.ring, [self.ring.neg(x) for x in self.coeffs])

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        ring = self.ring
        if not self.coeffs or not other.coeffs:
            return Poly(ring)
        if isinstance(ring, IntegersMod):
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                if x:
                    for j, y in enumerate(other.coeffs):
                        out[i + j] += x * y
            return Poly(ring, [c % ring.modulus for c in out])
        out = [ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == ring.zero:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = ring.add(out[i + j], ring.mul(x, y))
        return Poly(ring, out)

    def scale(self, c) -> 'Poly':
        return Poly(self.ring, [self.ring.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> 'Poly':
        """Multiplies by z^k for k >= 0."""
        if not self.coeffs:
            return self
        return Poly(self.ring, (self.ring.zero,) * k + self.coeffs)

    def lift(self, ring: FiniteRing) -> 'Poly':
        """Reads the integer coefficients 0..m-1 as elements of another ring.

        Binary polynomials lift to {0,1} coefficients.
        """
        return Poly(ring, [ring.from_int(int(c)) for c in self.coeffs])

    def mod2(self) -> 'Poly':
        return Poly(Z2, [int(c) % 2 for c in self.coeffs])

    def div2(self) -> 'Poly':
        """For a Z4 polynomial with even coefficients, the binary polynomial of halves."""
        if any(c % 2 for c in self.coeffs):
            raise ValueError('{} has odd coefficients'.format(self))
        return Poly(Z2, [c // 2 for c in self.coeffs])

    def to_vector(self, n: int) -> list:
        if len(self.coeffs) > n:
            raise DegreeError('Polynomial {} has degree >= {}'.format(self, n))
        return list(self.coeffs) + [self.ring.zero] * (n - len(self.coeffs))

    def to_json(self) -> list:
        return [self.ring.to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, ring: FiniteRing, obj) -> 'Poly':
        if not isinstance(obj, list):
            raise ValueError('Polynomial JSON must be an array: {!r}'.format(obj))
        return cls(ring, [ring.from_json(c) for c in obj])


def add(p: Poly, q: Poly, ctx: 'QuotientContext' = None) -> Poly:
    r = p + q
    return ctx.reduce(r) if ctx is not None else r


def sub(p: Poly, q: Poly, ctx: 'QuotientContext' = None) -> Poly:
    r = p - q
    return ctx.reduce(r) if ctx is not None else r


def mul_poly(p: Poly, q: Poly, ctx: 'QuotientContext' = None) -> Poly:
    r = p * q
    return ctx.reduce(r) if ctx is not None else r


@dataclass(frozen=True)
class QuotientContext:
    """The quotient ring ring[z] / (z^n - 1)."""
    n: int
    ring: FiniteRing

    def __post_init__(self):
        if self.n < 1:
            raise ValueError('Length must be positive, got {}'.format(self.n))

    def reduce(self, p: Poly) -> Poly:
        if p.ring != self.ring:
            raise RingMismatchError('Polynomial over {!r} used in {!r}'.format(p.ring, self))
        if len(p.coeffs) <= self.n:
            return p
        ring = self.ring
        out = [ring.zero] * self.n
        for i, c in enumerate(p.coeffs):
            out[i % self.n] = ring.add(out[i % self.n], c)
        return Poly(ring, out)

    def mul(self, p: Poly, q: Poly) -> Poly:
        return self.reduce(p * q)

    def monomial(self, k: int, c=None) -> Poly:
        return Poly.monomial(self.ring, k % self.n, c)

    def shift(self, p: Poly, k: int) -> Poly:
        """Multiplies by z^k; negative k is read as z^(k mod n)."""
        return self.reduce(p.shift(k % self.n))

    def ones(self, c=None) -> Poly:
        """c * (1 + z + ... + z^(n-1))."""
        c = self.ring.one if c is None else c
        return Poly(self.ring, [c] * self.n)

    def check_length(self, p: Poly):
        if p.degree is not None and p.degree >= self.n:
            raise DegreeError('Polynomial {} has degree {} >= n = {}'.format(p, p.degree, self.n))

    def modulus(self) -> Poly:
        """z^n - 1 as an unreduced polynomial."""
        ring = self.ring
        return Poly.monomial(ring, self.n) - Poly.one(ring)

    def from_vector(self, vector: Sequence) -> Poly:
        if len(vector) != self.n:
            raise DegreeError('Expected {} coefficients, got {}'.format(self.n, len(vector)))
        return Poly(self.ring, vector)


def reciprocal(p: Poly) -> Poly:
    """z^deg(p) p(1/z); the reciprocal of zero is zero."""
    return Poly(p.ring, reversed(p.coeffs))


def reverse_in_ring(p: Poly, ctx: QuotientContext) -> Poly:
    ctx.check_length(p)
    return Poly(p.ring, reversed(p.to_vector(ctx.n)))


def is_self_reciprocal(p: Poly) -> bool:
    return reciprocal(p) == p


def divmod_binary(p: Poly, d: Poly) -> Tuple[Poly, Poly]:
    """Long division of binary polynomials, p = q * d + r with deg r < deg d."""
    if p.ring != Z2 or d.ring != Z2:
        raise RingMismatchError('Binary division needs polynomials over Z2')
    if d.is_zero:
        raise ZeroDivisorError('Division by the zero polynomial')
    remainder = list(p.coeffs)
    dd = d.degree
    quotient = [0] * max(len(remainder) - dd, 0)
    for shift in range(len(remainder) - 1 - dd, -1, -1):
        if remainder[shift + dd]:
            quotient[shift] = 1
            for i, c in enumerate(d.coeffs):
                remainder[shift + i] ^= c
    return Poly(Z2, quotient), Poly(Z2, remainder)


def divides(d: Poly, p: Poly) -> bool:
    return divmod_binary(p, d)[1].is_zero


def gcd_binary(*polys: Poly) -> Poly:
    """The monic gcd over Z2; the gcd of only zero polynomials is zero."""
    result = Poly(Z2)
    for p in polys:
        a, b = result, p
        while not b.is_zero:
            a, b = b, divmod_binary(a, b)[1]
        result = a
    return result


def digits(q: Poly) -> Tuple[Poly, Poly]:
    """Splits a Z4 polynomial as q0 + 2 q1 with binary q0 and q1."""
    if q.ring != Z4:
        raise RingMismatchError('Expected a polynomial over Z4')
    return Poly(Z2, [c % 2 for c in q.coeffs]), Poly(Z2, [c // 2 for c in q.coeffs])


def from_digits(q0: Poly, q1: Poly) -> Poly:
    return q0.lift(Z4) + Poly(Z4, [2 * c for c in q1.coeffs])


def binary_polys_below(degree: int) -> Iterator[Poly]:
    """Every binary polynomial of degree below the bound, zero first."""
    for bits in itertools.product((0, 1), repeat=max(degree, 0)):
        yield Poly(Z2, reversed(bits))


def binary_divisors(n: int) -> List[Poly]:
    """The divisors of z^n + 1 over Z2 of degree below n, by increasing degree.

    z^n + 1 itself vanishes in the quotient ring and is represented by the zero polynomial,
    which callers add on their own.
    """
    modulus = Poly.monomial(Z2, n) + Poly.one(Z2)
    found = [Poly.one(Z2)]
    for degree in range(1, n):
        for bits in itertools.product((0, 1), repeat=degree - 1):
            candidate = Poly(Z2, (1,) + bits[::-1] + (1,))
            if divides(candidate, modulus):
                found.append(candidate)
    return found
