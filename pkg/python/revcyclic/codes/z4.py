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
"""Cyclic codes over Z4 presented as <g + 2p, 2a>.

g, p and a are binary polynomials lifted to {0, 1} coefficients. The zero polynomial stands for
z^n + 1 wherever a divisor of z^n + 1 is expected, so ``g = 0`` means the code has no odd part
and ``a = 0`` means the code is zero.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence

from revcyclic.core.howell import HowellForm, howellize
from revcyclic.core.polynomials import (Poly, QuotientContext, digits, divides,
                                        divmod_binary, from_digits, gcd_binary)
from revcyclic.core.ring import Z2, Z4

__all__ = [
    'PresentationError',
    'ExtractionError',
    'Z4CyclicCode',
    'xn_plus_1',
    'bound_degree',
    'divides_in_quotient',
    'effective_degree',
    'shifts',
]

logger = logging.getLogger(__name__)


class PresentationError(ValueError):
    """A generator presentation violates one of its structural constraints."""

    def __init__(self, constraint: str, polynomial: str, detail: str = ''):
        message = 'Constraint "{}" violated by {}'.format(constraint, polynomial)
        if detail:
            message += ': ' + detail
        super().__init__(message)
        self.constraint = constraint
        self.polynomial = polynomial


class ExtractionError(RuntimeError):
    """Canonical generators could not be extracted from a module."""

    def __init__(self, step: str, detail: str = ''):
        super().__init__('Extraction failed at step "{}"{}'.format(step, ': ' + detail if detail
                                                                   else ''))
        self.step = step


def xn_plus_1(n: int) -> Poly:
    return Poly.monomial(Z2, n) + Poly.one(Z2)


def bound_degree(p: Poly, n: int) -> int:
    """The degree of a divisor of z^n + 1, with zero read as z^n + 1 itself."""
    return n if p.is_zero else p.degree


def effective_degree(p: Poly) -> int:
    """The degree used in degree-gap exponents; zero counts as 0."""
    return 0 if p.is_zero else p.degree


def divides_in_quotient(d: Poly, p: Poly) -> bool:
    """Divisibility among divisors of z^n + 1 where zero stands for z^n + 1."""
    if d.is_zero:
        return p.is_zero
    return divides(d, p)


def shifts(q: Poly, n: int) -> List[List[int]]:
    """The coefficient vectors of z^i q for 0 <= i < n."""
    vector = q.to_vector(n)
    return [vector[n - i:] + vector[:n - i] for i in range(n)]


@dataclass(frozen=True)
class Z4CyclicCode:
    """The Z4 cyclic code <g + 2p, 2a> of length n.

    Attributes
    ----------
    n : int
        the code length.
    g : Poly
        binary generator of the residue code.
    p : Poly
        binary correction term of the odd generator, of degree below ``a``.
    a : Poly
        binary generator of the torsion code {y : 2y in the code}.

    """
    n: int
    g: Poly
    p: Poly
    a: Poly

    @property
    def ctx(self) -> QuotientContext:
        return QuotientContext(self.n, Z4)

    def __str__(self):
        return '<{}, 2({})>'.format(self.odd_generator if not self.g.is_zero else '0',
                                    self.a if not self.a.is_zero else '0')

    def validate(self, names: Sequence[str] = ('g', 'p', 'a')):
        """Checks the presentation constraints, naming polynomials by ``names``."""
        g_name, p_name, a_name = names
        n = self.n
        for poly, name in zip((self.g, self.p, self.a), names):
            if poly.ring != Z2:
                raise PresentationError('binary coefficients', name)
            if poly.degree is not None and poly.degree >= n:
                raise PresentationError('degree below n', name)
        if not self.g.is_zero and not divides(self.g, xn_plus_1(n)):
            raise PresentationError('{} | z^n-1'.format(g_name), g_name, str(self.g))
        if not divides_in_quotient(self.a, self.g):
            raise PresentationError('{} | {}'.format(a_name, g_name), a_name,
                                    '{} does not divide {}'.format(self.a, self.g))
        if not self.p.is_zero:
            if self.g.is_zero:
                raise PresentationError('{} = 0 when {} = 0'.format(p_name, g_name), p_name)
            if self.p.degree >= bound_degree(self.a, n):
                raise PresentationError('deg {} < deg {}'.format(p_name, a_name), p_name)
        if not self.g.is_zero and not divides_in_quotient(self.a, self.torsion_excess()):
            raise PresentationError('{} | {}(z^n-1)/{}'.format(a_name, p_name, g_name), p_name,
                                    '2-part of ((z^n-1)/{}) * ({} + 2{}) is {}'.format(
                                        g_name, g_name, p_name, self.torsion_excess()))

    def torsion_excess(self) -> Poly:
        """((z^n - 1) / g) * (g + 2p) halved, as a binary polynomial.

        It always has even coefficients; the presentation is consistent exactly when ``a``
        divides it. With a Hensel-lifted g this is p * (z^n - 1) / g.
        """
        h, _ = divmod_binary(xn_plus_1(self.n), self.g)
        product = self.ctx.mul(h.lift(Z4), self.odd_generator)
        return product.div2()

    @property
    def odd_generator(self) -> Poly:
        return self.g.lift(Z4) + Poly(Z4, [2 * c for c in self.p.coeffs])

    @property
    def even_generator(self) -> Poly:
        return Poly(Z4, [2 * c for c in self.a.coeffs])

    def generators(self) -> List[Poly]:
        return [q for q in (self.odd_generator, self.even_generator) if not q.is_zero]

    @cached_property
    def module(self) -> HowellForm:
        rows = [row for q in self.generators() for row in shifts(q, self.n)]
        return howellize(rows, width=self.n)

    @property
    def size(self) -> int:
        return self.module.size

    def contains(self, q: Poly) -> bool:
        if q.ring != Z4:
            q = q.lift(Z4)
        self.ctx.check_length(q)
        return q.to_vector(self.n) in self.module

    def reduce(self, q: Poly) -> Poly:
        """The canonical representative r0 + 2 r1 of q modulo the code.

        deg r0 < deg g and deg r1 < deg a, with zero read as z^n + 1. Two polynomials are
        congruent modulo the code exactly when their representatives agree.
        """
        ctx = self.ctx
        q = ctx.reduce(q if q.ring == Z4 else q.lift(Z4))
        q0, q1 = digits(q)
        if self.g.is_zero:
            r0 = q0
        else:
            f, r0 = divmod_binary(q0, self.g)
            q = ctx.reduce(q - f.lift(Z4) * self.odd_generator)
            q1 = (q - r0.lift(Z4)).div2()
        r1 = q1 if self.a.is_zero else divmod_binary(q1, self.a)[1]
        return from_digits(r0, r1)

    @classmethod
    def zero_code(cls, n: int) -> 'Z4CyclicCode':
        return cls(n, Poly(Z2), Poly(Z2), Poly(Z2))

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], n: int) -> 'Z4CyclicCode':
        """Extracts <g + 2p, 2a> from vectors spanning a cyclic code of length n."""
        form = howellize(list(vectors), width=n)
        modulus = xn_plus_1(n)
        residues = [Poly(Z2, [int(c) % 2 for c in row]) for row in form.rows]
        g = gcd_binary(modulus, *residues)
        g = Poly(Z2) if g == modulus else g

        # E = span{(r | 0)} + span{(2 e_j | e_j)}; (0 | w) in E exactly when 2w is in the code.
        augmented = [list(row) + [0] * n for row in form.rows.tolist()]
        for j in range(n):
            row = [0] * (2 * n)
            row[j] = 2
            row[n + j] = 1
            augmented.append(row)
        lifted = howellize(augmented, width=2 * n)
        torsion = [Poly(Z2, [int(c) % 2 for c in row[n:]]) for row in lifted.rows_from(n)]
        a = gcd_binary(modulus, *torsion)
        a = Poly(Z2) if a == modulus else a

        p = Poly(Z2)
        if not g.is_zero:
            remainder, _ = lifted.reduce(g.to_vector(n) + [0] * n)
            if remainder[:n].any():
                raise ExtractionError('lift residue generator',
                                      '{} is not the residue of a codeword'.format(g))
            p = Poly(Z2, [int(c) % 2 for c in remainder[n:]])
            if a.is_zero:
                raise ExtractionError('torsion', 'nonzero residue code with zero torsion')
            p = divmod_binary(p, a)[1]
        code = cls(n, g, p, a)
        code.validate()
        if code.module != form:
            raise ExtractionError('verify', 'extracted {} does not regenerate the module'
                                  .format(code))
        logger.debug('Extracted Z4 code %s of length %d', code, n)
        return code

