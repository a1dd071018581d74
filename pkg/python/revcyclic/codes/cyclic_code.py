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
"""Cyclic codes over R_theta as Z4-submodules of Z4^(2n).

A word s_0 + s_1 z + ... + s_(n-1) z^(n-1) over R_theta is embedded as the Z4 vector
(x0 | x1) where s_i = x0_i + x1_i k_theta. The ideal generated by polynomials g is the Z4 span of
z^i g and z^i v g, which is what the Howell form of a code is computed from.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from revcyclic.codes.generators import CanonicalGenerators, join_k
from revcyclic.codes.z4 import ExtractionError, Z4CyclicCode
from revcyclic.core.howell import HowellForm, howellize
from revcyclic.core.polynomials import (DegreeError, Poly, QuotientContext, RingMismatchError,
                                        digits)
from revcyclic.core.ring import IntegersMod, ThetaParam, Z4

__all__ = [
    'CyclicCode',
    'embed',
    'unembed',
    'split_k',
    'module_rows',
    'build',
    'member',
    'certificate',
    'torsion_code',
    'canonicalize',
    'canonical_form',
]

logger = logging.getLogger(__name__)


def split_k(s: Poly, theta: ThetaParam) -> Tuple[Poly, Poly]:
    """Z4 polynomials (x0, x1) with s = x0 + k_theta x1."""
    pairs = [theta.to_k(c) for c in s.coeffs]
    return Poly(Z4, [x0 for x0, _ in pairs]), Poly(Z4, [x1 for _, x1 in pairs])


def embed(s: Poly, theta: ThetaParam, n: int) -> List[int]:
    x0, x1 = split_k(s, theta)
    return x0.to_vector(n) + x1.to_vector(n)


def unembed(vector: Sequence[int], theta: ThetaParam) -> Poly:
    n = len(vector) // 2
    return join_k(Poly(Z4, [int(x) for x in vector[:n]]),
                  Poly(Z4, [int(x) for x in vector[n:]]), theta)


def module_rows(polys: Iterable[Poly], theta: ThetaParam, n: int) -> List[List[int]]:
    """Z4 generators of the ideal spanned by ``polys``: every rotation of s and of v s."""
    ctx = QuotientContext(n, theta)
    v = Poly(theta, [theta.v])
    rows = []
    for s in polys:
        if s.is_zero:
            continue
        s = ctx.reduce(s)
        for multiple in (s, ctx.mul(v, s)):
            for i in range(n):
                rows.append(embed(ctx.shift(multiple, i), theta, n))
    return rows


@dataclass(frozen=True, eq=False)
class CyclicCode:
    """A cyclic code over R_theta with its stated generators and its Howell module.

    Attributes
    ----------
    gens : CanonicalGenerators
        the presentation the code was built from.
    module : HowellForm
        the code as a submodule of Z4^(2n).

    """
    gens: CanonicalGenerators
    module: HowellForm

    @property
    def n(self) -> int:
        return self.gens.n

    @property
    def theta(self) -> ThetaParam:
        return self.gens.theta

    @property
    def ctx(self) -> QuotientContext:
        return QuotientContext(self.n, self.theta)

    @property
    def phi_image(self) -> Z4CyclicCode:
        """The stated residue code <g11 + 2 g12, 2 g22>."""
        return self.gens.residue_pair

    @property
    def torsion(self) -> Z4CyclicCode:
        """The stated torsion code <g33 + 2 g34, 2 g44>."""
        return self.gens.torsion_pair

    @cached_property
    def derived_phi_image(self) -> Z4CyclicCode:
        return Z4CyclicCode.from_vectors(self.module.rows[:, :self.n], self.n)

    @cached_property
    def derived_torsion(self) -> Z4CyclicCode:
        """{b : k_theta b in C}, read off the rows that vanish on the x0 half."""
        return Z4CyclicCode.from_vectors(self.module.rows_from(self.n)[:, self.n:], self.n)

    @property
    def is_consistent(self) -> bool:
        """Whether the module has exactly the stated residue and torsion codes."""
        return (self.derived_phi_image == self.phi_image
                and self.derived_torsion == self.torsion)

    @property
    def size(self) -> int:
        return self.module.size

    def generators(self) -> List[Poly]:
        return self.gens.generator_polys()

    def __eq__(self, other):
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return self.theta == other.theta and self.module == other.module

    def __hash__(self):
        return hash((self.theta, self.module))

    def __str__(self):
        return str(self.gens)


def build(gens: CanonicalGenerators, validate: bool = True) -> CyclicCode:
    """Assembles the four generators and the Z4^(2n) module of the code they generate.

    Parameters
    ----------
    gens : CanonicalGenerators
        the ten binary polynomials with n and theta.
    validate : bool
        whether to check the presentation constraints first, raising
        ``GeneratorConstraintError`` on the first violation.

    Returns
    -------
    CyclicCode
        the built code.
    """
    if validate:
        gens.validate()
    rows = module_rows(gens.generator_polys(), gens.theta, gens.n)
    module = howellize(rows, width=2 * gens.n)
    logger.debug('Built %s with %d codewords', gens, module.size)
    return CyclicCode(gens, module)


def _word(c: CyclicCode, s: Poly) -> List[int]:
    if isinstance(s.ring, IntegersMod):
        s = s.lift(c.theta)
    if s.ring != c.theta:
        raise RingMismatchError('Polynomial over {!r} tested against a code over {!r}'
                                .format(s.ring, c.theta))
    if s.degree is not None and s.degree >= c.n:
        raise DegreeError('Word {} has degree {} >= n = {}'.format(s, s.degree, c.n))
    return embed(s, c.theta, c.n)


def member(c: CyclicCode, s: Poly) -> bool:
    """Whether the word s lies in the code. Z2 and Z4 polynomials are read in R_theta."""
    return _word(c, s) in c.module


def certificate(c: CyclicCode, s: Poly) -> Optional[Tuple[int, ...]]:
    """Coefficients over the Howell rows of ``c.module`` summing to s, or None when s is not
    in the code.
    """
    coefficients = c.module.certificate(_word(c, s))
    if coefficients is None:
        return None
    return tuple(int(x) for x in coefficients)


def torsion_code(c: CyclicCode) -> Z4CyclicCode:
    return c.torsion


def _offset(module: HowellForm, anchor: Poly, torsion: Z4CyclicCode, n: int) -> Poly:
    # (anchor | x) is in the module for some x; reducing (anchor | 0) leaves (0 | -x) modulo
    # the torsion rows.
    remainder, _ = module.reduce(anchor.to_vector(n) + [0] * n)
    if remainder[:n].any():
        raise ExtractionError('lift offset', '{} is not the residue of a codeword'.format(anchor))
    return torsion.reduce(-Poly(Z4, [int(x) for x in remainder[n:]]))


def _extract(module: HowellForm, n: int, theta: ThetaParam) -> CanonicalGenerators:
    residue = Z4CyclicCode.from_vectors(module.rows[:, :n], n)
    torsion = Z4CyclicCode.from_vectors(module.rows_from(n)[:, n:], n)
    logger.debug('Residue %s and torsion %s', residue, torsion)
    zero = Poly(Z4)
    offset1 = _offset(module, residue.odd_generator, torsion, n) if not residue.g.is_zero else zero
    offset2 = _offset(module, residue.even_generator, torsion, n) if not residue.a.is_zero else zero
    g13, g14 = digits(offset1)
    g23, g24 = digits(offset2)
    gens = CanonicalGenerators.of(n, theta,
                                  g11=residue.g, g12=residue.p, g13=g13, g14=g14,
                                  g22=residue.a, g23=g23, g24=g24,
                                  g33=torsion.g, g34=torsion.p, g44=torsion.a)
    try:
        gens.validate()
    except ValueError as e:
        raise ExtractionError('validate', str(e)) from e
    rebuilt = build(gens, validate=False)
    if rebuilt.module != module:
        raise ExtractionError('verify', '{} does not regenerate the module'.format(gens))
    return gens


def canonicalize(raw: Iterable[Poly], n: int, theta: ThetaParam) -> CanonicalGenerators:
    """The canonical generators of the ideal spanned by arbitrary polynomials ``raw``.

    Raises
    ------
    ExtractionError
        when a step of the extraction fails, including when the extracted generators do not
        rebuild the same module.
    """
    ctx = QuotientContext(n, theta)
    polys = []
    for s in raw:
        if isinstance(s.ring, IntegersMod):
            s = s.lift(theta)
        polys.append(ctx.reduce(s))
    module = howellize(module_rows(polys, theta, n), width=2 * n)
    return _extract(module, n, theta)


def canonical_form(c: CyclicCode) -> CanonicalGenerators:
    """The canonical presentation of an already built code."""
    gens = _extract(c.module, c.n, c.theta)
    if gens != c.gens:
        logger.debug('Presentation %s is not canonical, canonical form is %s', c.gens, gens)
    return gens

