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
"""Deciding reversibility of cyclic codes from their generators.

A code is reversible when it is closed under s_0 ... s_(n-1) -> s_(n-1) ... s_0. Since
s -> s(1/z) is a ring automorphism of R[z]/(z^n - 1), a code is reversible exactly when the
reciprocal of each of its generators lies in the code, and the four conditions checked here
spell that out for the canonical generators:

    (i)   g11, g22, g33 and g44 are self-reciprocal,
    (ii)  g44 divides z^alpha g34* - g34,
    (iii) 2 (z^beta g12* - g12) + k_theta (z^gamma G1* - G1) lies in C,
    (iv)  z^delta G2* - G2 lies in Tor(C),

where G1 = g13 + 2 g14, G2 = g23 + 2 g24, and the exponents are the degree gaps
alpha = deg g33 - deg g34, beta = deg g11 - deg g12, gamma = deg g11 - deg G1 and
delta = deg g22 - deg G2.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from revcyclic.codes.cyclic_code import CyclicCode, certificate, member
from revcyclic.codes.generators import join_k
from revcyclic.codes.z4 import (PresentationError, Z4CyclicCode, divides_in_quotient,
                                effective_degree)
from revcyclic.core.polynomials import Poly, QuotientContext, is_self_reciprocal, reciprocal
from revcyclic.core.ring import Z2, Z4

__all__ = [
    'PreconditionError',
    'HypothesisError',
    'ConditionResult',
    'ReversibilityReport',
    'z4_reversible',
    'check_reversibility',
    'torsion_reversible_consequence',
    'phi_reversible_consequence',
    'reciprocals_in_code',
]

logger = logging.getLogger(__name__)

CONDITIONS = ('i', 'ii', 'iii', 'iv')

EXPONENTS = ('alpha', 'beta', 'gamma', 'delta')


class PreconditionError(ValueError):
    """A Z4 triple (g, p, a) does not present a cyclic code."""


class HypothesisError(ValueError):
    """Strict checking found a degree gap outside alpha, beta, gamma > 0 and delta >= 0."""

    def __init__(self, violations: List[str]):
        super().__init__('Degree gaps outside the classical hypothesis: {}'
                         .format(', '.join(violations)))
        self.violations = violations


@dataclass(frozen=True)
class ConditionResult:
    """One checked condition.

    ``witness`` is the polynomial that was tested, or for condition (i) the names of the
    generators that are not self-reciprocal. ``certificate`` holds coefficients over the code's
    Howell rows when a membership test passed.
    """
    holds: bool
    witness: str = ''
    certificate: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'witness': self.witness,
            'certificate': list(self.certificate) if self.certificate is not None else None
        }

    @classmethod
    def from_dict(cls, obj: Mapping[str, Any]) -> 'ConditionResult':
        cert = obj.get('certificate')
        return cls(bool(obj['holds']), obj.get('witness', ''),
                   tuple(cert) if cert is not None else None)


@dataclass(frozen=True)
class ReversibilityReport:
    verdict: bool
    conditions: Dict[str, ConditionResult]
    exponents: Dict[str, int]
    within_hypothesis: bool = True
    violations: List[str] = field(default_factory=list)

    @property
    def cond_i(self) -> ConditionResult:
        return self.conditions['i']

    @property
    def cond_ii(self) -> ConditionResult:
        return self.conditions['ii']

    @property
    def cond_iii(self) -> ConditionResult:
        return self.conditions['iii']

    @property
    def cond_iv(self) -> ConditionResult:
        return self.conditions['iv']

    def to_dict(self) -> Dict[str, Any]:
        return {
            'verdict': self.verdict,
            'conditions': {key: self.conditions[key].to_dict() for key in CONDITIONS},
            'exponents': {key: self.exponents[key] for key in EXPONENTS},
            'within_hypothesis': self.within_hypothesis,
            'violations': list(self.violations)
        }

    @classmethod
    def from_dict(cls, obj: Mapping[str, Any]) -> 'ReversibilityReport':
        return cls(
            verdict=bool(obj['verdict']),
            conditions={key: ConditionResult.from_dict(obj['conditions'][key])
                        for key in CONDITIONS},
            exponents={key: int(obj['exponents'][key]) for key in EXPONENTS},
            within_hypothesis=bool(obj.get('within_hypothesis', True)),
            violations=list(obj.get('violations', []))
        )


def _gap(anchor: Poly, offset: Poly) -> int:
    if anchor.is_zero:
        return 0
    return effective_degree(anchor) - effective_degree(offset)


def _reflected(ctx: QuotientContext, p: Poly, exponent: int) -> Poly:
    """z^exponent p* - p in the quotient ring."""
    return ctx.reduce(ctx.shift(reciprocal(p), exponent) - p)


def z4_reversible(g: Poly, p: Poly, a: Poly, n: int) -> bool:
    """Whether the Z4 cyclic code <g + 2p, 2a> of length n is reversible.

    The code is reversible exactly when g and a are self-reciprocal and a divides
    z^lambda p* - p, lambda = deg g - deg p; the divisibility is vacuous for p = 0.

    Raises
    ------
    PreconditionError
        when (g, p, a) is not a valid presentation.
    """
    code = Z4CyclicCode(n, g, p, a)
    try:
        code.validate()
    except PresentationError as e:
        raise PreconditionError(str(e)) from e
    if not (is_self_reciprocal(g) and is_self_reciprocal(a)):
        return False
    if p.is_zero:
        return True
    ctx = QuotientContext(n, Z2)
    return divides_in_quotient(a, _reflected(ctx, p, g.degree - p.degree))


def _hypothesis_violations(c: CyclicCode, exponents: Mapping[str, int]) -> List[str]:
    gens = c.gens
    offsets = {
        'alpha': (gens['33'], gens['34']),
        'beta': (gens['11'], gens['12']),
        'gamma': (gens['11'], gens.offset1),
        'delta': (gens['22'], gens.offset2),
    }
    violations = []
    for name in EXPONENTS:
        anchor, offset = offsets[name]
        if anchor.is_zero or offset.is_zero:
            continue
        value = exponents[name]
        if value < 0 or (value == 0 and name != 'delta'):
            violations.append('{}={}'.format(name, value))
    return violations


def check_reversibility(c: CyclicCode, strict: bool = False) -> ReversibilityReport:
    """Checks the four reversibility conditions on the generators of ``c``.

    Parameters
    ----------
    c : CyclicCode
        a built code. The conditions are exact for presentations where ``c.is_consistent``.
    strict : bool
        raise ``HypothesisError`` instead of warning when a degree gap is outside
        alpha, beta, gamma > 0 and delta >= 0.

    Returns
    -------
    ReversibilityReport
        the verdict with each condition's result and the degree gaps.
    """
    gens = c.gens
    n = c.n
    theta = c.theta

    exponents = {
        'alpha': _gap(gens['33'], gens['34']),
        'beta': _gap(gens['11'], gens['12']),
        'gamma': _gap(gens['11'], gens.offset1),
        'delta': _gap(gens['22'], gens.offset2),
    }
    violations = _hypothesis_violations(c, exponents)
    if violations:
        if strict:
            raise HypothesisError(violations)
        logger.warning('%s: degree gaps outside the classical hypothesis: %s', gens,
                       ', '.join(violations))

    conditions = {}
    not_reciprocal = [('g' + key) for key in ('11', '22', '33', '44')
                      if not is_self_reciprocal(gens[key])]
    conditions['i'] = ConditionResult(not not_reciprocal, ', '.join(not_reciprocal))

    binary = QuotientContext(n, Z2)
    if gens['34'].is_zero:
        conditions['ii'] = ConditionResult(True, '0')
    else:
        w = _reflected(binary, gens['34'], exponents['alpha'])
        conditions['ii'] = ConditionResult(divides_in_quotient(gens['44'], w), str(w))

    z4 = QuotientContext(n, Z4)
    w1_residue = _reflected(z4, gens['12'].lift(Z4), exponents['beta']).scale(2)
    w1_kernel = _reflected(z4, gens.offset1, exponents['gamma'])
    w1 = join_k(w1_residue, w1_kernel, theta)
    cert = certificate(c, w1)
    conditions['iii'] = ConditionResult(cert is not None, str(w1), cert)

    w2 = _reflected(z4, gens.offset2, exponents['delta'])
    cert = certificate(c, join_k(Poly(Z4), w2, theta))
    conditions['iv'] = ConditionResult(cert is not None, str(w2), cert)

    verdict = all(conditions[key].holds for key in CONDITIONS)
    if not c.is_consistent:
        logger.warning('%s is not a consistent presentation; the verdict may not decide '
                       'reversibility', gens)
    logger.debug('Reversibility of %s: %s', gens, verdict)
    return ReversibilityReport(verdict, conditions, exponents, not violations, violations)


def torsion_reversible_consequence(c: CyclicCode) -> bool:
    """Whether Tor(C) is a reversible Z4 code; true for every reversible C."""
    torsion = c.derived_torsion
    return z4_reversible(torsion.g, torsion.p, torsion.a, c.n)


def phi_reversible_consequence(c: CyclicCode) -> bool:
    """Whether the residue code phi_theta(C) is a reversible Z4 code; true for every
    reversible C.
    """
    residue = c.derived_phi_image
    return z4_reversible(residue.g, residue.p, residue.a, c.n)


def reciprocals_in_code(c: CyclicCode) -> bool:
    """Reversibility by testing each generator's reciprocal for membership."""
    return all(member(c, reciprocal(g)) for g in c.generators() if not g.is_zero)
