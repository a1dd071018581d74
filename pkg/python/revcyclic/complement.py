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
"""(u, t) reverse complements.

The reverse complement of s_0 ... s_(n-1) is c(s_(n-1)) ... c(s_0) with c(x) = u^-1 (t - x).
Because u t = t it equals t (1 + z + ... + z^(n-1)) - u s^r, so a cyclic code is closed under
it exactly when the code is reversible and contains the constant word t ... t.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional

from revcyclic.codes.cyclic_code import CyclicCode, member
from revcyclic.core.polynomials import Poly, QuotientContext, RingMismatchError
from revcyclic.core.ring import ComplementPair, ThetaParam, complement, enumerate_complement_pairs
from revcyclic.core.syntax import parse_theta
from revcyclic.reversibility import ReversibilityReport, check_reversibility

__all__ = [
    'RevCompReport',
    'reverse_complement',
    'zero_reverse_complement',
    'check_rev_comp',
    'check_all_pairs',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RevCompReport:
    """Whether a code is (u, t) reversible-complement, with both halves of the decision."""
    pair: ComplementPair
    reversible: bool
    zero_word_in_code: bool
    verdict: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'theta': str(self.pair.theta),
            'pair': self.pair.to_json(),
            'reversible': self.reversible,
            'zero_word_in_code': self.zero_word_in_code,
            'verdict': self.verdict
        }

    @classmethod
    def from_dict(cls, obj: Mapping[str, Any]) -> 'RevCompReport':
        theta = parse_theta(obj['theta'])
        pair = ComplementPair(theta, theta.from_json(obj['pair']['u']),
                              theta.from_json(obj['pair']['t']))
        return cls(pair, bool(obj['reversible']), bool(obj['zero_word_in_code']),
                   bool(obj['verdict']))


def reverse_complement(s: Poly, ctx: QuotientContext, cp: ComplementPair) -> Poly:
    """Coefficient i of the result is the complement of coefficient n - 1 - i of s."""
    if s.ring != cp.theta or ctx.ring != cp.theta:
        raise RingMismatchError('Reverse complement over {!r} of a polynomial over {!r}'
                                .format(cp.theta, s.ring))
    ctx.check_length(s)
    return Poly(cp.theta, [complement(x, cp) for x in reversed(s.to_vector(ctx.n))])


def zero_reverse_complement(n: int, theta: ThetaParam, cp: ComplementPair) -> Poly:
    """The reverse complement of the zero word: u^-1 t in every position."""
    return QuotientContext(n, theta).ones(cp.zero_complement)


def check_rev_comp(c: CyclicCode, cp: ComplementPair,
                   report: Optional[ReversibilityReport] = None) -> RevCompReport:
    """Decides (u, t) reversible-complement closure of ``c``.

    ``report`` may carry an already computed reversibility report to share across pairs.
    """
    if cp.theta != c.theta:
        raise RingMismatchError('Pair over {!r} used with a code over {!r}'
                                .format(cp.theta, c.theta))
    if report is None:
        report = check_reversibility(c)
    zero_word = member(c, zero_reverse_complement(c.n, c.theta, cp))
    return RevCompReport(cp, report.verdict, zero_word, report.verdict and zero_word)


def check_all_pairs(c: CyclicCode,
                    report: Optional[ReversibilityReport] = None) -> List[RevCompReport]:
    """One report per valid complement pair of the code's ring, in lexicographic pair order."""
    if report is None:
        report = check_reversibility(c)
    results = [check_rev_comp(c, cp, report) for cp in enumerate_complement_pairs(c.theta)]
    logger.debug('%s is reverse-complement closed for %d of %d pairs', c.gens,
                 sum(r.verdict for r in results), len(results))
    return results
