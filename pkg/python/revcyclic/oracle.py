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
"""Brute-force ground truth and code-space generation.

The closure checks enumerate every codeword of the Howell module in vectorised batches and test
the reversed (or reverse-complemented) words for membership. Codes larger than the cap can
instead be checked on uniformly sampled codewords: the words whose image stays in the code form
a subgroup or a coset of one, so a code that is not closed fails each sample with probability at
least 1/2.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from revcyclic.codes.cyclic_code import CyclicCode, build, canonicalize
from revcyclic.codes.generators import CanonicalGenerators, join_k
from revcyclic.codes.z4 import (PresentationError, Z4CyclicCode, bound_degree,
                                divides_in_quotient, xn_plus_1)
from revcyclic.core.howell import CapExceededError
from revcyclic.core.polynomials import (Poly, QuotientContext, binary_divisors,
                                        binary_polys_below, digits, divmod_binary, from_digits)
from revcyclic.core.ring import ComplementPair, ThetaParam, Z2, Z4

__all__ = [
    'DEFAULT_CAP',
    'OracleResult',
    'SearchLimits',
    'brute_reversible',
    'brute_rev_comp',
    'sampled_reversible',
    'sampled_rev_comp',
    'oracle_reversible',
    'oracle_rev_comp',
    'oracle_closures',
    'z4_cyclic_codes',
    'generate_all_codes',
    'sample_codes',
]

logger = logging.getLogger(__name__)

DEFAULT_CAP = 1 << 24

DEFAULT_SAMPLES = 256

DEFAULT_BATCH_SIZE = 65536


@dataclass(frozen=True)
class OracleResult:
    """A brute-force verdict.

    ``exhaustive`` is False when only ``checked`` random codewords were tested, in which case a
    True verdict is not a proof.
    """
    verdict: bool
    exhaustive: bool
    checked: int


def _reversed(words: np.ndarray, n: int) -> np.ndarray:
    return np.hstack([words[:, n - 1::-1], words[:, :n - 1:-1]])


def _reverse_complemented(words: np.ndarray, n: int, cp: ComplementPair) -> np.ndarray:
    theta = cp.theta
    t0, t1 = theta.to_k(cp.t)
    matrix = theta.mul_matrix(cp.u)
    flipped = _reversed(words, n)
    y0 = (t0 - flipped[:, :n]) % 4
    y1 = (t1 - flipped[:, n:]) % 4
    x0 = matrix[0, 0] * y0
    x1 = matrix[1, 0] * y0 + matrix[1, 1] * y1
    return np.hstack([x0, x1]) % 4


def _closed(c: CyclicCode, image, batches) -> int:
    """Number of words checked before the first failure, or -1 when all stayed in the code."""
    checked = 0
    for words in batches:
        if not c.module.contains_batch(image(words)).all():
            return checked
        checked += len(words)
    return -1


def brute_reversible(c: CyclicCode, cap: int = DEFAULT_CAP,
                     batch_size: int = DEFAULT_BATCH_SIZE) -> bool:
    """Whether every codeword's reversal is a codeword, by full enumeration.

    Raises
    ------
    CapExceededError
        when the code has more than ``cap`` words.
    """
    batches = c.module.iter_batches(batch_size=batch_size, cap=cap)
    return _closed(c, lambda words: _reversed(words, c.n), batches) < 0


def brute_rev_comp(c: CyclicCode, cp: ComplementPair, cap: int = DEFAULT_CAP,
                   batch_size: int = DEFAULT_BATCH_SIZE) -> bool:
    """Whether every codeword's (u, t) reverse complement is a codeword, by full enumeration."""
    batches = c.module.iter_batches(batch_size=batch_size, cap=cap)
    return _closed(c, lambda words: _reverse_complemented(words, c.n, cp), batches) < 0


def sampled_reversible(c: CyclicCode, samples: int, rng: np.random.Generator) -> bool:
    return _closed(c, lambda words: _reversed(words, c.n), [c.module.sample(samples, rng)]) < 0


def sampled_rev_comp(c: CyclicCode, cp: ComplementPair, samples: int,
                     rng: np.random.Generator) -> bool:
    words = c.module.sample(samples, rng)
    return _closed(c, lambda w: _reverse_complemented(w, c.n, cp), [words]) < 0


def oracle_reversible(c: CyclicCode, cap: int = DEFAULT_CAP, samples: int = DEFAULT_SAMPLES,
                      rng: Optional[np.random.Generator] = None,
                      batch_size: int = DEFAULT_BATCH_SIZE) -> OracleResult:
    """Enumerates when the code fits under ``cap`` and samples otherwise."""
    try:
        return OracleResult(brute_reversible(c, cap, batch_size), True, c.size)
    except CapExceededError:
        logger.warning('%s has %d words, over the cap of %d; sampling %d words', c.gens, c.size,
                       cap, samples)
    rng = rng if rng is not None else np.random.default_rng()
    return OracleResult(sampled_reversible(c, samples, rng), False, samples)


def oracle_rev_comp(c: CyclicCode, cp: ComplementPair, cap: int = DEFAULT_CAP,
                    samples: int = DEFAULT_SAMPLES, rng: Optional[np.random.Generator] = None,
                    batch_size: int = DEFAULT_BATCH_SIZE) -> OracleResult:
    try:
        return OracleResult(brute_rev_comp(c, cp, cap, batch_size), True, c.size)
    except CapExceededError:
        logger.warning('%s has %d words, over the cap of %d; sampling %d words', c.gens, c.size,
                       cap, samples)
    rng = rng if rng is not None else np.random.default_rng()
    return OracleResult(sampled_rev_comp(c, cp, samples, rng), False, samples)


def oracle_closures(c: CyclicCode, pairs: Sequence[ComplementPair], cap: int = DEFAULT_CAP,
                    samples: int = DEFAULT_SAMPLES, rng: Optional[np.random.Generator] = None,
                    batch_size: int = DEFAULT_BATCH_SIZE
                    ) -> Tuple[OracleResult, List[OracleResult]]:
    """Reversal and every pair's reverse complement, tested in a single pass over the codewords.

    Returns the reversal result and one result per pair, in order. Codes over ``cap`` are tested
    on one shared sample.
    """
    n = c.n
    if c.size <= cap:
        batches = c.module.iter_batches(batch_size=batch_size)
        exhaustive, checked = True, c.size
    else:
        logger.warning('%s has %d words, over the cap of %d; sampling %d words', c.gens, c.size,
                       cap, samples)
        rng = rng if rng is not None else np.random.default_rng()
        batches = [c.module.sample(samples, rng)]
        exhaustive, checked = False, samples
    images = [lambda words: _reversed(words, n)]
    images += [lambda words, cp=cp: _reverse_complemented(words, n, cp) for cp in pairs]
    closed = [True] * len(images)
    for words in batches:
        for i, image in enumerate(images):
            if closed[i] and not c.module.contains_batch(image(words)).all():
                closed[i] = False
        if not any(closed):
            break
    results = [OracleResult(verdict, exhaustive, checked) for verdict in closed]
    return results[0], results[1:]


@dataclass(frozen=True)
class SearchLimits:
    """Bounds on code generation.

    Attributes
    ----------
    max_offset_degree : int, optional
        the largest degree allowed for g12, g13, g14, g23, g24 and g34; None for no limit.

    """
    max_offset_degree: Optional[int] = None

    def below(self, bound: int) -> int:
        if self.max_offset_degree is None:
            return bound
        return min(bound, self.max_offset_degree + 1)


def _anchors(n: int) -> List[Poly]:
    return binary_divisors(n) + [Poly(Z2)]


def z4_cyclic_codes(n: int, max_offset_degree: Optional[int] = None) -> Iterator[Z4CyclicCode]:
    """Every valid presentation <g + 2p, 2a> of a Z4 cyclic code of length n."""
    limits = SearchLimits(max_offset_degree)
    anchors = _anchors(n)
    for g in anchors:
        for a in anchors:
            if not divides_in_quotient(a, g):
                continue
            corrections = [Poly(Z2)] if g.is_zero else binary_polys_below(
                limits.below(bound_degree(a, n)))
            for p in corrections:
                code = Z4CyclicCode(n, g, p, a)
                try:
                    code.validate()
                except PresentationError:
                    continue
                yield code


def _residues(torsion: Z4CyclicCode, limits: SearchLimits) -> Iterator[Poly]:
    """Representatives r0 + 2 r1 of Z4[z]/(z^n - 1) modulo the torsion code."""
    n = torsion.n
    for r1 in binary_polys_below(limits.below(bound_degree(torsion.a, n))):
        for r0 in binary_polys_below(limits.below(bound_degree(torsion.g, n))):
            yield from_digits(r0, r1)


def _within(p: Poly, limits: SearchLimits) -> bool:
    if p.is_zero or limits.max_offset_degree is None:
        return True
    return all(q.is_zero or q.degree <= limits.max_offset_degree for q in digits(p))


def _offsets(anchor: Poly, torsion: Z4CyclicCode, c: int, limits: SearchLimits,
             extra=()) -> List[Poly]:
    """Offsets x with k_theta (anchor + k_theta x) = k_theta (anchor + c x) in the code."""
    if anchor.is_zero:
        return [Poly(Z4)]
    ctx = torsion.ctx
    if c % 2:
        x = torsion.reduce(-ctx.reduce(anchor.scale(c)))
        candidates = [x] if _within(x, limits) else []
    else:
        candidates = [x for x in _residues(torsion, limits)
                      if torsion.contains(ctx.reduce(anchor + x.scale(c)))]
    return [x for x in candidates if all(torsion.contains(ctx.reduce(f(x))) for f in extra)]


def generate_all_codes(n: int, theta: ThetaParam,
                       limits: Optional[SearchLimits] = None) -> Iterator[CanonicalGenerators]:
    """Every canonical presentation of a cyclic code over R_theta of length n.

    Residue and torsion codes range over all Z4 presentations; offsets over representatives
    modulo the torsion code. Candidates pass a handful of necessary membership conditions and
    are kept when the module they generate has exactly the stated torsion code, which makes
    them the canonical form of that module. Distinct presentations give distinct codes.
    """
    limits = limits or SearchLimits()
    pairs = list(z4_cyclic_codes(n, limits.max_offset_degree))
    ctx = QuotientContext(n, Z4)
    modulus = xn_plus_1(n)
    count = 0
    for residue in pairs:
        anchor1, anchor2 = residue.odd_generator, residue.even_generator
        if not residue.g.is_zero:
            h = divmod_binary(modulus, residue.g)[0].lift(Z4)
            ratio = divmod_binary(residue.g, residue.a)[0].lift(Z4)
            m = divmod_binary(residue.torsion_excess(), residue.a)[0].lift(Z4)
        for torsion in pairs:
            xs = _offsets(anchor1, torsion, theta.c, limits)
            second = []
            if not residue.a.is_zero:
                cofactor = divmod_binary(modulus, residue.a)[0].lift(Z4)
                second = [lambda y: y.scale(2), lambda y, f=cofactor: ctx.mul(f, y)]
            ys = _offsets(anchor2, torsion, theta.c, limits, second)
            for x in xs:
                for y in ys:
                    if not residue.g.is_zero:
                        if not torsion.contains(ctx.reduce(x.scale(2) - ctx.mul(ratio, y))):
                            continue
                        if not torsion.contains(ctx.reduce(ctx.mul(h, x) - ctx.mul(m, y))):
                            continue
                    g13, g14 = digits(x)
                    g23, g24 = digits(y)
                    gens = CanonicalGenerators.of(n, theta,
                                                  g11=residue.g, g12=residue.p, g13=g13, g14=g14,
                                                  g22=residue.a, g23=g23, g24=g24,
                                                  g33=torsion.g, g34=torsion.p, g44=torsion.a)
                    if build(gens, validate=False).derived_torsion == torsion:
                        count += 1
                        yield gens
    logger.debug('Generated %d codes of length %d over R_%s', count, n, theta)


def _random_binary(bound: int, rng: np.random.Generator) -> Poly:
    return Poly(Z2, rng.integers(0, 2, size=bound).tolist())


def sample_codes(n: int, theta: ThetaParam, count: int,
                 rng: np.random.Generator) -> Iterator[CanonicalGenerators]:
    """Random canonical codes: the codes generated by random residue and torsion presentations
    with random offsets. The same code may be drawn more than once.
    """
    pairs = list(z4_cyclic_codes(n))
    zero = Poly(Z4)
    for _ in range(count):
        residue = pairs[rng.integers(len(pairs))]
        torsion = pairs[rng.integers(len(pairs))]
        offsets = []
        for anchor in (residue.odd_generator, residue.even_generator):
            if anchor.is_zero:
                offsets.append(zero)
            else:
                offsets.append(from_digits(_random_binary(bound_degree(torsion.g, n), rng),
                                           _random_binary(bound_degree(torsion.a, n), rng)))
        raw = [
            join_k(residue.odd_generator, offsets[0], theta),
            join_k(residue.even_generator, offsets[1], theta),
            join_k(zero, torsion.odd_generator, theta),
            join_k(zero, torsion.even_generator, theta),
        ]
        yield canonicalize(raw, n, theta)
