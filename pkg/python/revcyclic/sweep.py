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
"""Oracle-equivalence campaigns over generated codes."""
import logging
import sys
from argparse import ArgumentParser
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, Iterator, List, Optional

import numpy as np
from tqdm import tqdm

from revcyclic.codes.cyclic_code import build
from revcyclic.codes.generators import CanonicalGenerators
from revcyclic.complement import check_rev_comp
from revcyclic.config import load_config
from revcyclic.core.ring import ThetaParam, all_thetas, enumerate_complement_pairs
from revcyclic.core.syntax import parse_theta
from revcyclic.oracle import (DEFAULT_BATCH_SIZE, SearchLimits, generate_all_codes,
                              oracle_closures, sample_codes)
from revcyclic.reporting import FORMATS, write_rows
from revcyclic.reversibility import (check_reversibility, phi_reversible_consequence,
                                     torsion_reversible_consequence)

logger = logging.getLogger(__name__)

COLUMNS = ('theta', 'n', 'code', 'size', 'reversible', 'oracle_reversible', 'exhaustive',
           'pairs_checked', 'rev_comp_agree', 'agree')

# largest length with exhaustive generation by default
EXHAUSTIVE_LIMIT = 4


class SweepConf:
    def __init__(self):
        self.n = None
        self.theta = None
        self.sample = None
        self.seed = None
        self.max_offset_degree = None
        self.workers = None
        self.cap = None
        self.format = 'csv'
        self.config_file = None


def evaluate(gens: CanonicalGenerators, cap: int, samples: int, seed: int,
             batch_size: int = DEFAULT_BATCH_SIZE) -> Dict[str, Any]:
    """Runs the checkers and the oracle on one code and compares them."""
    code = build(gens, validate=False)
    rng = np.random.default_rng(seed)
    report = check_reversibility(code)
    pairs = enumerate_complement_pairs(code.theta)
    oracle, oracle_pairs = oracle_closures(code, pairs, cap, samples, rng, batch_size)
    agree = sum(check_rev_comp(code, cp, report).verdict == orc.verdict
                for cp, orc in zip(pairs, oracle_pairs))
    if report.verdict:
        if not (torsion_reversible_consequence(code) and phi_reversible_consequence(code)):
            logger.error('%s is reversible but its residue or torsion code is not', gens)
            agree = -1
    row = {
        'theta': str(code.theta),
        'n': code.n,
        'code': str(gens),
        'size': code.size,
        'reversible': report.verdict,
        'oracle_reversible': oracle.verdict,
        'exhaustive': oracle.exhaustive,
        'pairs_checked': len(pairs),
        'rev_comp_agree': agree,
        'agree': report.verdict == oracle.verdict and agree == len(pairs)
    }
    logger.debug('%s', row)
    return row


def _evaluate_star(args):
    return evaluate(*args)


def codes_for(n: int, theta: ThetaParam, sample: Optional[int], seed: int,
              limits: SearchLimits) -> Iterator[CanonicalGenerators]:
    if sample is None:
        return generate_all_codes(n, theta, limits)
    return sample_codes(n, theta, sample, np.random.default_rng(seed))


def sweep(n: int, thetas: Iterable[ThetaParam], *, sample: Optional[int] = None, seed: int = 0,
          limits: Optional[SearchLimits] = None, cap: int = 65536, samples: int = 256,
          workers: int = 1, batch_size: int = DEFAULT_BATCH_SIZE,
          progress: bool = False) -> List[Dict[str, Any]]:
    """Evaluates every generated (or sampled) code for each theta, in a stable order."""
    limits = limits or SearchLimits()
    rows = []
    for theta in thetas:
        jobs = [(gens, cap, samples, seed + i, batch_size)
                for i, gens in enumerate(codes_for(n, theta, sample, seed, limits))]
        bar = tqdm(total=len(jobs), unit='code', desc='θ={}'.format(theta), disable=not progress)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                results = []
                for row in executor.map(_evaluate_star, jobs, chunksize=16):
                    results.append(row)
                    bar.update(1)
        else:
            results = []
            for job in jobs:
                results.append(evaluate(*job))
                bar.update(1)
        bar.close()
        agreeing = sum(row['agree'] for row in results)
        reversible = sum(row['reversible'] for row in results)
        logger.info('n=%d θ=%s: %d codes, %d reversible, %d of %d agree with the oracle', n,
                    theta, len(results), reversible, agreeing, len(results))
        rows.extend(results)
    return rows


def sweep_parser():
    parser = ArgumentParser(add_help=False)
    parser.add_argument('--n', type=int, required=True, help="The code length.")
    parser.add_argument('--theta', action='append', default=None,
                        help="A non-chain value of v^2, e.g. '2*v'. May be repeated; "
                             "defaults to all eight.")
    parser.add_argument('--sample', type=int, default=None,
                        help="Check this many random codes per theta instead of every code.")
    parser.add_argument('--seed', type=int, default=None, help="The sampling seed.")
    parser.add_argument('--max-offset-degree', type=int, default=None,
                        help="Largest degree of the non-divisor generators when generating "
                             "every code; -1 for no limit.")
    parser.add_argument('--workers', type=int, default=None,
                        help="The number of worker processes.")
    parser.add_argument('--cap', type=int, default=None,
                        help="Largest code enumerated by the oracle; bigger codes are sampled.")
    parser.add_argument('--format', choices=FORMATS, default='csv', help="The output format.")
    return parser


def run_sweep(conf) -> int:
    _conf = SweepConf()
    vars(_conf).update(vars(conf))
    conf = _conf
    config = load_config(conf.config_file)

    def setting(value, key):
        return value if value is not None else config[key]

    thetas = [parse_theta(text) for text in conf.theta] if conf.theta else list(all_thetas())
    sample = conf.sample
    if sample is None and conf.n > EXHAUSTIVE_LIMIT:
        sample = config['sweep.sample']
        logger.info('Sampling %d codes per theta for n=%d', sample, conf.n)
    max_degree = setting(conf.max_offset_degree, 'sweep.maxOffsetDegree')
    limits = SearchLimits(None if max_degree < 0 else max_degree)
    rows = sweep(conf.n, thetas, sample=sample, seed=setting(conf.seed, 'sweep.seed'),
                 limits=limits, cap=setting(conf.cap, 'sweep.oracleCap'),
                 samples=config['oracle.samples'], workers=setting(conf.workers, 'sweep.workers'),
                 batch_size=config['oracle.batchSize'], progress=sys.stderr.isatty())
    write_rows(rows, COLUMNS, conf.format, sys.stdout)
    disagreements = [row for row in rows if not row['agree']]
    for row in disagreements:
        logger.error('Disagreement on %s', row['code'])
    return 1 if disagreements else 0
