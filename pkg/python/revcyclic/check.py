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
"""Checking a single code given as a JSON description."""
import json
import logging
import sys
from argparse import ArgumentParser
from typing import Any, Dict, List

import numpy as np

from revcyclic.codes.cyclic_code import CyclicCode, build, canonical_form
from revcyclic.codes.generators import CanonicalGenerators
from revcyclic.complement import check_rev_comp
from revcyclic.config import load_config
from revcyclic.core.ring import ComplementPair, ThetaParam, enumerate_complement_pairs
from revcyclic.core.syntax import ParseError, parse_element
from revcyclic.oracle import DEFAULT_BATCH_SIZE, oracle_closures
from revcyclic.reporting import FORMATS, write_rows
from revcyclic.reversibility import check_reversibility

logger = logging.getLogger(__name__)

COLUMNS = ('theta', 'n', 'pair_u', 'pair_t', 'reversible', 'rev_comp', 'oracle_reversible',
           'oracle_rev_comp')


class CheckConf:
    def __init__(self):
        self.code_file = '-'
        self.pair = None
        self.all_pairs = False
        self.oracle = False
        self.cap = None
        self.strict = False
        self.format = 'json'
        self.config_file = None


def parse_pair(text: str, theta: ThetaParam) -> ComplementPair:
    """Reads ``U,T`` as a complement pair of R_theta."""
    try:
        u, t = text.split(',')
    except ValueError:
        raise ParseError(text, 0, 'A pair must be written U,T')
    return ComplementPair(theta, parse_element(u, theta), parse_element(t, theta))


def read_code(path: str) -> CanonicalGenerators:
    if path == '-':
        obj = json.load(sys.stdin)
    else:
        with open(path, 'r') as f:
            obj = json.load(f)
    return CanonicalGenerators.from_json(obj)


def check_code(code: CyclicCode, pairs: List[ComplementPair], *, oracle: bool = False,
               cap: int, samples: int, batch_size: int = DEFAULT_BATCH_SIZE,
               strict: bool = False) -> Dict[str, Any]:
    """Runs the reversibility and reverse-complement checks, and optionally the oracle."""
    report = check_reversibility(code, strict=strict)
    result = {
        'code': code.gens.to_json(),
        'size': code.size,
        'reversibility': report.to_dict(),
        'rev_comp': [check_rev_comp(code, cp, report).to_dict() for cp in pairs]
    }
    if oracle:
        reversible, rev_comps = oracle_closures(code, pairs, cap, samples,
                                                np.random.default_rng(0), batch_size)
        result['oracle'] = {
            'reversible': reversible.verdict,
            'exhaustive': reversible.exhaustive,
            'rev_comp': [rc.verdict for rc in rev_comps]
        }
    return result


def _rows(result: Dict[str, Any], theta: ThetaParam, n: int) -> List[Dict[str, Any]]:
    oracle = result.get('oracle', {})
    row = {'theta': str(theta), 'n': n, 'pair_u': '', 'pair_t': '',
           'reversible': result['reversibility']['verdict'], 'rev_comp': None,
           'oracle_reversible': oracle.get('reversible'), 'oracle_rev_comp': None}
    rows = [row]
    for i, rc in enumerate(result['rev_comp']):
        u, t = rc['pair']['u'], rc['pair']['t']
        rows.append(dict(row, pair_u=str(theta.from_json(u)), pair_t=str(theta.from_json(t)),
                         rev_comp=rc['verdict'],
                         oracle_rev_comp=oracle['rev_comp'][i] if oracle else None))
    return rows


def check_parser():
    parser = ArgumentParser(add_help=False)
    defaults = CheckConf()
    parser.add_argument('code_file', metavar='CODE_FILE',
                        help="JSON description of the code, or - to read standard input.")
    parser.add_argument('--pair', action='append', default=defaults.pair, metavar='U,T',
                        help="A complement pair to check, e.g. '1,2+v'. May be repeated.")
    parser.add_argument('--all-pairs', action='store_true',
                        help="Check every valid complement pair of the ring.")
    parser.add_argument('--oracle', action='store_true',
                        help="Cross-check the verdicts by enumerating codewords.")
    parser.add_argument('--cap', type=int, default=defaults.cap,
                        help="Largest code the oracle enumerates; bigger codes are sampled.")
    parser.add_argument('--strict', action='store_true',
                        help="Fail when a degree gap is outside the classical hypothesis.")
    parser.add_argument('--format', choices=FORMATS, default=defaults.format,
                        help="The output format.")
    return parser


def run_check(conf) -> int:
    _conf = CheckConf()
    vars(_conf).update(vars(conf))
    conf = _conf
    config = load_config(conf.config_file)
    gens = read_code(conf.code_file)
    code = build(gens)
    if not code.is_consistent:
        canonical = canonical_form(code)
        logger.warning('%s is not canonical; checking its canonical form %s', gens, canonical)
        code = build(canonical)
    theta = code.theta
    if conf.all_pairs:
        pairs = enumerate_complement_pairs(theta)
    else:
        pairs = [parse_pair(text, theta) for text in conf.pair or []]
    cap = conf.cap if conf.cap is not None else config['oracle.cap']
    result = check_code(code, pairs, oracle=conf.oracle, cap=cap, samples=config['oracle.samples'],
                        batch_size=config['oracle.batchSize'], strict=conf.strict)
    if conf.format == 'json':
        json.dump(result, sys.stdout, indent=2)
        sys.stdout.write('\n')
    else:
        write_rows(_rows(result, theta, code.n), COLUMNS, 'csv', sys.stdout)
    verdicts = [result['reversibility']['verdict']] + [rc['verdict'] for rc in result['rev_comp']]
    return 0 if all(verdicts) else 1
