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
"""Runs the bundled examples through the checkers and the oracle and prints the classification
table next to the claimed verdicts.
"""
import logging
import sys
from argparse import ArgumentParser
from typing import Any, Dict, Iterator, Optional

from revcyclic.complement import check_rev_comp
from revcyclic.config import load_config
from revcyclic.examples.corpus import examples_by_id, load_table
from revcyclic.oracle import brute_rev_comp, brute_reversible
from revcyclic.reporting import FORMATS, write_rows
from revcyclic.reversibility import check_reversibility

logger = logging.getLogger(__name__)

COLUMNS = ('example_id', 'row', 'theta', 'n', 'pair_u', 'pair_t', 'reversible', 'rev_comp',
           'claimed_reversible', 'claimed_rev_comp', 'oracle_reversible', 'oracle_rev_comp',
           'oracle_agrees')


def table_rows(cap: Optional[int] = None, batch_size: Optional[int] = None
               ) -> Iterator[Dict[str, Any]]:
    """One output row per table row and complement pair, in table order."""
    examples = examples_by_id()
    if cap is None or batch_size is None:
        config = load_config()
        cap = cap if cap is not None else config['oracle.cap']
        batch_size = batch_size if batch_size is not None else config['oracle.batchSize']
    codes = {}
    for table_row in load_table():
        example = examples[table_row.example_id]
        if example.example_id not in codes:
            code = example.code()
            report = check_reversibility(code)
            codes[example.example_id] = code, report, brute_reversible(code, cap, batch_size)
        code, report, oracle_reversible = codes[example.example_id]
        for cp in table_row.pairs(code.theta):
            rev_comp = check_rev_comp(code, cp, report).verdict
            oracle_rev_comp = brute_rev_comp(code, cp, cap, batch_size)
            yield {
                'example_id': example.example_id,
                'row': table_row.row,
                'theta': str(code.theta),
                'n': code.n,
                'pair_u': str(cp.u),
                'pair_t': str(cp.t),
                'reversible': report.verdict,
                'rev_comp': rev_comp,
                'claimed_reversible': table_row.claimed_reversible,
                'claimed_rev_comp': table_row.claimed_rev_comp,
                'oracle_reversible': oracle_reversible,
                'oracle_rev_comp': oracle_rev_comp,
                'oracle_agrees': (report.verdict == oracle_reversible
                                  and rev_comp == oracle_rev_comp)
            }


def examples_parser():
    parser = ArgumentParser(add_help=False)
    parser.add_argument('--format', choices=FORMATS, default='csv', help="The output format.")
    parser.add_argument('--cap', type=int, default=None,
                        help="Largest code enumerated by the oracle.")
    return parser


def run_examples(conf) -> int:
    config = load_config(conf.config_file)
    cap = conf.cap if conf.cap is not None else config['oracle.cap']
    rows = list(table_rows(cap, config['oracle.batchSize']))
    write_rows(rows, COLUMNS, conf.format, sys.stdout)
    differing = [(r['row'], r['pair_u'], r['pair_t']) for r in rows
                 if r['rev_comp'] != r['claimed_rev_comp']
                 or r['reversible'] != r['claimed_reversible']]
    if differing:
        logger.info('%d rows differ from the claimed verdicts', len(differing))
    if not all(r['oracle_agrees'] for r in rows):
        logger.error('The oracle disagrees with the checkers')
        return 1
    return 0
