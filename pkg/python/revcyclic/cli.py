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
import logging
import sys


def main(args=None):
    from argparse import ArgumentParser
    from revcyclic.check import check_parser, run_check
    from revcyclic.codes.z4 import ExtractionError
    from revcyclic.examples.table import examples_parser, run_examples
    from revcyclic.sweep import run_sweep, sweep_parser
    parser = ArgumentParser(prog='revcyclic')
    parser.set_defaults(f=lambda _: parser.print_help())
    parser.add_argument('--log-level', default='INFO')
    parser.add_argument('--config-file', default=None,
                        help="A configuration file overriding the packaged defaults.")
    subparsers = parser.add_subparsers()

    check_subparser = subparsers.add_parser('check', parents=[check_parser()],
                                            help="Decides reversibility and reverse-complement "
                                                 "closure of a code.")
    check_subparser.set_defaults(f=run_check)

    examples_subparser = subparsers.add_parser('examples', parents=[examples_parser()],
                                               help="Prints the classification table of the "
                                                    "bundled examples.")
    examples_subparser.set_defaults(f=run_examples)

    sweep_subparser = subparsers.add_parser('sweep', parents=[sweep_parser()],
                                            help="Compares the checkers with the brute-force "
                                                 "oracle over many codes.")
    sweep_subparser.set_defaults(f=run_sweep)

    conf = parser.parse_args(args)
    logging.basicConfig(level=conf.log_level)
    f = conf.f
    try:
        return f(conf) or 0
    except (ValueError, OSError, ExtractionError) as e:
        print('revcyclic: error: {}'.format(e), file=sys.stderr)
        return 2
