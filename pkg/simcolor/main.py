#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""simcolor main class."""

import argparse
import sys
from logging import DEBUG
from warnings import simplefilter

from simcolor import __version__
from simcolor.bench import SUITES
from simcolor.colorers import ALGORITHMS
from simcolor.config import Config
from simcolor.globals import json_backend
from simcolor.logger import LOG_FILENAME, logger


def _int_list(value):
    try:
        return [int(x) for x in value.split(',') if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"comma-separated integers expected, got {value!r}") from None


class SimcolorMain:
    """Main class to manage the simcolor command line."""

    # Examples of use
    example_of_use = """
Examples of use:
  Generate the 6-member star family for ell=8, delta=4:
    $ simcolor generate star --l 8 --delta 4 -o star.json

  Generate a seeded random family of 3 graphs:
    $ simcolor generate random --n 20 --l 3 --delta 5 --overlap 0.3 --seed 7 -o fam.json

  Color it, then check the result:
    $ simcolor color --algo sqrt fam.json -o col.json
    $ simcolor verify fam.json col.json

  Exact simultaneous chromatic number of a small family:
    $ simcolor exact star.json

  Benchmark 10 seeded random pairs into a CSV file:
    $ simcolor bench --suite pairs --instances 10 --seed 1 -o bench.csv

  Probe small random pairs for chi > delta + 1:
    $ simcolor probe --trials 100 --seed 0 --artifact-dir findings/
"""

    def __init__(self, argv=None):
        """Manage the command line arguments."""
        # Read the command line arguments
        self.args = self.parse_args(argv)

    def version_msg(self):
        """Return the version message."""
        version = f'simcolor version:\t{__version__}\n'
        version += f'JSON backend:\t\t{json_backend()}\n'
        version += f'Log file:\t\t{LOG_FILENAME}\n'
        return version

    def init_args(self):
        """Init all the command line arguments."""
        parser = argparse.ArgumentParser(
            prog='simcolor',
            formatter_class=argparse.RawDescriptionHelpFormatter,
            description='Simultaneous edge coloring of graph families.',
            epilog=self.example_of_use,
        )
        parser.add_argument('-V', '--version', action='version', version=self.version_msg())
        parser.add_argument('-d', '--debug', action='store_true', default=False, dest='debug', help='enable debug mode')
        parser.add_argument('-C', '--config', dest='conf_file', help='path to the configuration file')
        subparsers = parser.add_subparsers(dest='command', metavar='command')
        subparsers.required = True

        # generate
        generate = subparsers.add_parser('generate', help='write a family of graphs as JSON')
        generate.add_argument('kind', choices=['star', 'star3', 'random'], help='family construction')
        generate.add_argument('--l', '--ell', dest='ell', type=int, help='number of member graphs')
        generate.add_argument('--delta', dest='delta', type=int, required=True, help='maximum degree')
        generate.add_argument('--n', dest='n', type=int, help='number of vertices (random)')
        generate.add_argument('--overlap', dest='overlap', type=float, default=0.0, help='edge sharing probability')
        generate.add_argument('--seed', dest='seed', type=int, help='random seed (mandatory for random)')
        generate.add_argument(
            '--pad', action='store_true', default=False, dest='pad', help='pad the star family with empty members'
        )
        generate.add_argument('-o', '--output', dest='output', help='output file (default: standard output)')

        # color
        color = subparsers.add_parser('color', help='color a family and write the coloring as JSON')
        color.add_argument('family', help='family JSON file (- for standard input)')
        color.add_argument('--algo', dest='algo', choices=ALGORITHMS, default='sqrt', help='coloring algorithm')
        color.add_argument(
            '--sweep-k',
            action='store_true',
            default=False,
            dest='sweep_k',
            help='sqrt: also try the integer thresholds and keep the smallest palette',
        )
        color.add_argument('-o', '--output', dest='output', help='output file (default: standard output)')

        # exact
        exact = subparsers.add_parser('exact', help='exact simultaneous chromatic number of a small family')
        exact.add_argument('family', help='family JSON file (- for standard input)')
        exact.add_argument('--max-edges', dest='max_edges', type=int, help='cap on the number of union edges')
        exact.add_argument('--timeout', dest='timeout', type=float, help='time budget in seconds')
        exact.add_argument(
            '--allow-timeout',
            action='store_true',
            default=False,
            dest='allow_timeout',
            help='search above the cap, reporting the best bounds on timeout',
        )
        exact.add_argument(
            '--brute-force',
            action='store_true',
            default=False,
            dest='brute_force',
            help='cross-check with exhaustive enumeration (tiny families only)',
        )
        exact.add_argument('-o', '--output', dest='output', help='write the optimal coloring to this file')

        # verify
        verify = subparsers.add_parser('verify', help='check a coloring against its family')
        verify.add_argument('family', help='family JSON file')
        verify.add_argument('coloring', help='coloring JSON file')

        # bench
        bench = subparsers.add_parser('bench', help='run a benchmark suite into a CSV file')
        bench.add_argument('--suite', dest='suite', choices=SUITES, default='pairs', help='benchmark suite')
        bench.add_argument('--instances', dest='instances', type=int, help='number of random instances')
        bench.add_argument('--n', dest='n', type=int, help='number of vertices')
        bench.add_argument('--l', '--ell', dest='ell', type=int, help='number of member graphs (random suite)')
        bench.add_argument('--delta', dest='delta', type=int, help='maximum degree')
        bench.add_argument('--overlap', dest='overlap', type=float, help='edge sharing probability')
        bench.add_argument('--seed', dest='seed', type=int, default=0, help='first seed')
        bench.add_argument(
            '--star-ells', dest='star_ells', type=_int_list, help='ell values of the star suite (default 2,8,18)'
        )
        bench.add_argument('--workers', dest='workers', type=int, help='worker processes')
        bench.add_argument('--max-edges', dest='max_edges', type=int, help='cap of the exact chi column')
        bench.add_argument('--timeout', dest='timeout', type=float, help='time budget of the exact chi column')
        bench.add_argument('-o', '--output', dest='output', required=True, help='CSV output file')
        bench.add_argument(
            '--overwrite', action='store_true', default=False, dest='overwrite', help='overwrite the CSV file'
        )

        # stats
        stats = subparsers.add_parser('stats', help='print the family parameters and the known bounds')
        stats.add_argument('family', help='family JSON file (- for standard input)')

        # probe
        probe = subparsers.add_parser('probe', help='exact chi of random pairs against delta + 1')
        probe.add_argument('--trials', dest='trials', type=int, help='number of pairs')
        probe.add_argument('--n', dest='n', type=int, help='number of vertices')
        probe.add_argument('--delta', dest='delta', type=int, help='maximum degree')
        probe.add_argument('--overlap', dest='overlap', type=float, help='edge sharing probability')
        probe.add_argument('--seed', dest='seed', type=int, default=0, help='first seed')
        probe.add_argument('--max-edges', dest='max_edges', type=int, help='cap on the number of union edges')
        probe.add_argument('--timeout', dest='timeout', type=float, help='time budget per pair')
        probe.add_argument('--artifact-dir', dest='artifact_dir', help='directory receiving the flagged families')

        return parser

    def init_debug(self, args):
        """Init simcolor debug mode."""
        if args.debug:
            logger.setLevel(DEBUG)
        else:
            simplefilter("ignore")

    def parse_args(self, argv=None):
        """Parse command line arguments."""
        args = self.init_args().parse_args(argv)

        # Load the configuration file, only if one is given
        self.config = Config(args.conf_file)

        # Init simcolor debug mode
        self.init_debug(args)

        # Control parameter and exit if it is not OK
        self.args = args
        self.check_args()

        return args

    def check_args(self):
        """Usage errors not caught by argparse."""
        args = self.args
        if args.command == 'generate':
            if args.kind == 'random':
                if args.seed is None:
                    logger.critical("generate random needs --seed")
                    sys.exit(2)
                if args.n is None or args.ell is None:
                    logger.critical("generate random needs --n and --l")
                    sys.exit(2)
            elif args.kind == 'star' and args.ell is None:
                logger.critical("generate star needs --l")
                sys.exit(2)
        if args.command == 'color' and args.sweep_k and args.algo != 'sqrt':
            logger.critical("Option --sweep-k is only available with --algo sqrt")
            sys.exit(2)
        if getattr(args, 'workers', None) is not None and args.workers < 1:
            logger.critical("Option --workers needs a positive number")
            sys.exit(2)

    def get_config(self):
        """Return configuration file object."""
        return self.config

    def get_args(self):
        """Return the arguments."""
        return self.args
