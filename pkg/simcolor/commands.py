#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""The simcolor commands.

Every command is a pure function of its input files and flags (plus the
optional -C configuration file). run() returns the exit code.
"""

from simcolor.bench import DEFAULT_STAR_ELLS, build_suite, run_bench
from simcolor.bounds import bound_pair, bound_sqrt, bound_trivial, lower_bound_star
from simcolor.colorers import color_family
from simcolor.constructions import random_family, star_family, star_three
from simcolor.documents import ColoringDocument, family_digest, load_family, write_family
from simcolor.exact_oracle import brute_force_chi, exact_chi, probe_pair_conjecture
from simcolor.exceptions import (
    CertificateError,
    ConstructionError,
    DigestMismatch,
    FamilyError,
    InstanceTooLarge,
    UnknownEdge,
    WrongArity,
)
from simcolor.exports.bench_csv import BenchCsv
from simcolor.globals import EXIT_INVALID, EXIT_OK, EXIT_USAGE, json_dumps, write_bytes
from simcolor.logger import logger
from simcolor.verifier import check_certificate, verify

USAGE_ERRORS = (FamilyError, WrongArity, ConstructionError, InstanceTooLarge, DigestMismatch, UnknownEdge)


class SimcolorCommand:
    """Base class of the commands."""

    def __init__(self, config=None, args=None):
        self.config = config
        self.args = args

    def option(self, section, option, value, kind=int):
        """The command line value when given, else the configuration one."""
        if value is not None:
            return value
        if kind is float:
            return self.config.get_float_value(section, option)
        return self.config.get_int_value(section, option)

    def print_json(self, data):
        write_bytes(None, json_dumps(data))

    def run(self) -> int:
        raise NotImplementedError

    def serve(self) -> int:
        """Run the command, turning the library errors into exit codes."""
        try:
            return self.run()
        except USAGE_ERRORS as e:
            logger.critical(f"{e.__class__.__name__}: {e}")
            return EXIT_USAGE
        except CertificateError as e:
            logger.critical(f"Internal verification failed: {e}")
            return EXIT_INVALID
        except OSError as e:
            logger.critical(f"{e.__class__.__name__}: {e}")
            return EXIT_USAGE


class GenerateCommand(SimcolorCommand):
    def run(self):
        args = self.args
        if args.kind == 'star':
            family = star_family(args.ell, args.delta, pad=args.pad)
        elif args.kind == 'star3':
            family = star_three(args.delta)
        else:
            retry_factor = self.config.get_int_value('random', 'retry_factor', 20)
            family = random_family(args.n, args.ell, args.delta, args.overlap, args.seed, retry_factor=retry_factor)
        write_family(args.output, family)
        logger.info(f"Generated {args.kind} family {family}")
        return EXIT_OK


class ColorCommand(SimcolorCommand):
    def run(self):
        args = self.args
        family = load_family(args.family)
        coloring, certificate = color_family(family, args.algo, sweep_k=args.sweep_k)
        document = ColoringDocument(coloring, args.algo, family_digest(family), certificate)
        document.write(args.output)
        logger.info(f"Colored {family} with {args.algo}: {certificate}")
        return EXIT_OK


class ExactCommand(SimcolorCommand):
    def run(self):
        args = self.args
        family = load_family(args.family)
        max_nodes = self.option('exact', 'max_conflict_nodes', args.max_edges)
        timeout = self.option('exact', 'timeout', args.timeout, float)
        result = exact_chi(family, max_conflict_nodes=max_nodes, time_budget=timeout, allow_oversize=args.allow_timeout)

        output = result.as_dict()
        if args.brute_force:
            output['brute_force_chi'] = brute_force_chi(
                family, max_edges=self.config.get_int_value('exact', 'brute_force_max_edges', 8)
            )
        if args.output is not None:
            document = ColoringDocument(result.optimal_coloring, 'exact', family_digest(family))
            document.write(args.output)
        self.print_json(output)
        return EXIT_OK


class VerifyCommand(SimcolorCommand):
    def run(self):
        args = self.args
        family = load_family(args.family)
        document = ColoringDocument.load(args.coloring)
        digest = family_digest(family)
        if document.family_digest != digest:
            raise DigestMismatch(f"The coloring was computed for family {document.family_digest}, not {digest}")

        report = verify(family, document.coloring)
        output = report.as_dict()
        valid = report.valid
        if document.certificate is not None:
            output['certificate_ok'] = check_certificate(report, document.certificate)
            valid = valid and output['certificate_ok']
        self.print_json(output)
        return EXIT_OK if valid else EXIT_INVALID


class BenchCommand(SimcolorCommand):
    def run(self):
        args = self.args
        jobs = build_suite(
            args.suite,
            instances=self.option('bench', 'instances', args.instances),
            n=self.option('bench', 'n', args.n),
            ell=self.option('bench', 'ell', args.ell),
            delta=self.option('bench', 'delta', args.delta),
            overlap=self.option('bench', 'overlap', args.overlap, float),
            seed=args.seed,
            star_ells=args.star_ells or DEFAULT_STAR_ELLS,
            max_conflict_nodes=self.option('exact', 'max_conflict_nodes', args.max_edges),
            time_budget=self.option('exact', 'timeout', args.timeout, float),
        )
        rows = run_bench(jobs, workers=self.option('bench', 'workers', args.workers))
        with BenchCsv(args.output, overwrite=args.overwrite) as export:
            for row in rows:
                if not export.update(row):
                    return EXIT_USAGE
        return EXIT_OK


class StatsCommand(SimcolorCommand):
    def run(self):
        family = load_family(self.args.family)
        union = family.union
        ell, delta = family.ell, family.delta
        output = {
            'n': family.num_vertices,
            'ell': ell,
            'delta': delta,
            'union_edges': len(union.edges),
            'union_max_degree': union.base.max_degree,
            'multiplicity_histogram': {str(m): c for m, c in union.multiplicity_histogram().items()},
            'lower_bound_star': lower_bound_star(ell, delta),
            'upper_bound': min(bound_sqrt(ell, delta), bound_trivial(ell, delta)),
            'bound_sqrt': bound_sqrt(ell, delta),
            'bound_trivial': bound_trivial(ell, delta),
        }
        if ell == 2:
            output['bound_pair'] = bound_pair(delta)
        self.print_json(output)
        return EXIT_OK


class ProbeCommand(SimcolorCommand):
    def run(self):
        args = self.args
        report = probe_pair_conjecture(
            trials=self.option('probe', 'trials', args.trials),
            n=self.option('probe', 'n', args.n),
            delta=self.option('probe', 'delta', args.delta),
            overlap=self.option('probe', 'overlap', args.overlap, float),
            seed=args.seed,
            max_conflict_nodes=self.option('exact', 'max_conflict_nodes', args.max_edges),
            time_budget=self.option('exact', 'timeout', args.timeout, float),
            artifact_dir=args.artifact_dir,
        )
        self.print_json(report.as_dict())
        return EXIT_OK


COMMANDS = {
    'generate': GenerateCommand,
    'color': ColorCommand,
    'exact': ExactCommand,
    'verify': VerifyCommand,
    'bench': BenchCommand,
    'stats': StatsCommand,
    'probe': ProbeCommand,
}
