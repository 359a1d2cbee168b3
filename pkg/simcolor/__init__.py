#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Init the simcolor software."""

# Import system libs
import platform
import sys

# Global name
# Version should start and end with a numerical char
# See https://packaging.python.org/specifications/core-metadata/#version
__version__ = '1.0.0'
__author__ = 'simcolor contributors'
__license__ = 'LGPLv3'

# Import simcolor libs
from simcolor.commands import COMMANDS  # noqa: E402
from simcolor.logger import logger  # noqa: E402
from simcolor.main import SimcolorMain  # noqa: E402
from simcolor.timer import Counter  # noqa: E402


def start(config, args):
    """Run the command selected on the command line and return its exit code."""
    start_duration = Counter()

    command = COMMANDS[args.command](config=config, args=args)
    logger.info(f"Start {command.__class__.__name__}")
    ret = command.serve()

    logger.debug(f"{args.command} ended with status {ret} in {start_duration.get():.3f} seconds")
    return ret


def main(argv=None):
    """Main entry point for simcolor.

    Parse the command line, run the command, exit with its status.
    """
    logger.info(f'Start simcolor {__version__}')
    python_impl = platform.python_implementation()
    python_ver = platform.python_version()
    logger.info(f'{python_impl} {python_ver} ({sys.executable}) detected')

    # Options from the command line are read first, then the -C configuration file
    core = SimcolorMain(argv)

    sys.exit(start(config=core.get_config(), args=core.get_args()))
