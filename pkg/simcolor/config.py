#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Manage the configuration file."""

import builtins
import os
import sys

from simcolor.globals import ConfigParser, ConfigParserError, NoOptionError, NoSectionError
from simcolor.logger import logger


class Config:
    """This class is used to access/read config file, if it exists.

    Only the file given with -C is read: there is no search path, so every
    reported number stays a function of the command line and its input files.

    :param config_file: the path of the config file
    :type config_file: str or None
    """

    def __init__(self, config_file=None):
        self.config_file = config_file
        self._loaded_config_file = None

        try:
            self.parser = ConfigParser(interpolation=None)
        except TypeError:
            self.parser = ConfigParser()

        self.read()

    def read(self):
        """Read the config file, if it exists. Using defaults otherwise."""
        if self.config_file:
            logger.debug(f'Search simcolor.conf file in {self.config_file}')
            if not os.path.exists(self.config_file):
                logger.critical(f"Configuration file '{self.config_file}' not found")
                sys.exit(2)
            try:
                with builtins.open(self.config_file, encoding='utf-8') as f:
                    self.parser.read_file(f)
                logger.info(f"Read configuration file '{self.config_file}'")
            except (UnicodeDecodeError, ConfigParserError) as err:
                logger.critical(f"Can not read configuration file '{self.config_file}': {err}")
                sys.exit(2)
            self._loaded_config_file = self.config_file

        # Set the default values for section not configured
        self.sections_set_default()

    def sections_set_default(self):
        # Exact oracle
        if not self.parser.has_section('exact'):
            self.parser.add_section('exact')
        self.set_default('exact', 'max_conflict_nodes', '30')
        self.set_default('exact', 'timeout', '60')
        self.set_default('exact', 'brute_force_max_edges', '8')

        # Benchmark
        if not self.parser.has_section('bench'):
            self.parser.add_section('bench')
        self.set_default('bench', 'workers', '1')
        self.set_default('bench', 'instances', '10')
        self.set_default('bench', 'n', '12')
        self.set_default('bench', 'ell', '2')
        self.set_default('bench', 'delta', '3')
        self.set_default('bench', 'overlap', '0.3')

        # Conjecture probe
        if not self.parser.has_section('probe'):
            self.parser.add_section('probe')
        self.set_default('probe', 'trials', '100')
        self.set_default('probe', 'n', '7')
        self.set_default('probe', 'delta', '3')
        self.set_default('probe', 'overlap', '0.5')

        # Random families
        if not self.parser.has_section('random'):
            self.parser.add_section('random')
        self.set_default('random', 'retry_factor', '20')

    @property
    def loaded_config_file(self):
        """Return the loaded configuration file."""
        return self._loaded_config_file

    def as_dict(self):
        """Return the configuration as a dict"""
        dictionary = {}
        for section in self.parser.sections():
            dictionary[section] = {}
            for option in self.parser.options(section):
                dictionary[section][option] = self.parser.get(section, option)
        return dictionary

    def set_default(self, section, option, default):
        """If the option did not exist, create a default value."""
        if not self.parser.has_option(section, option):
            self.parser.set(section, option, default)

    def get_int_value(self, section, option, default=0):
        """Get the int value of an option, if it exists."""
        try:
            return self.parser.getint(section, option)
        except (NoOptionError, NoSectionError):
            return int(default)
        except ValueError as err:
            logger.critical(f"Invalid value for '{option}' in section [{section}] of '{self.config_file}': {err}")
            sys.exit(2)

    def get_float_value(self, section, option, default=0.0):
        """Get the float value of an option, if it exists."""
        try:
            return self.parser.getfloat(section, option)
        except (NoOptionError, NoSectionError):
            return float(default)
        except ValueError as err:
            logger.critical(f"Invalid value for '{option}' in section [{section}] of '{self.config_file}': {err}")
            sys.exit(2)

