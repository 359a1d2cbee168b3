#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""CSV interface class for the benchmark rows."""

import csv
import os.path

from simcolor.logger import logger

BENCH_HEADER = [
    'instance',
    'n',
    'ell',
    'delta',
    'union_edges',
    'algorithm',
    'palette_used',
    'palette_bound',
    'exact_chi',
    'wall_time',
    'rss_mb',
    'status',
]


class BenchCsv:
    """This class manages the CSV export of the bench rows.

    A new file gets the header first. An existing file is appended to only if
    its header is the current one.
    """

    def __init__(self, csv_filename, overwrite=False):
        self.csv_filename = csv_filename

        if not os.path.isfile(self.csv_filename) or overwrite:
            # File did not exist, create it
            file_mode = 'w'
            self.old_header = None
        else:
            # A CSV file already exist, append new data
            file_mode = 'a'
            with open_csv_file(self.csv_filename, 'r') as f:
                self.old_header = next(csv.reader(f), None)

        self.csv_file = open_csv_file(self.csv_filename, file_mode)
        self.writer = csv.writer(self.csv_file)
        self.first_line = True
        logger.info(f"Bench rows exported to CSV file: {self.csv_filename}")

    def exit(self):
        """Close the CSV file."""
        self.csv_file.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.exit()

    def update(self, row) -> bool:
        """Write one row (anything with an as_csv() list). Return False if the row was refused."""
        if self.first_line:
            if self.old_header is None:
                # New file, write the header on top on the CSV file
                self.writer.writerow(BENCH_HEADER)
            elif self.old_header != BENCH_HEADER:
                # Header are different, log an error and do not write data
                logger.error("Cannot append data to existing CSV file. Headers are different.")
                logger.debug(f"Old header: {self.old_header}")
                logger.debug(f"New header: {BENCH_HEADER}")
                return False
            # Header are equals (or just written), ready to write data
            self.old_header = None
            self.first_line = False

        self.writer.writerow(row.as_csv())
        self.csv_file.flush()
        return True


def open_csv_file(file_name, file_mode):
    return open(file_name, file_mode, newline='')
