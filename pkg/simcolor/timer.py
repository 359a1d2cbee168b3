#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""The timer manager."""

from time import monotonic, perf_counter


class Timer:
    """The timer class. A simple chronometer on the monotonic clock.

    A duration of None never finishes.
    """

    def __init__(self, duration):
        self.duration = duration
        self.start()

    def start(self):
        self.target = None if self.duration is None else monotonic() + self.duration

    def finished(self):
        return self.target is not None and monotonic() > self.target


class Counter:
    """The counter class."""

    def __init__(self):
        self.start()

    def start(self):
        self.target = perf_counter()

    def get(self):
        return perf_counter() - self.target
