#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Palette bounds and the certificate attached to every coloring.

Closed forms involve square roots: the certificates only compare integers.
"""

import math
from typing import Optional

from simcolor.logger import logger

try:
    from pydantic.dataclasses import dataclass
except ImportError as e:
    logger.warning(f"Missing Python Lib ({e}), certificates will be skipping data validation")
    from dataclasses import dataclass


@dataclass
class BoundCertificate:
    """What a colorer claims about its output.

    palette_bound is the checkable integer bound for this run, general_bound the
    general bound for (ell, delta) rounded up.
    """

    algorithm: str
    palette_used: int
    palette_bound: int
    general_bound: int
    ell: int
    delta: int
    k: Optional[float] = None

    def holds(self):
        return self.palette_used <= self.palette_bound


def sqrt_threshold(ell: int) -> float:
    """Multiplicity threshold minimizing the sqrt bound: sqrt(ell / 2)."""
    return math.sqrt(ell / 2)


def bound_sqrt(ell: int, delta: int) -> int:
    """ceil(2 sqrt(2 ell) delta - sqrt(2 ell) + 2), never below 0 (edgeless families)."""
    s = math.sqrt(2 * ell)
    return max(0, math.ceil(2 * s * delta - s + 2))


def bound_sqrt_exact(ell: int, delta: int, k: float) -> int:
    """Palette needed by the multiplicity split at threshold k.

    Heavy edges have multiplicity >= ceil(k) so the heavy part has degree at most
    ell*delta // ceil(k) and needs one more color. A light edge lies in at most
    ceil(k) - 1 members, each forbidding 2 (delta - 1) colors, plus one.
    """
    if not k > 0:
        raise ValueError(f"Threshold k must be positive ({k} given)")
    kc = math.ceil(k)
    return ell * delta // kc + 1 + 2 * (kc - 1) * max(delta - 1, 0) + 1


def bound_trivial(ell: int, delta: int) -> int:
    """Edge coloring of the whole union: ell * delta + 1."""
    return ell * delta + 1


def bound_pair(delta: int) -> int:
    """floor(3 delta / 2) + 4 colors for two graphs."""
    if delta < 0:
        raise ValueError(f"Negative maximum degree {delta}")
    return 3 * delta // 2 + 4


def lower_bound_star(ell: int, delta: int) -> int:
    """floor(sqrt(ell / 2)) * delta, reached by the star families."""
    return math.isqrt(ell // 2) * delta
