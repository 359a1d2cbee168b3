#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""simcolor exceptions.

Library code raises, the commands turn these into exit codes.
"""


class SimcolorError(Exception):
    """Base class for every simcolor error."""


class FamilyError(SimcolorError):
    """Malformed family: loop, out-of-range vertex, duplicate edge, bad JSON..."""


class WrongArity(SimcolorError):
    """The algorithm does not accept this number of member graphs."""


class PaletteExhausted(SimcolorError):
    """Greedy extension found no free color (the caller broke the palette bound)."""


class ConstructionError(SimcolorError):
    """Invalid parameters for an instance generator."""


class OddDelta(ConstructionError):
    pass


class TooFewGraphs(ConstructionError):
    pass


class InstanceTooLarge(SimcolorError):
    """Too many union edges for the exact solvers."""


class UnknownEdge(SimcolorError):
    """The coloring mentions an edge which is not in the union."""


class DigestMismatch(SimcolorError):
    """The coloring was computed for another family."""


class InvariantError(SimcolorError):
    """An internal invariant does not hold. Always a bug."""


class CertificateError(SimcolorError):
    """A colorer produced an invalid coloring or broke its own bound."""
