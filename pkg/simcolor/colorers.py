#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Colorers by name, as used by the color and bench commands."""

from typing import Tuple

from simcolor.bounds import BoundCertificate
from simcolor.exceptions import CertificateError
from simcolor.graph_core import GraphFamily, SimultaneousColoring
from simcolor.pair_coloring import color_pair
from simcolor.union_coloring import color_union_sqrt, color_union_trivial
from simcolor.verifier import check_certificate, verify
from simcolor.vizing import color_single

ALGORITHMS = ('sqrt', 'pair', 'trivial', 'vizing')


def color_family(family: GraphFamily, algo: str, sweep_k=False) -> Tuple[SimultaneousColoring, BoundCertificate]:
    """Run the named colorer then check its output with the verifier.

    Raise CertificateError if the coloring is not proper or breaks its bound.
    """
    if algo == 'sqrt':
        coloring, certificate = color_union_sqrt(family, sweep_k=sweep_k)
    elif algo == 'pair':
        coloring, certificate = color_pair(family)
    elif algo == 'trivial':
        coloring, certificate = color_union_trivial(family)
    elif algo == 'vizing':
        coloring, certificate = color_single(family)
    else:
        raise ValueError(f"Unknown algorithm {algo!r} (one of {', '.join(ALGORITHMS)})")

    report = verify(family, coloring)
    if not check_certificate(report, certificate):
        raise CertificateError(
            f"{algo} output rejected: {len(report.violations)} violations, {len(report.uncolored)} uncolored, "
            f"{report.palette_used} colors for a bound of {certificate.palette_bound}"
        )
    return coloring, certificate
