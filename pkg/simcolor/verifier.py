#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Independent check of simultaneous colorings and of their certificates."""

from collections import defaultdict
from itertools import combinations
from typing import List

from simcolor.bounds import BoundCertificate
from simcolor.exceptions import UnknownEdge
from simcolor.graph_core import GraphFamily, SimultaneousColoring

try:
    from pydantic.dataclasses import dataclass
except ImportError:
    from dataclasses import dataclass


@dataclass
class Violation:
    """Two edges of one member meeting at vertex with the same color."""

    member_index: int
    vertex: int
    color: int
    edges: tuple

    def as_dict(self):
        return {
            'member_index': self.member_index,
            'vertex': self.vertex,
            'color': self.color,
            'edges': [list(e) for e in self.edges],
        }


@dataclass
class VerifyReport:
    valid: bool
    violations: List[Violation]
    palette_used: int
    uncolored: list

    def as_dict(self):
        return {
            'valid': self.valid,
            'palette_used': self.palette_used,
            'violations': [v.as_dict() for v in self.violations],
            'uncolored': [list(e) for e in self.uncolored],
        }


def verify(family: GraphFamily, coloring: SimultaneousColoring) -> VerifyReport:
    """Check that the restriction of coloring to every member is proper.

    Every violation is reported. Uncolored union edges are listed apart: a partial
    coloring is not an improper one.
    """
    union = family.union
    unknown = [e for e in coloring.assignment if e not in union.membership]
    if unknown:
        e = unknown[0]
        raise UnknownEdge(f"Edge {e.u}-{e.v} is not in the union ({len(unknown)} unknown edges)")

    violations = []
    for i, member in enumerate(family.members):
        for v in range(member.num_vertices):
            by_color = defaultdict(list)
            for e in member.incident(v):
                c = coloring.get(e)
                if c is not None:
                    by_color[c].append(e)
            for c in sorted(by_color):
                for e, f in combinations(by_color[c], 2):
                    violations.append(Violation(member_index=i, vertex=v, color=c, edges=(tuple(e), tuple(f))))

    uncolored = [tuple(e) for e in union.edges if e not in coloring]
    return VerifyReport(
        valid=not violations and not uncolored,
        violations=violations,
        palette_used=coloring.colors_used,
        uncolored=uncolored,
    )


def check_certificate(report: VerifyReport, certificate: BoundCertificate) -> bool:
    """True iff the coloring is valid and stays within the certified palette."""
    return report.valid and report.palette_used <= certificate.palette_bound
