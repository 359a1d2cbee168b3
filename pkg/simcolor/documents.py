#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""JSON documents: families and colorings.

Family:   {"num_vertices": n, "graphs": [[[u, v], ...], ...]}
Coloring: {"algorithm": ..., "palette_size": p, "colors": [[u, v, c], ...],
           "certificate": {...} or null, "family_digest": "<sha256>"}
"""

from dataclasses import asdict
from typing import Optional

from simcolor.bounds import BoundCertificate
from simcolor.exceptions import FamilyError
from simcolor.globals import json_dumps, json_error_types, json_loads, read_bytes, sha256_hex, write_bytes
from simcolor.graph_core import Edge, GraphFamily, SimultaneousColoring


def family_to_dict(family: GraphFamily) -> dict:
    return {
        'num_vertices': family.num_vertices,
        'graphs': [[list(e) for e in g.edges] for g in family.members],
    }


def family_from_dict(data) -> GraphFamily:
    """Build a family, rejecting loops, out-of-range vertices and duplicated edges."""
    if not isinstance(data, dict):
        raise FamilyError("A family document is a JSON object")
    try:
        num_vertices = data['num_vertices']
        graphs = data['graphs']
    except KeyError as e:
        raise FamilyError(f"Missing key {e} in family document") from None
    if not isinstance(graphs, list) or not all(isinstance(g, list) for g in graphs):
        raise FamilyError("'graphs' must be a list of edge lists")
    return GraphFamily.from_edge_lists(num_vertices, graphs)


def family_dumps(family: GraphFamily) -> bytes:
    """Canonical compact JSON of the family: sorted keys, sorted edges, no whitespace."""
    return json_dumps(family_to_dict(family), sort_keys=True)


def family_digest(family: GraphFamily) -> str:
    return sha256_hex(family_dumps(family))


def _loads(data: bytes, what: str):
    try:
        return json_loads(data)
    except json_error_types() as e:
        raise FamilyError(f"Malformed {what} JSON: {e}") from None


def load_family(path: str) -> GraphFamily:
    try:
        data = read_bytes(path)
    except OSError as e:
        raise FamilyError(f"Cannot read family file: {e}") from None
    return family_from_dict(_loads(data, 'family'))


def write_family(path: Optional[str], family: GraphFamily):
    write_bytes(path, family_dumps(family))


class ColoringDocument:
    """A coloring as written on disk, tied to its family by digest."""

    def __init__(
        self,
        coloring: SimultaneousColoring,
        algorithm: str,
        family_digest: str,
        certificate: Optional[BoundCertificate] = None,
    ):
        self.coloring = coloring
        self.algorithm = algorithm
        self.family_digest = family_digest
        self.certificate = certificate

    @property
    def palette_size(self) -> int:
        return self.coloring.palette_size

    def as_dict(self) -> dict:
        return {
            'algorithm': self.algorithm,
            'palette_size': self.coloring.palette_size,
            'colors': [[e.u, e.v, c] for e, c in sorted(self.coloring.items())],
            'certificate': asdict(self.certificate) if self.certificate is not None else None,
            'family_digest': self.family_digest,
        }

    def dumps(self) -> bytes:
        return json_dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> 'ColoringDocument':
        if not isinstance(data, dict):
            raise FamilyError("A coloring document is a JSON object")
        try:
            triples = data['colors']
            digest = data['family_digest']
        except KeyError as e:
            raise FamilyError(f"Missing key {e} in coloring document") from None
        assignment = {}
        for triple in triples:
            try:
                u, v, c = triple
            except (TypeError, ValueError):
                raise FamilyError(f"Coloring entry {triple!r} is not a [u, v, color] triple") from None
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v, c)) or c < 0:
                raise FamilyError(f"Coloring entry {triple!r} must hold non-negative integers")
            e = Edge.make(u, v)
            if e in assignment:
                raise FamilyError(f"Edge {e.u}-{e.v} is colored twice")
            assignment[e] = c
        top = max(assignment.values(), default=-1) + 1
        palette_size = data.get('palette_size', top)
        if not isinstance(palette_size, int) or isinstance(palette_size, bool) or palette_size < top:
            raise FamilyError(f"Invalid palette_size {palette_size!r} (largest color is {top - 1})")
        certificate = data.get('certificate')
        if certificate is not None:
            try:
                certificate = BoundCertificate(**certificate)
            except (TypeError, ValueError) as e:
                raise FamilyError(f"Invalid certificate: {e}") from None
        return cls(
            SimultaneousColoring(assignment, palette_size),
            algorithm=data.get('algorithm', 'unknown'),
            family_digest=digest,
            certificate=certificate,
        )

    @classmethod
    def load(cls, path: str) -> 'ColoringDocument':
        try:
            data = read_bytes(path)
        except OSError as e:
            raise FamilyError(f"Cannot read coloring file: {e}") from None
        return cls.from_dict(_loads(data, 'coloring'))

    def write(self, path: Optional[str]):
        write_bytes(path, self.dumps())
